import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sepcodes.field import (
    FieldError,
    VectorElement,
    field_create,
    field_of_order,
    is_irreducible,
    primitive_element,
    prime_power,
    sixth_root_of_unity,
    vector_view,
)

SMALL_ORDERS = [q for q in range(2, 65) if prime_power(q)]


def test_create_examples():
    assert field_create(7).modulus == (0, 1)
    assert field_create(2, 2).modulus == (1, 1, 1)
    assert field_create(3, 2, (1, 0, 1)).order == 9


def test_create_errors():
    with pytest.raises(FieldError):
        field_create(6)
    with pytest.raises(FieldError):
        field_create(3, 2, (2, 0, 1))  # x^2 + 2 = (x-1)(x+1) over F_3
    with pytest.raises(FieldError):
        field_create(3, 2, (1, 0, 2))  # not monic
    with pytest.raises(FieldError):
        field_of_order(12)


def _irreducible_by_roots(poly, p):
    # degree 2 and 3: irreducible iff no root
    return all(sum(c * x**i for i, c in enumerate(poly)) % p for x in range(p))


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("deg", [2, 3])
def test_irreducibility_against_root_test(p, deg):
    for low in itertools.product(range(p), repeat=deg):
        poly = low + (1,)
        assert is_irreducible(poly, p) == _irreducible_by_roots(poly, p)


def test_arithmetic_examples():
    f7 = field_of_order(7)
    assert (f7.element(3) * f7.element(5)).value == 1
    assert f7.element(3).inverse().value == 5
    f4 = field_create(2, 2)
    x = f4.element((0, 1))
    assert (x * x).coeffs == (1, 1)
    with pytest.raises(ZeroDivisionError):
        f7.zero.inverse()
    with pytest.raises(FieldError):
        f7.one + f4.one


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    f = field_of_order(q)
    el = list(f.elements())
    zero, one = f.zero, f.one
    for a in el:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if not a.is_zero():
            assert a * a.inverse() == one and a.inverse() * a == one
    # commutativity everywhere, associativity/distributivity on a sample grid
    for a, b in itertools.product(el, repeat=2):
        assert a + b == b + a and a * b == b * a
        assert f.add(a.value, b.value) == (a + b).value
        assert f.mul(a.value, b.value) == (a * b).value
    step = max(1, q // 8)
    sample = el[::step]
    for a, b, c in itertools.product(sample, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("q", [q for q in SMALL_ORDERS if q >= 3])
def test_primitive_generates(q):
    f = field_of_order(q)
    g = primitive_element(f)
    powers = {(g**k).value for k in range(q - 1)}
    assert powers == set(range(1, q))


def test_primitive_examples():
    assert primitive_element(field_of_order(7)).value == 3
    assert primitive_element(field_of_order(3)).value == 2
    assert primitive_element(field_of_order(4)).coeffs == (0, 1)


@pytest.mark.parametrize("q", [7, 13, 19, 25, 31, 37, 43, 49])
def test_sixth_root(q):
    a = sixth_root_of_unity(field_of_order(q))
    assert (a**6).value == 1
    assert all((a**k).value != 1 for k in range(1, 6))
    assert (a * a - a + a.spec.one).is_zero()


def test_sixth_root_examples():
    assert sixth_root_of_unity(field_of_order(7)).value == 3
    assert sixth_root_of_unity(field_of_order(13)).value == 4
    with pytest.raises(FieldError):
        sixth_root_of_unity(field_of_order(5))


def test_vector_view_gf49_coefficients():
    big, base = field_of_order(49), field_of_order(7)
    v = vector_view(big, base)
    for a, b in itertools.product(range(7), repeat=2):
        assert v.to_vector(big.element((b, a))).components == (b, a)


def test_vector_view_identity():
    f = field_of_order(7)
    v = vector_view(f, f)
    assert all(v.to_vector(x).components == (x,) for x in range(7))


@pytest.mark.parametrize("big_q,base_q", [(9, 3), (49, 7), (16, 4), (64, 4), (64, 8)])
def test_vector_view_linear(big_q, base_q):
    big, base = field_of_order(big_q), field_of_order(base_q)
    v = vector_view(big, base)
    for x in range(big_q):
        assert v.from_vector(v.to_vector(x)).value == x
    for x, y in itertools.product(range(big_q), repeat=2):
        s = v.to_vector((big.element(x) + big.element(y)).value)
        assert s == v.to_vector(x) + v.to_vector(y)
    for lam in range(base_q):
        e = v.embed(lam)
        for x in range(big_q):
            assert v.to_vector((e * big.element(x)).value) == v.to_vector(x).scale(lam)


def test_vector_view_incompatible():
    with pytest.raises(FieldError):
        vector_view(field_of_order(8), field_of_order(4))


def test_vector_element_range():
    with pytest.raises(FieldError):
        VectorElement((7,), field_of_order(7))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([4, 8, 9, 25, 27, 49]), st.data())
def test_inverse_property(q, data):
    f = field_of_order(q)
    a = f.element(data.draw(st.integers(1, q - 1)))
    b = f.element(data.draw(st.integers(1, q - 1)))
    assert (a * b) / b == a
    assert (a * b).inverse() == a.inverse() * b.inverse()
