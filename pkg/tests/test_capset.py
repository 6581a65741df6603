import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sepcodes.capset import (
    AffineSpace,
    CapError,
    capset_exact,
    capset_greedy,
    capset_parse,
    capset_serialize,
    collinear,
    find_collinear_triple,
    is_cap,
    parabola_points,
    point_order,
)
from sepcodes.field import VectorElement, field_of_order


def V(pts, q):
    f = field_of_order(q)
    return [VectorElement(p, f) for p in pts]


def test_collinear_examples():
    assert collinear(*V([(0, 0), (1, 1), (2, 2)], 3))
    assert not collinear(*V([(0, 0), (1, 0), (0, 1)], 3))
    assert collinear(*V([(1, 2), (3, 6), (5, 3)], 7))
    with pytest.raises(CapError):
        collinear(*V([(0, 0), (0, 0), (1, 1)], 3))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=3, max_size=3, unique=True))
def test_collinear_symmetric(pts):
    vs = V(pts, 5)
    ref = collinear(*vs)
    assert all(collinear(*p) == ref for p in itertools.permutations(vs))


def _cross_collinear(x, y, z, p):
    # independent 2-D test: det[y-x, z-x] == 0 mod p
    return ((y[0] - x[0]) * (z[1] - x[1]) - (y[1] - x[1]) * (z[0] - x[0])) % p == 0


@pytest.mark.parametrize("p", [3, 5, 7])
def test_collinear_vs_determinant(p):
    pts = list(itertools.product(range(p), repeat=2))
    for x, y, z in itertools.combinations(pts[: 3 * p], 3):
        assert collinear(*V([x, y, z], p)) == _cross_collinear(x, y, z, p)


def test_parabola_is_cap():
    for q in (3, 5, 7, 9, 13):
        f = field_of_order(q)
        pts = parabola_points(f)
        assert len(pts) == q
        if q % 2:
            assert is_cap(f, pts)


@pytest.mark.parametrize("q,n,order", [(7, 2, "canonical"), (7, 2, "parabola"), (5, 3, "random"), (13, 2, "random")])
def test_greedy_is_cap(q, n, order):
    f = field_of_order(q)
    cap = capset_greedy(f, n, order=order, seed=3)
    assert is_cap(f, cap.points)
    # maximal: every other point closes a line
    for p in point_order(f, n):
        if p not in cap.points:
            assert not is_cap(f, cap.points + (p,))


def test_greedy_parabola_size():
    assert len(capset_greedy(field_of_order(7), 2, order="parabola")) == 7
    assert capset_greedy(field_of_order(7), 1).points == ((0,), (1,))


def _brute_force_max_cap(q, n):
    """Unpruned: largest k with some k-subset free of collinear triples."""
    f = field_of_order(q)
    space = AffineSpace(f, n)
    N = len(space)
    lines = set()
    for i, j in itertools.combinations(range(N), 2):
        lines.add(space.line_mask(i, j))
    best = min(N, 2)
    for k in range(3, N + 1):
        found = False
        for sub in itertools.combinations(range(N), k):
            m = 0
            for i in sub:
                m |= 1 << i
            if all(bin(m & L).count("1") < 3 for L in lines):
                found = True
                break
        if not found:
            break
        best = k
    return best


@pytest.mark.parametrize("q,n,expected", [(3, 2, 4), (5, 2, 6), (2, 1, 2), (3, 1, 2), (5, 1, 2), (7, 1, 2), (2, 2, 4), (3, 3, 9)])
def test_exact_sizes(q, n, expected):
    cap = capset_exact(field_of_order(q), n)
    assert len(cap) == expected and cap.optimal
    assert is_cap(field_of_order(q), cap.points)


@pytest.mark.parametrize("q,n", [(3, 2), (5, 2), (2, 2), (3, 1), (7, 1)])
def test_exact_matches_brute_force(q, n):
    assert len(capset_exact(field_of_order(q), n)) == _brute_force_max_cap(q, n)


def test_exact_budget():
    cap = capset_exact(field_of_order(7), 2, budget=5)
    assert cap.optimal is False
    assert is_cap(field_of_order(7), cap.points)


def test_find_collinear_triple():
    f = field_of_order(5)
    assert find_collinear_triple(f, [(0, 0), (1, 0), (0, 1)]) is None
    assert find_collinear_triple(f, [(0, 0), (1, 1), (0, 1), (3, 3)]) == ((0, 0), (1, 1), (3, 3))


def test_file_roundtrip():
    f = field_of_order(7)
    cap = capset_greedy(f, 2, order="parabola")
    text = capset_serialize(cap)
    back = capset_parse(text)
    assert back.points == cap.points and back.dim == 2 and back.base.order == 7


@pytest.mark.parametrize("text", ["", "7 2\n", "7 2 2\n0 0\n", "7 2 1\n0 9\n", "6 1 1\n0\n", "7 1 2\n0\n0\n"])
def test_file_errors(text):
    with pytest.raises(CapError):
        capset_parse(text)


def test_point_order_errors():
    f = field_of_order(3)
    with pytest.raises(CapError):
        point_order(f, 3, "parabola")
    with pytest.raises(CapError):
        point_order(f, 1, "sideways")
    with pytest.raises(CapError):
        point_order(f, 1, [(0,), (1,)])
