"""Arithmetic over GF(p^m) in polynomial-coefficient form.

Elements are coefficient vectors (constant term first) reduced modulo a monic
irreducible polynomial.  Every element also has an integer encoding
``sum(coeffs[i] * p**i)``, which is what files and codes use as the symbol.
"""

from __future__ import annotations

import itertools
import numbers
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` and p prime, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    return (p, m) if r == 1 else None


# -- polynomials over F_p: tuples of ints, constant term first ---------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial modulus is zero")
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _trim(a)
    return a


def _monic_polys(p: int, degree: int) -> Iterator[tuple[int, ...]]:
    # ordered by the integer encoding of the non-leading coefficients
    for k in range(p**degree):
        low = []
        for _ in range(degree):
            k, r = divmod(k, p)
            low.append(r)
        yield tuple(low) + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = tuple(_trim([c % p for c in poly]))
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _polymod(poly, f, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    for f in _monic_polys(p, m):
        if is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) given by a monic irreducible ``modulus`` of degree m."""

    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.m

    def __repr__(self) -> str:
        return f"FieldSpec(GF({self.order}), modulus={self.modulus})"

    # element construction ---------------------------------------------------

    def element(self, value: int | Sequence[int]) -> FieldElement:
        """Build an element from its integer encoding or a coefficient list."""
        if isinstance(value, numbers.Integral) and not isinstance(value, bool):
            value = int(value)
            if not 0 <= value < self.order:
                raise FieldError(f"{value} is not an element of GF({self.order})")
            coeffs = []
            for _ in range(self.m):
                value, r = divmod(value, self.p)
                coeffs.append(r)
            return FieldElement(tuple(coeffs), self)
        coeffs = list(value)
        if len(coeffs) > self.m:
            coeffs = _polymod(coeffs, self.modulus, self.p)
        if any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(f"coefficients {tuple(value)} out of range for p={self.p}")
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElement(tuple(coeffs), self)

    def elements(self) -> Iterator[FieldElement]:
        """All elements in canonical order (increasing integer encoding)."""
        for v in range(self.order):
            yield self.element(v)

    @property
    def zero(self) -> FieldElement:
        return self.element(0)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    # integer-encoded arithmetic, table driven for small fields --------------

    @cached_property
    def _tables(self) -> tuple[list[list[int]], list[list[int]]]:
        q = self.order
        elems = list(self.elements())
        add = [[(a + b).value for b in elems] for a in elems]
        mul = [[(a * b).value for b in elems] for a in elems]
        return add, mul

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return self._tables[0][a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return self.element(a).__neg__().value

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        return self._tables[1][a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self.element(a).inverse().value


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]
    spec: FieldSpec = field(repr=False)

    @property
    def value(self) -> int:
        """Positional integer encoding ``sum(coeffs[i] * p**i)``."""
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.spec.p + c
        return v

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"GF({self.spec.order})[{self.value}]"

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine field element with {type(other).__name__}")
        if other.spec != self.spec:
            raise FieldError(f"mismatched fields: {self.spec} vs {other.spec}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.spec.p
        return FieldElement(tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)), self.spec)

    def __neg__(self) -> FieldElement:
        p = self.spec.p
        return FieldElement(tuple(-a % p for a in self.coeffs), self.spec)

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self + (-other)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p, m = self.spec.p, self.spec.m
        prod = [0] * (2 * m - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return self.spec.element(_polymod(prod, self.spec.modulus, p))

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.spec.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # a^(q-2) = a^-1 in the multiplicative group of order q-1
        return self ** (self.spec.order - 2)

    def order(self) -> int:
        """Multiplicative order."""
        if self.is_zero():
            raise FieldError("zero has no multiplicative order")
        n = self.spec.order - 1
        k = n
        for r in _prime_factors(n):
            while k % r == 0 and (self ** (k // r)).value == 1:
                k //= r
        return k


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def field_create(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Create GF(p^m); picks the smallest monic irreducible when no modulus is given."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if modulus is None:
        return FieldSpec(p, m, smallest_irreducible(p, m))
    mod = tuple(c % p for c in modulus)
    if len(mod) != m + 1 or mod[-1] != 1:
        raise FieldError(f"modulus must be monic of degree {m}: {tuple(modulus)}")
    if not is_irreducible(mod, p):
        raise FieldError(f"modulus {tuple(modulus)} is reducible over F_{p}")
    return FieldSpec(p, m, mod)


def field_of_order(q: int) -> FieldSpec:
    pm = prime_power(q)
    if pm is None:
        raise FieldError(f"{q} is not a prime power")
    return field_create(*pm)


def primitive_element(spec: FieldSpec) -> FieldElement:
    """Smallest generator of the multiplicative group, in canonical order."""
    if spec.order < 3:
        raise FieldError("primitive_element requires a field of order >= 3")
    for v in range(1, spec.order):
        e = spec.element(v)
        if e.order() == spec.order - 1:
            return e
    raise FieldError("no primitive element found")  # pragma: no cover


def sixth_root_of_unity(spec: FieldSpec) -> FieldElement:
    """Smallest alpha of multiplicative order 6; a root of x^2 - x + 1.

    Exists iff the field order is 1 mod 6.
    """
    if spec.order % 6 != 1:
        raise FieldError(f"GF({spec.order}) has no primitive 6th root of unity (order not 1 mod 6)")
    for v in range(2, spec.order):
        a = spec.element(v)
        if (a * a - a + spec.one).is_zero():
            return a
    raise FieldError("no 6th root of unity found")  # pragma: no cover


@dataclass(frozen=True)
class VectorElement:
    """A point of F_{q1}^n, components stored as integer encodings over ``base``."""

    components: tuple[int, ...]
    base: FieldSpec = field(repr=False)

    def __post_init__(self):
        for c in self.components:
            if not 0 <= c < self.base.order:
                raise FieldError(f"component {c} outside GF({self.base.order})")

    def __add__(self, other: VectorElement) -> VectorElement:
        f = self.base
        return VectorElement(tuple(f.add(a, b) for a, b in zip(self.components, other.components)), f)

    def __sub__(self, other: VectorElement) -> VectorElement:
        f = self.base
        return VectorElement(tuple(f.sub(a, b) for a, b in zip(self.components, other.components)), f)

    def scale(self, s: int) -> VectorElement:
        f = self.base
        return VectorElement(tuple(f.mul(s, a) for a in self.components), f)


class VectorView:
    """F_{q1}-linear bijection between GF(q1^n) and F_{q1}^n.

    The basis is ``1, x, ..., x^(n-1)`` where x is the generator of the big
    field's polynomial representation, and the base field is identified with
    the subfield of the big field through a root of its modulus.  Over a prime
    base the view is just the coefficient vector.
    """

    def __init__(self, big: FieldSpec, base: FieldSpec):
        if big.p != base.p or big.m % base.m:
            raise FieldError(f"GF({big.order}) is not an extension of GF({base.order})")
        self.big = big
        self.base = base
        self.n = big.m // base.m
        self.embedding = self._embed_base()
        x = big.element((0, 1)) if big.m > 1 else big.one
        basis = [x**i for i in range(self.n)]
        self._to_vec: dict[int, tuple[int, ...]] = {}
        self._from_vec: dict[tuple[int, ...], int] = {}
        for comps in itertools.product(range(base.order), repeat=self.n):
            acc = big.zero
            for lam, b in zip(comps, basis):
                acc = acc + self.embedding[lam] * b
            self._to_vec[acc.value] = comps
            self._from_vec[comps] = acc.value
        if len(self._to_vec) != big.order:
            raise FieldError("basis is not independent over the subfield")  # pragma: no cover

    def _embed_base(self) -> list[FieldElement]:
        big, base = self.big, self.base
        if base.m == 1:
            return [big.element(v) for v in range(base.order)]
        # send the base generator to the smallest root of its modulus in big
        for v in range(big.order):
            r = big.element(v)
            acc = big.zero
            for c in reversed(base.modulus):
                acc = acc * r + big.element(c)
            if acc.is_zero():
                break
        else:  # pragma: no cover
            raise FieldError("base modulus has no root in the extension")
        table = []
        for v in range(base.order):
            coeffs = base.element(v).coeffs
            acc = big.zero
            for c in reversed(coeffs):
                acc = acc * r + big.element(c)
            table.append(acc)
        return table

    def embed(self, a: FieldElement | int) -> FieldElement:
        """Image of a base-field element inside the big field."""
        return self.embedding[int(a)]

    def to_vector(self, a: FieldElement | int) -> VectorElement:
        return VectorElement(self._to_vec[int(a)], self.base)

    def from_vector(self, v: VectorElement | Sequence[int]) -> FieldElement:
        comps = tuple(v.components) if isinstance(v, VectorElement) else tuple(v)
        try:
            return self.big.element(self._from_vec[comps])
        except KeyError:
            raise FieldError(f"{comps} is not a vector of F_{self.base.order}^{self.n}") from None


def vector_view(big: FieldSpec, base: FieldSpec) -> VectorView:
    return VectorView(big, base)
