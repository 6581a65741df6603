"""Difference-matrix codes and the cap-set construction of 3-separable codes.

A (q,3,1) difference matrix D has rows 0, (0, 1, eps, ..., eps^(q-2)) and
alpha times the second row.  Restricting D to the columns whose second-row
entry lies in S and translating by every g in F_q gives a (3, q|S|, q) code
that is always 2-frameproof.  When q = q1^n, alpha is a primitive 6th root of
unity in F_{q1}, and S is a cap of F_{q1}^n, the code is also 3-separable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .capset import CapSet, capset_greedy, find_collinear_triple
from .code import Code
from .field import (
    FieldElement,
    FieldError,
    FieldSpec,
    field_create,
    prime_power,
    primitive_element,
    sixth_root_of_unity,
    vector_view,
)


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class DifferenceMatrix:
    spec: FieldSpec
    rows: tuple[tuple[FieldElement, ...], ...]
    alpha: FieldElement
    epsilon: FieldElement | None = None

    def int_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(e.value for e in r) for r in self.rows)


@dataclass(frozen=True)
class BaseMatrix:
    """The restriction N = D|_S; columns are (0, x, alpha*x) for x in S."""

    spec: FieldSpec
    columns: tuple[tuple[FieldElement, FieldElement, FieldElement], ...]

    @property
    def s(self) -> int:
        return len(self.columns)

    def int_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(c[i].value for c in self.columns) for i in range(3))


def _as_element(spec: FieldSpec, a) -> FieldElement:
    if isinstance(a, FieldElement):
        if a.spec != spec:
            raise FieldError(f"{a!r} is not an element of GF({spec.order})")
        return a
    return spec.element(int(a))


def difference_matrix(spec: FieldSpec, alpha) -> DifferenceMatrix:
    if spec.order < 3:
        raise ConstructionError(f"a (q,3,1) difference matrix needs q >= 3, got q = {spec.order}")
    alpha = _as_element(spec, alpha)
    if alpha.value in (0, 1):
        raise ConstructionError("alpha must differ from 0 and 1")
    eps = primitive_element(spec)
    row2 = [spec.zero] + [eps**k for k in range(spec.order - 1)]
    rows = (
        tuple(spec.zero for _ in row2),
        tuple(row2),
        tuple(alpha * x for x in row2),
    )
    dm = DifferenceMatrix(spec, rows, alpha, eps)
    ok, pair = dm_validate(dm.int_rows(), spec)
    if not ok:  # pragma: no cover - holds by construction
        raise ConstructionError(f"difference property fails for rows {pair}")
    return dm


def dm_validate(rows: Sequence[Sequence[int]], spec: FieldSpec) -> tuple[bool, tuple[int, int] | None]:
    """Check every ordered row pair's differences hit each element of F_q exactly once.

    Returns ``(ok, failing_pair)`` with 1-based row numbers.
    """
    q = spec.order
    rows = [[int(v) for v in r] for r in rows]
    if len(rows) != 3 or any(len(r) != q for r in rows):
        raise ConstructionError(f"expected a 3 x {q} array")
    full = set(range(q))
    for s, t in itertools.permutations(range(3), 2):
        diffs = [spec.sub(a, b) for a, b in zip(rows[s], rows[t])]
        if set(diffs) != full:
            return False, (s + 1, t + 1)
    return True, None


def restrict(dm: DifferenceMatrix, S: Iterable) -> BaseMatrix:
    spec = dm.spec
    wanted = set()
    for x in S:
        v = x.value if isinstance(x, FieldElement) else int(x)
        if not 0 <= v < spec.order:
            raise ConstructionError(f"{v} is not an element of GF({spec.order})")
        wanted.add(v)
    if not wanted:
        raise ConstructionError("S must be nonempty")
    cols = {col[1].value: col for col in zip(*dm.rows) if col[1].value in wanted}
    return BaseMatrix(spec, tuple(cols[v] for v in sorted(cols)))


def generate(base: BaseMatrix) -> Code:
    """All translates N + g, g-major then base column, as integer symbols."""
    spec = base.spec
    words = []
    for g in range(spec.order):
        for col in base.columns:
            words.append(tuple(spec.add(e.value, g) for e in col))
    return Code.from_codewords(words, spec.order, 3)


# -- admissibility of S -------------------------------------------------------

@dataclass(frozen=True)
class Admissibility:
    ok: bool
    witness: dict | None = None
    reduced: bool = False

    def __bool__(self) -> bool:
        return self.ok


def _triangle(S: list[int], f: FieldSpec, a: int) -> dict | None:
    """Distinct elements of S related by one of the three Delta equations."""
    am1 = f.sub(a, 1)
    ainv = f.inv(a)
    members = set(S)

    def solve(p, r):  # p + (a-1) r = a * unknown
        return f.mul(ainv, f.add(p, f.mul(am1, r)))

    # x + (a-1)w = a y ;  y + (a-1)w = a x ;  x + (a-1)y = a w
    for eq, names in (("Delta1", ("x", "w", "y")), ("Delta2", ("y", "w", "x")), ("Delta3", ("x", "y", "w"))):
        for p, r in itertools.permutations(S, 2):
            u = solve(p, r)
            if u in members and u != p and u != r:
                return {"equation": eq, names[0]: p, names[1]: r, names[2]: u}
    return None


def _nabla_system(S: list[int], f: FieldSpec, a: int) -> dict | None:
    """A solution of the two-equation Nabla system with {x,y,z} and {u,v,w} disjoint.

    For each (z, u) the first equation is solved for y over every x, the
    second for v over every w; membership is a set lookup.
    """
    members = set(S)
    am1 = f.sub(a, 1)
    inv_am1 = f.inv(am1)
    k1 = f.mul(a, am1)                       # a(a-1)
    k2 = f.add(f.sub(f.mul(a, a), a), 1)     # a^2 - a + 1

    def solve(p, r, s):  # a*p + a(a-1)*r - (a^2-a+1)*s = (a-1) * unknown
        return f.mul(inv_am1, f.sub(f.add(f.mul(a, p), f.mul(k1, r)), f.mul(k2, s)))

    for z, u in itertools.permutations(S, 2):
        first = []
        for x in S:
            y = solve(x, z, u)
            if y in members and u not in (x, y):
                first.append((x, y))
        if not first:
            continue
        for w in S:
            v = solve(w, u, z)
            if v not in members or z in (v, w):
                continue
            for x, y in first:
                if not {x, y, z} & {u, v, w}:
                    return {"equation": "Nabla", "x": x, "y": y, "z": z, "u": u, "v": v, "w": w}
    return None


def nabla_system_naive(S: Sequence[int], f: FieldSpec, a: int) -> dict | None:
    """|S|^6 scan of the same system; reference for small S."""
    am1 = f.sub(a, 1)
    k1 = f.mul(a, am1)
    k2 = f.add(f.sub(f.mul(a, a), a), 1)

    def lhs(p, r):
        return f.add(f.mul(a, p), f.mul(k1, r))

    def rhs(p, r):
        return f.add(f.mul(am1, p), f.mul(k2, r))

    for x, y, z, u, v, w in itertools.product(S, repeat=6):
        if {x, y, z} & {u, v, w}:
            continue
        if lhs(x, z) == rhs(y, u) and lhs(w, u) == rhs(v, z):
            return {"equation": "Nabla", "x": x, "y": y, "z": z, "u": u, "v": v, "w": w}
    return None


def admissible(S: Iterable, alpha, spec: FieldSpec) -> Admissibility:
    """Whether the code generated by D|_S avoids the algebraic Delta and Nabla conditions.

    When alpha^2 - alpha + 1 = 0 the Nabla system splits into two copies of
    the triangle equation, so only the triangle test runs (``reduced=True``).
    """
    alpha = _as_element(spec, alpha)
    a = alpha.value
    if a in (0, 1):
        raise ConstructionError("alpha must differ from 0 and 1")
    elems = sorted({x.value if isinstance(x, FieldElement) else int(x) for x in S})
    w = _triangle(elems, spec, a)
    if w is not None:
        return Admissibility(False, w)
    if (alpha * alpha - alpha + spec.one).is_zero():
        return Admissibility(True, None, reduced=True)
    w = _nabla_system(elems, spec, a)
    return Admissibility(w is None, w)


# -- the cap-set pipeline -------------------------------------------------------

@dataclass(frozen=True)
class Provenance:
    q1: int
    n: int
    q: int
    alpha: int
    alpha_in_q: int
    cap_source: str
    cap_points: tuple[tuple[int, ...], ...]
    S: tuple[int, ...]
    M: int
    modulus_q1: tuple[int, ...]
    modulus_q: tuple[int, ...]
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "q1": self.q1,
            "n": self.n,
            "q": self.q,
            "alpha": self.alpha,
            "alpha_in_q": self.alpha_in_q,
            "modulus_q1": list(self.modulus_q1),
            "modulus_q": list(self.modulus_q),
            "cap_source": self.cap_source,
            "cap_size": len(self.cap_points),
            "cap_points": [list(p) for p in self.cap_points],
            "S": list(self.S),
            "M": self.M,
            **self.extra,
        }


def build_ssc(q1: int, n: int, cap: CapSet | Sequence[Sequence[int]] | None = None) -> tuple[Code, Provenance]:
    """A (3, q1^n * |S|, q1^n) strongly 3-separable code from a cap S of F_{q1}^n."""
    pm = prime_power(q1)
    if pm is None:
        raise ConstructionError(f"q1 = {q1} is not a prime power")
    if q1 % 6 != 1:
        raise ConstructionError(f"q1 = {q1} is not 1 mod 6")
    if n < 1:
        raise ConstructionError(f"n must be >= 1, got {n}")
    p, m1 = pm
    base = field_create(p, m1)
    big = field_create(p, m1 * n)
    view = vector_view(big, base)
    alpha_base = sixth_root_of_unity(base)
    alpha = view.embed(alpha_base)

    if cap is None:
        cap = capset_greedy(base, n)
    elif not isinstance(cap, CapSet):
        cap = CapSet(base, n, tuple(tuple(int(c) for c in pt) for pt in cap), "supplied")
    if cap.base.order != q1 or cap.dim != n:
        raise ConstructionError(f"cap lives in F_{cap.base.order}^{cap.dim}, expected F_{q1}^{n}")
    if not cap.points:
        raise ConstructionError("cap is empty")
    if len(set(cap.points)) != len(cap.points):
        raise ConstructionError("cap has repeated points")
    triple = find_collinear_triple(base, cap.points)
    if triple is not None:
        raise ConstructionError(f"supplied cap has collinear points {triple}")

    S = sorted(view.from_vector(pt).value for pt in cap.points)
    dm = difference_matrix(big, alpha)
    code = generate(restrict(dm, S))
    prov = Provenance(
        q1=q1, n=n, q=big.order,
        alpha=alpha_base.value, alpha_in_q=alpha.value,
        cap_source=cap.source, cap_points=tuple(cap.points),
        S=tuple(S), M=code.M,
        modulus_q1=base.modulus, modulus_q=big.modulus,
    )
    return code, prov

