"""Caps in AG(n, q1): point sets with no three collinear points."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .field import FieldError, FieldSpec, VectorElement, field_of_order


class CapError(ValueError):
    pass


@dataclass(frozen=True)
class CapSet:
    base: FieldSpec
    dim: int
    points: tuple[tuple[int, ...], ...]
    source: str = "supplied"
    optimal: bool | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.points)

    def vectors(self) -> list[VectorElement]:
        return [VectorElement(p, self.base) for p in self.points]


class AffineSpace:
    """Points of F_{q1}^n indexed 0..q1^n-1, with every line as a bitmask."""

    def __init__(self, base: FieldSpec, dim: int):
        if dim < 1:
            raise CapError(f"dimension must be >= 1, got {dim}")
        self.base = base
        self.dim = dim
        self.points = list(itertools.product(range(base.order), repeat=dim))
        self.index = {p: i for i, p in enumerate(self.points)}
        self._lines: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.points)

    def line_mask(self, i: int, j: int) -> int:
        """Bitmask of the line through points i != j."""
        key = (i, j) if i < j else (j, i)
        mask = self._lines.get(key)
        if mask is None:
            f = self.base
            x, y = self.points[key[0]], self.points[key[1]]
            d = tuple(f.sub(b, a) for a, b in zip(x, y))
            mask = 0
            for lam in range(f.order):
                pt = tuple(f.add(a, f.mul(lam, di)) for a, di in zip(x, d))
                mask |= 1 << self.index[pt]
            self._lines[key] = mask
        return mask


def collinear(x: VectorElement, y: VectorElement, z: VectorElement) -> bool:
    """True iff z - x is a scalar multiple of y - x."""
    if len({x.components, y.components, z.components}) != 3:
        raise CapError("collinear() needs three distinct points")
    if not (x.base == y.base == z.base) or not len(x.components) == len(y.components) == len(z.components):
        raise CapError("points live in different spaces")
    f = x.base
    d = (y - x).components
    e = (z - x).components
    i = next(k for k, v in enumerate(d) if v)
    lam = f.mul(e[i], f.inv(d[i]))
    return all(f.mul(lam, a) == b for a, b in zip(d, e))


def _as_vectors(base: FieldSpec, points: Iterable[Sequence[int]]) -> list[VectorElement]:
    return [VectorElement(tuple(p), base) for p in points]


def is_cap(base: FieldSpec, points: Iterable[Sequence[int]]) -> bool:
    vecs = _as_vectors(base, points)
    if len({v.components for v in vecs}) != len(vecs):
        return False
    return not any(collinear(a, b, c) for a, b, c in itertools.combinations(vecs, 3))


def find_collinear_triple(base: FieldSpec, points: Sequence[Sequence[int]]):
    vecs = _as_vectors(base, points)
    for a, b, c in itertools.combinations(range(len(vecs)), 3):
        if collinear(vecs[a], vecs[b], vecs[c]):
            return tuple(points[a]), tuple(points[b]), tuple(points[c])
    return None


def parabola_points(base: FieldSpec) -> list[tuple[int, int]]:
    """(i, i^2) for every base-field element i."""
    return [(i, base.mul(i, i)) for i in range(base.order)]


def point_order(base: FieldSpec, dim: int, order: str | Sequence | None = "canonical",
                seed: int | None = None) -> list[tuple[int, ...]]:
    pts = list(itertools.product(range(base.order), repeat=dim))
    if order == "canonical" or order is None:
        out = pts
    elif order == "parabola":
        if dim != 2:
            raise CapError("parabola order is defined for dimension 2 only")
        head = parabola_points(base)
        seen = set(head)
        out = head + [p for p in pts if p not in seen]
    elif order == "random":
        out = pts[:]
        random.Random(seed).shuffle(out)
    elif isinstance(order, str):
        raise CapError(f"unknown point order {order!r}")
    else:
        out = [tuple(p) for p in order]
        if sorted(out) != pts:
            raise CapError("a custom order must list every point exactly once")
    return out


def capset_greedy(base: FieldSpec, dim: int, order: str | Sequence | None = "canonical",
                  seed: int | None = None) -> CapSet:
    """Scan points in ``order``; keep a point iff it lies on no line through two kept ones."""
    space = AffineSpace(base, dim)
    kept: list[int] = []
    blocked = 0
    for pt in point_order(base, dim, order, seed):
        i = space.index[pt]
        if blocked >> i & 1:
            continue
        for j in kept:
            blocked |= space.line_mask(i, j)
        kept.append(i)
    label = order if isinstance(order, str) else "custom"
    return CapSet(base, dim, tuple(space.points[i] for i in kept), f"greedy:{label}")


def capset_exact(base: FieldSpec, dim: int, budget: int | None = 50_000_000) -> CapSet:
    """Maximum cap by depth-first search.

    The affine group is transitive on non-collinear triples, so the search
    fixes 0, e1 and (for dim >= 2) e2.  Remaining points are added in
    increasing index order and a branch is cut once it cannot beat the best
    cap found.  If ``budget`` nodes are exhausted the best cap found is
    returned with ``optimal=False``.
    """
    space = AffineSpace(base, dim)
    N = len(space)
    if N <= 2:
        return CapSet(base, dim, tuple(space.points), "exact", True, {"nodes": 0})

    def unit(k):
        v = [0] * dim
        v[k] = 1
        return space.index[tuple(v)]

    fixed = [space.index[(0,) * dim], unit(0)]
    if dim >= 2:
        fixed.append(unit(1))
    blocked = 0
    for a, b in itertools.combinations(fixed, 2):
        blocked |= space.line_mask(a, b)
    for i in fixed:
        blocked |= 1 << i

    best = list(fixed)
    nodes = 0
    exhausted = False
    all_mask = (1 << N) - 1

    def dfs(cap: list[int], blocked: int, start: int) -> None:
        nonlocal best, nodes, exhausted
        nodes += 1
        if budget is not None and nodes > budget:
            exhausted = True
            return
        if len(cap) > len(best):
            best = list(cap)
        free = all_mask & ~blocked & ~((1 << start) - 1)
        if len(cap) + bin(free).count("1") <= len(best):
            return
        while free:
            low = free & -free
            i = low.bit_length() - 1
            free ^= low
            if len(cap) + 1 + bin(free).count("1") <= len(best):
                return
            nb = blocked | low
            for j in cap:
                nb |= space.line_mask(i, j)
            cap.append(i)
            dfs(cap, nb, i + 1)
            cap.pop()
            if exhausted:
                return

    dfs(list(fixed), blocked, 0)
    pts = tuple(sorted(space.points[i] for i in best))
    return CapSet(base, dim, pts, "exact", not exhausted, {"nodes": nodes})


# -- file format: "q1 n k" then k lines of n integers --------------------------

def capset_parse(text: str) -> CapSet:
    lines = [l.strip() for l in text.splitlines()]
    lines = [l for l in lines if l and not l.startswith("#")]
    if not lines:
        raise CapError("empty cap file")
    try:
        q1, n, k = (int(x) for x in lines[0].split())
    except ValueError:
        raise CapError(f"malformed cap header {lines[0]!r}: expected 'q1 n k'") from None
    try:
        base = field_of_order(q1)
    except FieldError as e:
        raise CapError(str(e)) from None
    if len(lines) - 1 != k:
        raise CapError(f"expected {k} points, found {len(lines) - 1}")
    pts = []
    for ln in lines[1:]:
        p = tuple(int(x) for x in ln.split())
        if len(p) != n or any(not 0 <= c < q1 for c in p):
            raise CapError(f"bad point {ln!r} for F_{q1}^{n}")
        pts.append(p)
    if len(set(pts)) != len(pts):
        raise CapError("duplicate points in cap file")
    return CapSet(base, n, tuple(pts), "file")


def capset_serialize(cap: CapSet) -> str:
    lines = [f"{cap.base.order} {cap.dim} {len(cap.points)}"]
    lines += [" ".join(map(str, p)) for p in cap.points]
    return "\n".join(lines) + "\n"
