"""Forbidden 4- and 6-column configurations in length-3 codes.

The three Delta patterns differ only in which row carries the ``e f g e``
line; the other two rows read ``a a b b`` and ``c d c d`` (upper row first):

    e-row 2 -> Delta1,  e-row 3 -> Delta2,  e-row 1 -> Delta3

with a != b, c != d and e not in {f, g}.  The Nabla pattern is two disjoint
triples X = (x1, x2, x3), Y = (y1, y2, y3) with three distinct symbols in
every row of X and

    y1 = (x1[0], x2[1], x3[2]), y2 = (x2[0], x3[1], x1[2]), y3 = (x3[0], x1[1], x2[2]).

``find_forbidden_config`` uses hash joins over column projections.
``find_forbidden_config_naive`` scans every 4- and 6-tuple and is kept as an
independent reference for small codes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .code import Code, CodeError

# kind -> (a-row, e-row, c-row), 0-based
DELTA_ROWS = {
    "Delta1": (0, 1, 2),
    "Delta2": (0, 2, 1),
    "Delta3": (1, 0, 2),
}
KINDS = ("Delta1", "Delta2", "Delta3", "Nabla")


@dataclass(frozen=True)
class ForbiddenConfigWitness:
    kind: str
    columns: tuple[int, ...]
    bindings: dict = field(compare=False)

    def coalition_pair(self) -> tuple[frozenset[int], frozenset[int]]:
        """Two distinct coalitions of size 3 with equal descendant sets."""
        c = self.columns
        if self.kind == "Nabla":
            return frozenset(c[:3]), frozenset(c[3:])
        return frozenset(c[:3]), frozenset(c[1:])

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "columns": [k + 1 for k in self.columns],
            "bindings": dict(self.bindings),
        }


def _require_length3(code: Code) -> None:
    if code.n != 3:
        raise CodeError(f"forbidden-configuration analysis needs n = 3, got n = {code.n}")


def _delta_bindings(cols, a_row, e_row, c_row, w):
    w1, w2, w3, w4 = (cols[k] for k in w)
    return {
        "a": w1[a_row], "b": w3[a_row],
        "c": w1[c_row], "d": w2[c_row],
        "e": w1[e_row], "f": w2[e_row], "g": w3[e_row],
    }


def is_delta(code: Code, kind: str, w: tuple[int, int, int, int]) -> bool:
    """Whether columns ``w`` (in pattern order) realize the given Delta pattern."""
    a_row, e_row, c_row = DELTA_ROWS[kind]
    if len(set(w)) != 4:
        return False
    w1, w2, w3, w4 = (code.columns[k] for k in w)
    a, b = w1[a_row], w3[a_row]
    c, d = w1[c_row], w2[c_row]
    e, f, g = w1[e_row], w2[e_row], w3[e_row]
    return (
        w2[a_row] == a and w4[a_row] == b and a != b
        and w3[c_row] == c and w4[c_row] == d and c != d
        and w4[e_row] == e and e != f and e != g
    )


def is_nabla(code: Code, w: tuple[int, ...]) -> bool:
    if len(set(w)) != 6:
        return False
    x1, x2, x3, y1, y2, y3 = (code.columns[k] for k in w)
    if any(len({x1[i], x2[i], x3[i]}) != 3 for i in range(3)):
        return False
    return (
        y1 == (x1[0], x2[1], x3[2])
        and y2 == (x2[0], x3[1], x1[2])
        and y3 == (x3[0], x1[1], x2[2])
    )


def find_delta(code: Code, kind: str) -> ForbiddenConfigWitness | None:
    _require_length3(code)
    a_row, e_row, c_row = DELTA_ROWS[kind]
    cols = code.columns
    # (a-row, c-row) projection -> column indices, ascending
    proj: dict[tuple[int, int], list[int]] = {}
    by_e: dict[int, list[int]] = {}
    for k, col in enumerate(cols):
        proj.setdefault((col[a_row], col[c_row]), []).append(k)
        by_e.setdefault(col[e_row], []).append(k)

    def other(key, e):
        for k in proj.get(key, ()):
            if cols[k][e_row] != e:
                return k
        return None

    best = None
    for e, group in by_e.items():
        for k1, k4 in itertools.combinations(group, 2):
            u, v = cols[k1], cols[k4]
            if u[a_row] == v[a_row] or u[c_row] == v[c_row]:
                continue
            # both orientations: (w1, w4) = (k1, k4) and (k4, k1)
            for w1, w4 in ((k1, k4), (k4, k1)):
                p, s = cols[w1], cols[w4]
                w2 = other((p[a_row], s[c_row]), e)
                w3 = other((s[a_row], p[c_row]), e)
                if w2 is None or w3 is None:
                    continue
                cand = (w1, w2, w3, w4)
                if best is None or cand < best:
                    best = cand
    if best is None:
        return None
    return ForbiddenConfigWitness(kind, best, _delta_bindings(cols, a_row, e_row, c_row, best))


def find_nabla(code: Code) -> ForbiddenConfigWitness | None:
    _require_length3(code)
    cols = code.columns
    p01: dict[tuple[int, int], list[int]] = {}
    p02: dict[tuple[int, int], list[int]] = {}
    p12: dict[tuple[int, int], list[int]] = {}
    for k, c in enumerate(cols):
        p01.setdefault((c[0], c[1]), []).append(k)
        p02.setdefault((c[0], c[2]), []).append(k)
        p12.setdefault((c[1], c[2]), []).append(k)
    index = code.index
    M = len(cols)
    for i1 in range(M):
        x1 = cols[i1]
        for i2 in range(M):
            x2 = cols[i2]
            if x1[0] == x2[0] or x1[1] == x2[1] or x1[2] == x2[2]:
                continue
            for j1 in p01.get((x1[0], x2[1]), ()):
                c3 = cols[j1][2]
                if c3 in (x1[2], x2[2]):
                    continue
                for j2 in p02.get((x2[0], x1[2]), ()):
                    c2 = cols[j2][1]
                    if c2 in (x1[1], x2[1]):
                        continue
                    for j3 in p12.get((x1[1], x2[2]), ()):
                        c1 = cols[j3][0]
                        if c1 in (x1[0], x2[0]):
                            continue
                        i3 = index.get((c1, c2, c3))
                        if i3 is None:
                            continue
                        w = (i1, i2, i3, j1, j2, j3)
                        return ForbiddenConfigWitness("Nabla", w, _nabla_bindings(cols, w))
    return None


def _nabla_bindings(cols, w):
    x1, x2, x3 = (cols[k] for k in w[:3])
    b = {}
    for i in range(3):
        b[f"a{i + 1}"], b[f"b{i + 1}"], b[f"c{i + 1}"] = x1[i], x2[i], x3[i]
    return b


def find_forbidden_config(code: Code) -> ForbiddenConfigWitness | None:
    """First forbidden configuration, checking Nabla, then Delta1, Delta2, Delta3."""
    _require_length3(code)
    w = find_nabla(code)
    if w is not None:
        return w
    for kind in ("Delta1", "Delta2", "Delta3"):
        w = find_delta(code, kind)
        if w is not None:
            return w
    return None


def find_forbidden_config_naive(code: Code) -> ForbiddenConfigWitness | None:
    """O(M^4) + O(M^6) reference scan; only for small codes."""
    _require_length3(code)
    M = code.M
    cols = code.columns
    for w in itertools.permutations(range(M), 6):
        if is_nabla(code, w):
            return ForbiddenConfigWitness("Nabla", w, _nabla_bindings(cols, w))
    for kind in ("Delta1", "Delta2", "Delta3"):
        rows = DELTA_ROWS[kind]
        for w in itertools.permutations(range(M), 4):
            if is_delta(code, kind, w):
                return ForbiddenConfigWitness(kind, w, _delta_bindings(cols, *rows, w))
    return None
