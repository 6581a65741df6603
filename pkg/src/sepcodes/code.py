"""Codes, coalitions and descendant sets.

A code is stored with coordinates as rows and codewords as columns, the same
orientation as the text file format.  Coalitions are frozensets of 0-based
column indices; user-facing output (files, JSON, CLI) numbers codewords from 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Coalition = frozenset


class CodeError(ValueError):
    pass


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


@dataclass(frozen=True)
class DescendantSet:
    """Per-coordinate value sets; the product of these is desc(C0)."""

    sets: tuple[frozenset[int], ...]

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> DescendantSet:
        return cls(tuple(_mask_to_set(m) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in s) for s in self.sets)

    @property
    def n(self) -> int:
        return len(self.sets)

    def size(self) -> int:
        """Number of words in the expanded product."""
        k = 1
        for s in self.sets:
            k *= len(s)
        return k

    def __contains__(self, word) -> bool:
        return len(word) == len(self.sets) and all(w in s for w, s in zip(word, self.sets))

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in self.sets)
        return f"DescendantSet({inner})"


@dataclass(frozen=True, eq=False)
class Code:
    """An (n, M, q) code; ``rows[i][k]`` is coordinate i of codeword k."""

    rows: tuple[tuple[int, ...], ...]
    q: int

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise CodeError("a code needs at least one coordinate")
        M = len(rows[0])
        if any(len(r) != M for r in rows):
            raise CodeError("ragged code matrix: rows have different lengths")
        if self.q < 1:
            raise CodeError(f"alphabet size must be positive, got {self.q}")
        for i, r in enumerate(rows):
            for k, v in enumerate(r):
                if not 0 <= v < self.q:
                    raise CodeError(f"symbol {v} at row {i + 1}, column {k + 1} not in [0, {self.q - 1}]")
        seen: dict[tuple[int, ...], int] = {}
        for k, c in enumerate(zip(*rows)):
            if c in seen:
                raise CodeError(f"duplicate codeword: columns {seen[c] + 1} and {k + 1}")
            seen[c] = k

    @classmethod
    def from_codewords(cls, words: Iterable[Sequence[int]], q: int, n: int | None = None) -> Code:
        words = [tuple(w) for w in words]
        if not words:
            if n is None:
                raise CodeError("cannot infer length of an empty code")
            return cls(tuple(() for _ in range(n)), q)
        return cls(tuple(zip(*words)), q)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def M(self) -> int:
        return len(self.rows[0])

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows)) if self.M else ()

    @cached_property
    def column_masks(self) -> tuple[tuple[int, ...], ...]:
        """One-hot symbol masks per codeword: ``column_masks[k][i] == 1 << c_k(i)``."""
        return tuple(tuple(1 << v for v in c) for c in self.columns)

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {c: k for k, c in enumerate(self.columns)}

    def __eq__(self, other) -> bool:
        return isinstance(other, Code) and self.q == other.q and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.rows, self.q))

    def __repr__(self) -> str:
        return f"Code(n={self.n}, M={self.M}, q={self.q})"

    def codeword(self, k: int) -> tuple[int, ...]:
        return self.columns[k]

    def subcode(self, indices: Iterable[int]) -> Code:
        return Code.from_codewords([self.columns[k] for k in sorted(indices)], self.q, self.n)

    def permute_rows(self, perm: Sequence[int]) -> Code:
        return Code(tuple(self.rows[i] for i in perm), self.q)


def check_coalition(code: Code, coalition: Iterable[int]) -> frozenset[int]:
    c = frozenset(int(k) for k in coalition)
    for k in c:
        if not 0 <= k < code.M:
            raise CodeError(f"codeword index {k} out of range for M={code.M}")
    return c


def coordinate_set(code: Code, coalition: Iterable[int], i: int) -> frozenset[int]:
    """C0(i): the symbols the coalition shows at coordinate i (0-based)."""
    if not 0 <= i < code.n:
        raise CodeError(f"coordinate {i} out of range for n={code.n}")
    row = code.rows[i]
    return frozenset(row[k] for k in check_coalition(code, coalition))


def descendant_masks(code: Code, coalition: Iterable[int]) -> tuple[int, ...]:
    masks = [0] * code.n
    cm = code.column_masks
    for k in coalition:
        for i, b in enumerate(cm[k]):
            masks[i] |= b
    return tuple(masks)


def descendant(code: Code, coalition: Iterable[int]) -> DescendantSet:
    c = check_coalition(code, coalition)
    if not c:
        raise CodeError("descendant of an empty coalition is undefined")
    return DescendantSet.from_masks(descendant_masks(code, c))


class VisitCounter:
    """Counts codewords touched by a candidate-filter scan."""

    def __init__(self):
        self.visits = 0


def members_of_masks(code: Code, masks: Sequence[int], counter: VisitCounter | None = None) -> frozenset[int]:
    out = []
    for k, cm in enumerate(code.column_masks):
        if counter is not None:
            counter.visits += 1
        for b, m in zip(cm, masks):
            if not b & m:
                break
        else:
            out.append(k)
    return frozenset(out)


def descendant_members(code: Code, d: DescendantSet, counter: VisitCounter | None = None) -> frozenset[int]:
    """desc ∩ C: every codeword whose coordinates all lie in the value sets."""
    if d.n != code.n:
        raise CodeError(f"descendant set has {d.n} coordinates, code has {code.n}")
    for s in d.sets:
        if any(not 0 <= v < code.q for v in s):
            raise CodeError(f"descendant set {d} has symbols outside [0, {code.q - 1}]")
    return members_of_masks(code, d.masks, counter)


def a_sets(code: Code, j: int) -> dict[int, frozenset[tuple[int, ...]]]:
    """A_i^(j): projections (dropping coordinate j) of the codewords with symbol i at j.

    Only symbols that occur at coordinate j get a key.
    """
    if not 0 <= j < code.n:
        raise CodeError(f"coordinate {j} out of range for n={code.n}")
    fam: dict[int, set[tuple[int, ...]]] = {}
    for c in code.columns:
        fam.setdefault(c[j], set()).add(c[:j] + c[j + 1:])
    return {i: frozenset(s) for i, s in sorted(fam.items())}


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise CodeError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x != y for x, y in zip(a, b))


def coalitions(M: int, t: int, start: int = 1) -> Iterator[tuple[int, ...]]:
    """All index tuples of size start..t in (size, lexicographic) order."""
    for k in range(start, min(t, M) + 1):
        yield from itertools.combinations(range(M), k)


# -- text format ---------------------------------------------------------------

def _data_lines(text: str) -> list[str]:
    return [ln for ln in (l.strip() for l in text.splitlines()) if ln and not ln.startswith("#")]


def code_parse(text: str) -> Code:
    lines = _data_lines(text)
    if not lines:
        raise CodeError("empty code file")
    header = lines[0].split()
    try:
        n, M, q = (int(x) for x in header)
    except ValueError:
        raise CodeError(f"malformed header {lines[0]!r}: expected 'n M q'") from None
    if n < 1 or M < 0 or q < 1:
        raise CodeError(f"invalid header values n={n} M={M} q={q}")
    if len(lines) - 1 != n:
        raise CodeError(f"expected {n} rows after the header, found {len(lines) - 1}")
    rows = []
    for i, ln in enumerate(lines[1:], 1):
        try:
            row = tuple(int(x) for x in ln.split())
        except ValueError:
            raise CodeError(f"row {i}: non-integer symbol") from None
        if len(row) != M:
            raise CodeError(f"row {i}: expected {M} symbols, found {len(row)}")
        rows.append(row)
    return Code(tuple(rows), q)


def code_serialize(code: Code) -> str:
    lines = [f"{code.n} {code.M} {code.q}"]
    lines += [" ".join(map(str, r)) for r in code.rows]
    return "\n".join(lines) + "\n"


def descendant_parse(text: str) -> tuple[DescendantSet, int]:
    """Observation file: ``n q`` then n lines, each a space-separated value set."""
    lines = [l.strip() for l in text.splitlines() if not l.strip().startswith("#")]
    while lines and not lines[0]:
        lines.pop(0)
    if not lines:
        raise CodeError("empty observation file")
    try:
        n, q = (int(x) for x in lines[0].split())
    except ValueError:
        raise CodeError(f"malformed observation header {lines[0]!r}: expected 'n q'") from None
    body = lines[1:1 + n]
    if len(body) != n:
        raise CodeError(f"expected {n} value-set lines, found {len(body)}")
    sets = []
    for i, ln in enumerate(body, 1):
        vals = frozenset(int(x) for x in ln.split())
        if any(not 0 <= v < q for v in vals):
            raise CodeError(f"value set {i} has symbols outside [0, {q - 1}]")
        sets.append(vals)
    return DescendantSet(tuple(sets)), q


def descendant_serialize(d: DescendantSet, q: int) -> str:
    lines = [f"{d.n} {q}"] + [" ".join(map(str, sorted(s))) for s in d.sets]
    return "\n".join(lines) + "\n"
