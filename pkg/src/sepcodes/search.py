"""Exhaustive search for optimal FPC / SC / SSC codes at tiny parameters.

All three properties survive deleting codewords, so a depth-first search
that only extends codes still having the property is complete.  Symmetry:
coordinate permutations and per-coordinate symbol permutations preserve
every property.  Take the closest pair of codewords in an optimal code, at
distance d; the group maps it to the zero word and to (0..0 1..1) with d
ones, after which every other codeword is at distance >= d from both and
from each other.  The search therefore starts from those two words, one
run per d.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .code import Code
from .verifiers import DEFAULT_MAX_CANDIDATES, is_ssc

PROPERTIES = ("sc", "ssc", "fpc")


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchResult:
    t: int
    n: int
    q: int
    property: str
    optimum: int
    witness: Code
    nodes_explored: int
    exhaustive: bool

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "n": self.n,
            "q": self.q,
            "property": self.property,
            "optimum": self.optimum,
            "nodes_explored": self.nodes_explored,
            "exhaustive": self.exhaustive,
            "witness": [list(c) for c in self.witness.columns],
        }


def _onehot(word):
    return tuple(1 << v for v in word)


def _union(masks_list, n):
    out = [0] * n
    for m in masks_list:
        for i, b in enumerate(m):
            out[i] |= b
    return tuple(out)


def _covers(masks, word_masks):
    return all(b & m for b, m in zip(word_masks, masks))


class _SCState:
    """Descendant keys of all coalitions of size <= t, updated per added word."""

    def __init__(self, n, t):
        self.n, self.t = n, t
        self.words: list[tuple[int, ...]] = []
        self.seen: set[tuple[int, ...]] = set()
        self.added: list[list[tuple[int, ...]]] = []

    def push(self, w) -> bool:
        wm = _onehot(w)
        old = [_onehot(x) for x in self.words]
        new_keys = []
        fresh = set()
        for k in range(0, self.t):
            for sub in itertools.combinations(old, k):
                key = _union(sub + (wm,), self.n)
                if key in self.seen or key in fresh:
                    return False
                fresh.add(key)
                new_keys.append(key)
        self.words.append(w)
        self.seen.update(new_keys)
        self.added.append(new_keys)
        return True

    def pop(self):
        self.words.pop()
        for key in self.added.pop():
            self.seen.discard(key)


class _FPCState:
    def __init__(self, n, t):
        self.n, self.t = n, t
        self.words: list[tuple[int, ...]] = []

    def push(self, w) -> bool:
        wm = _onehot(w)
        old = [_onehot(x) for x in self.words]
        # old coalitions must not frame w
        for k in range(1, self.t + 1):
            for sub in itertools.combinations(old, k):
                if _covers(_union(sub, self.n), wm):
                    return False
        # coalitions containing w must not frame any old word
        for k in range(0, self.t):
            for idx in itertools.combinations(range(len(old)), k):
                key = _union([old[i] for i in idx] + [wm], self.n)
                for j, x in enumerate(old):
                    if j not in idx and _covers(key, x):
                        return False
        self.words.append(w)
        return True

    def pop(self):
        self.words.pop()


class _SSCState:
    def __init__(self, n, q, t, max_candidates):
        self.n, self.q, self.t = n, q, t
        self.max_candidates = max_candidates
        self.words: list[tuple[int, ...]] = []

    def push(self, w) -> bool:
        code = Code.from_codewords(self.words + [w], self.q, self.n)
        if not is_ssc(code, self.t, self.max_candidates).verdict:
            return False
        self.words.append(w)
        return True

    def pop(self):
        self.words.pop()


def _make_state(prop, n, q, t, max_candidates):
    if prop == "sc":
        return _SCState(n, t)
    if prop == "fpc":
        return _FPCState(n, t)
    return _SSCState(n, q, t, max_candidates)


def _distance(a, b):
    return sum(x != y for x, y in zip(a, b))


def search_optimal(t: int, n: int, q: int, property: str = "sc", budget: int | None = 10_000_000,
                   max_candidates: int | None = DEFAULT_MAX_CANDIDATES) -> SearchResult:
    """Largest code with the property, by budgeted depth-first search.

    ``exhaustive`` is True only when the whole tree was explored, in which
    case ``optimum`` is certified.
    """
    prop = property.lower()
    if prop not in PROPERTIES:
        raise SearchError(f"unknown property {property!r}; expected one of {PROPERTIES}")
    if prop in ("sc", "ssc") and t < 2 or t < 1:
        raise SearchError(f"t = {t} is out of range for {prop}")
    if n < 1 or q < 1:
        raise SearchError(f"needs n >= 1, q >= 1 (got n={n}, q={q})")
    words = list(itertools.product(range(q), repeat=n))
    zero = words[0]
    best: list[tuple[int, ...]] = [zero]
    nodes = 0
    exhausted = False

    for d in range(1, n + 1):
        second = (0,) * (n - d) + (1,) * d
        if q < 2:
            break
        state = _make_state(prop, n, q, t, max_candidates)
        if not (state.push(zero) and state.push(second)):
            continue
        cands = [w for w in words if w not in (zero, second)
                 and _distance(w, zero) >= d and _distance(w, second) >= d]

        def dfs(start: int) -> None:
            nonlocal best, nodes, exhausted
            nodes += 1
            if budget is not None and nodes > budget:
                exhausted = True
                return
            if len(state.words) > len(best):
                best = list(state.words)
            for i in range(start, len(cands)):
                if len(state.words) + len(cands) - i <= len(best):
                    return
                w = cands[i]
                if any(_distance(w, x) < d for x in state.words[2:]):
                    continue
                if state.push(w):
                    dfs(i + 1)
                    state.pop()
                    if exhausted:
                        return

        dfs(0)
        if exhausted:
            break

    witness = Code.from_codewords(best, q, n)
    return SearchResult(t, n, q, prop, len(best), witness, nodes, not exhausted)


# -- equivalence under coordinate and symbol permutations ----------------------

def isomorph_canonical(code: Code, limit: int = 5_000_000) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least sorted codeword list over the symmetry group.

    Two codes are equivalent iff their canonical forms are equal.  The group
    has n! * (q!)^n elements and is enumerated directly, so ``limit`` guards
    against large parameters.
    """
    n, q = code.n, code.q
    size = factorial(n) * factorial(q) ** n
    if size > limit:
        raise SearchError(f"symmetry group of order {size} exceeds limit {limit}")
    cols = code.columns
    best = None
    sym_perms = list(itertools.permutations(range(q)))
    for cperm in itertools.permutations(range(n)):
        permuted = [tuple(c[i] for i in cperm) for c in cols]
        for sperms in itertools.product(sym_perms, repeat=n):
            form = tuple(sorted(tuple(sp[v] for sp, v in zip(sperms, c)) for c in permuted))
            if best is None or form < best:
                best = form
    return best if best is not None else ()


def equivalent(a: Code, b: Code) -> bool:
    if (a.n, a.M, a.q) != (b.n, b.M, b.q):
        return False
    return isomorph_canonical(a) == isomorph_canonical(b)
