"""Frameproof / separable / strongly separable checks.

Two families live here.  The definitional verifiers (``is_fpc``, ``is_sc``,
``is_ssc``) enumerate coalitions and work for any length and any t.  The fast
verifiers apply only to length-3 codes: the A-set test for 2-frameproofness,
2-frameproofness plus absence of forbidden configurations for
3-separability, and the latter again for strong 3-separability when q >= 3.

Every negative report carries a witness that can be re-checked against the
definitions with :func:`witness_reproduces`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from joblib import Parallel, delayed

from .code import Code, CodeError, a_sets, coalitions, descendant_masks, members_of_masks
from .configs import ForbiddenConfigWitness, find_forbidden_config

DEFAULT_MAX_CANDIDATES = 20


class ResourceCapExceeded(RuntimeError):
    """Raised when a definitional check would need exponential enumeration."""


@dataclass(frozen=True)
class FramingWitness:
    """``framed`` lies in desc(coalition) but not in the coalition."""

    coalition: frozenset[int]
    framed: int

    def coalition_pair(self) -> tuple[frozenset[int], frozenset[int]]:
        return self.coalition, self.coalition | {self.framed}

    def to_dict(self) -> dict:
        return {"coalition": _one_based(self.coalition), "framed": self.framed + 1}


@dataclass(frozen=True)
class CollisionWitness:
    """Two distinct coalitions with identical descendant sets."""

    first: frozenset[int]
    second: frozenset[int]

    def coalition_pair(self) -> tuple[frozenset[int], frozenset[int]]:
        return self.first, self.second

    def to_dict(self) -> dict:
        return {"first": _one_based(self.first), "second": _one_based(self.second)}


@dataclass(frozen=True)
class StrongSeparationWitness:
    """C0 whose explaining subsets intersect in ``intersection`` != C0.

    ``explainers`` are members of S(C0); their intersection is ``intersection``.
    """

    coalition: frozenset[int]
    intersection: frozenset[int]
    explainers: tuple[frozenset[int], ...]

    def to_dict(self) -> dict:
        return {
            "coalition": _one_based(self.coalition),
            "intersection": _one_based(self.intersection),
            "explainers": [_one_based(e) for e in self.explainers],
        }


Witness = Union[FramingWitness, CollisionWitness, StrongSeparationWitness, ForbiddenConfigWitness]


@dataclass(frozen=True)
class VerificationReport:
    property: str
    t: int
    verdict: bool
    method: str
    witness: Witness | None = None
    # SC violation derived from a fast-path witness, for re-checking
    derived: Witness | None = None

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        out = {
            "property": self.property,
            "t": self.t,
            "method": self.method,
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }
        if self.derived is not None:
            out["derived"] = self.derived.to_dict()
        return out


def _one_based(c) -> list[int]:
    return [k + 1 for k in sorted(c)]


# -- definitional verifiers -----------------------------------------------------

def _chunks(seq, n):
    size = max(1, -(-len(seq) // n))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def _run_partitioned(fn, items, n_jobs):
    """Evaluate ``fn`` over chunks; the first violation in item order wins."""
    if n_jobs == 1 or len(items) < 64:
        return fn(items)
    workers = n_jobs if n_jobs > 0 else 8
    results = Parallel(n_jobs=n_jobs)(delayed(fn)(chunk) for chunk in _chunks(items, workers * 4))
    for r in results:
        if r is not None:
            return r
    return None


def _first_framing(code: Code, group):
    for coal in group:
        inside = members_of_masks(code, descendant_masks(code, coal))
        extra = inside.difference(coal)
        if extra:
            return FramingWitness(frozenset(coal), min(extra))
    return None


def is_fpc(code: Code, t: int, n_jobs: int = 1) -> VerificationReport:
    """t-frameproof: desc(C') ∩ C == C' for every coalition of size <= t."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    items = list(coalitions(code.M, t))
    w = _run_partitioned(lambda g: _first_framing(code, g), items, n_jobs)
    return VerificationReport("FPC", t, w is None, "definitional", w)


def is_sc(code: Code, t: int) -> VerificationReport:
    """t-separable, by hashing the descendant masks of every coalition of size <= t."""
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    cm = code.column_masks
    n = code.n
    for coal in coalitions(code.M, t):
        masks = [0] * n
        for k in coal:
            for i, b in enumerate(cm[k]):
                masks[i] |= b
        key = tuple(masks)
        prev = seen.get(key)
        if prev is not None:
            return VerificationReport("SC", t, False, "definitional",
                                      CollisionWitness(frozenset(prev), frozenset(coal)))
        seen[key] = coal
    return VerificationReport("SC", t, True, "definitional")


def explaining_intersection(code: Code, coalition, max_candidates: int | None = DEFAULT_MAX_CANDIDATES):
    """Intersection of S(C0), enumerating subsets of desc(C0) ∩ C.

    Returns ``(intersection, explainers)`` where ``explainers`` holds, for each
    member of C0 missing from the intersection, one explaining set avoiding it.
    """
    target = descendant_masks(code, coalition)
    D = sorted(members_of_masks(code, target))
    if max_candidates is not None and len(D) > max_candidates:
        raise ResourceCapExceeded(
            f"desc(C0) ∩ C has {len(D)} codewords (cap {max_candidates}); "
            "definitional subset enumeration is infeasible"
        )
    cm = code.column_masks
    n = code.n
    size = len(D)
    # subset-indexed descendant masks, built from the lowest set bit
    desc = [None] * (1 << size)
    desc[0] = (0,) * n
    full = (1 << size) - 1
    inter = full
    avoiding: dict[int, int] = {}
    for s in range(1, 1 << size):
        low = s & -s
        j = low.bit_length() - 1
        prev = desc[s ^ low]
        cur = tuple(a | b for a, b in zip(prev, cm[D[j]]))
        desc[s] = cur
        if cur == target:
            inter &= s
            missing = full & ~s
            while missing:
                lb = missing & -missing
                avoiding.setdefault(lb.bit_length() - 1, s)
                missing ^= lb
    members = frozenset(D[j] for j in range(size) if inter >> j & 1)
    explainers = []
    for j in sorted(avoiding):
        if D[j] in coalition:
            s = avoiding[j]
            explainers.append(frozenset(D[i] for i in range(size) if s >> i & 1))
    return members, tuple(dict.fromkeys(explainers))


def _first_ssc_violation(code: Code, group, max_candidates):
    for coal in group:
        c0 = frozenset(coal)
        inter, explainers = explaining_intersection(code, c0, max_candidates)
        if inter != c0:
            return StrongSeparationWitness(c0, inter, explainers)
    return None


def is_ssc(code: Code, t: int, max_candidates: int | None = DEFAULT_MAX_CANDIDATES,
           n_jobs: int = 1) -> VerificationReport:
    """Strongly t-separable, straight from the definition.

    Raises :class:`ResourceCapExceeded` when some desc(C0) ∩ C exceeds
    ``max_candidates`` codewords.
    """
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    items = list(coalitions(code.M, t))
    w = _run_partitioned(lambda g: _first_ssc_violation(code, g, max_candidates), items, n_jobs)
    return VerificationReport("SSC", t, w is None, "definitional", w)


# -- fast verifiers for length 3 ------------------------------------------------

def _require_length3(code: Code) -> None:
    if code.n != 3:
        raise CodeError(f"fast verifiers apply to length-3 codes only, got n = {code.n}")


def fpc2_violation(code: Code) -> FramingWitness | None:
    """A-set test: for each coordinate j and symbols i != i', classes share at most
    one projection, and only when both are singletons."""
    cols = code.columns
    index = code.index
    for j in range(code.n):
        fam = a_sets(code, j)
        owners: dict[tuple[int, ...], list[int]] = {}
        for i, proj in fam.items():
            for pr in proj:
                owners.setdefault(pr, []).append(i)
        for pr in sorted(owners):
            syms = owners[pr]
            if len(syms) < 2:
                continue
            for i, i2 in itertools.permutations(syms, 2):
                if len(fam[i]) < 2:
                    continue
                # (i, pr) is framed by (i2, pr) together with another word of class i
                other = min(p for p in fam[i] if p != pr)
                framed = index[pr[:j] + (i,) + pr[j:]]
                partner = index[pr[:j] + (i2,) + pr[j:]]
                mate = index[other[:j] + (i,) + other[j:]]
                return FramingWitness(frozenset((partner, mate)), framed)
    return None


def is_fpc2_fast(code: Code) -> VerificationReport:
    _require_length3(code)
    w = fpc2_violation(code)
    return VerificationReport("FPC", 2, w is None, "fast", w)


def is_sc3_fast(code: Code) -> VerificationReport:
    """3-separability of a length-3 code: 2-frameproof and free of forbidden configurations."""
    _require_length3(code)
    w = fpc2_violation(code)
    if w is None:
        w = find_forbidden_config(code)
    if w is None:
        return VerificationReport("SC", 3, True, "fast")
    first, second = w.coalition_pair()
    return VerificationReport("SC", 3, False, "fast", w, CollisionWitness(first, second))


def is_ssc3_fast(code: Code) -> VerificationReport:
    """Strong 3-separability of a length-3 code over q >= 3, via 3-separability."""
    _require_length3(code)
    if code.q < 3:
        raise ValueError(
            f"the SC/SSC equivalence needs q >= 3 (got q = {code.q}); use the definitional is_ssc"
        )
    sc = is_sc3_fast(code)
    if sc.verdict:
        return VerificationReport("SSC", 3, True, "fast")
    first, second = sc.derived.coalition_pair()
    c0, other = (first, second) if not first <= second else (second, first)
    derived = StrongSeparationWitness(c0, c0 & other, (c0, other))
    return VerificationReport("SSC", 3, False, "fast", sc.witness, derived)


# -- witness re-evaluation ---------------------------------------------------

def _explains(code: Code, coal, target) -> bool:
    return bool(coal) and descendant_masks(code, coal) == target


def witness_reproduces(code: Code, report: VerificationReport) -> bool:
    """Re-check a negative report's evidence against the definitions."""
    if report.verdict:
        return False
    t = report.t
    w = report.derived if report.derived is not None else report.witness
    if isinstance(w, FramingWitness):
        if report.property == "FPC":
            if not 1 <= len(w.coalition) <= t or w.framed in w.coalition:
                return False
            return w.framed in members_of_masks(code, descendant_masks(code, w.coalition))
        w = CollisionWitness(*w.coalition_pair())
    if isinstance(w, ForbiddenConfigWitness):
        w = CollisionWitness(*w.coalition_pair())
    if isinstance(w, CollisionWitness):
        if report.property != "SC":
            return False
        a, b = w.first, w.second
        return (a != b and 1 <= len(a) <= t and 1 <= len(b) <= t
                and descendant_masks(code, a) == descendant_masks(code, b))
    if isinstance(w, StrongSeparationWitness):
        if report.property != "SSC" or not 1 <= len(w.coalition) <= t:
            return False
        target = descendant_masks(code, w.coalition)
        if not all(_explains(code, e, target) for e in w.explainers):
            return False
        inter = frozenset(w.coalition)
        for e in w.explainers:
            inter &= e
        return inter != w.coalition
    return False
