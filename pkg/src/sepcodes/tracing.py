"""Colluder identification from an observed descendant set.

One pass over the code collects the candidates desc ∩ C.  The guilty set is
the intersection of every subset of the candidates that reproduces the
observation.  Since desc is monotone and the candidates already reproduce the
observation (when anything does), a candidate c is absent from some
explaining subset iff ``candidates - {c}`` still explains, so the
intersection costs one descendant evaluation per candidate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code import Code, CodeError, DescendantSet, VisitCounter, descendant_masks, descendant_members
from .verifiers import ResourceCapExceeded


@dataclass(frozen=True)
class TraceResult:
    guilty: frozenset[int]
    candidates: frozenset[int]
    certified: bool
    visits: int
    t: int

    def to_dict(self) -> dict:
        return {
            "guilty": [k + 1 for k in sorted(self.guilty)],
            "candidates": [k + 1 for k in sorted(self.candidates)],
            "certified": self.certified,
            "visits": self.visits,
            "t": self.t,
        }


def trace(code: Code, observation: DescendantSet, t: int, max_candidates: int | None = None) -> TraceResult:
    """Identify the coalition behind ``observation``.

    ``certified`` is True when the guilty set alone reproduces the observation
    and has at most ``t`` members; on a strongly t-separable code any
    observation produced by at most t colluders is certified.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    counter = VisitCounter()
    cands = descendant_members(code, observation, counter)
    if not cands:
        raise CodeError("observation is inconsistent with the code: no codeword fits it")
    if max_candidates is not None and len(cands) > max_candidates:
        raise ResourceCapExceeded(f"{len(cands)} candidates exceed the cap of {max_candidates}")
    target = observation.masks
    if descendant_masks(code, cands) != target:
        # no subset of the code explains the observation
        return TraceResult(frozenset(), cands, False, counter.visits, t)
    guilty = frozenset(c for c in cands if descendant_masks(code, cands - {c}) != target)
    certified = bool(guilty) and len(guilty) <= t and descendant_masks(code, guilty) == target
    return TraceResult(guilty, cands, certified, counter.visits, t)
