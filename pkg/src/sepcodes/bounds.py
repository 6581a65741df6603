"""Closed-form bounds on M(t, n, q), the largest strongly t-separable (n, M, q) code.

Everything is exact integer arithmetic; floors of irrational expressions go
through ``math.isqrt``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .field import prime_power


class BoundError(ValueError):
    pass


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def bound_sc_upper(t: int, n: int, q: int) -> int:
    """Upper bound for t >= 3, n >= 2, valid whenever M(t, n, q) > q."""
    if t < 3 or n < 2 or q < 2:
        raise BoundError(f"needs t >= 3, n >= 2, q >= 2 (got t={t}, n={n}, q={q})")
    r = n % (t - 1)
    hi = q ** _ceil_div(n, t - 1)
    lo = q ** (n // (t - 1))
    return max(hi, r * (hi - 1) + (t - 1 - r) * (lo - 1))


def bound_2sc_length_n(n: int, q: int) -> int:
    if n < 1 or q < 2:
        raise BoundError(f"needs n >= 1, q >= 2 (got n={n}, q={q})")
    f = q ** (n // 3)
    # f(f-1) is even, so the half term is integral
    return q ** _ceil_div(2 * n, 3) + f * (f - 1) // 2


@dataclass(frozen=True)
class Bound22:
    value: int
    k: int
    t: int
    case: str
    exact: bool


def _floor_half_diff_sqrt(A: int, B: int) -> int:
    """floor((A - sqrt(B)) / 2) for integers A, B >= 0."""
    s = isqrt(B)
    if s * s == B:
        return (A - s) // 2
    # sqrt(B) lies strictly in (s, s+1)
    return (A - s - 1) // 2


def _is_prime_power(k: int) -> bool:
    return prime_power(k) is not None


def bound_22(q: int) -> Bound22:
    """M(2, 2, q) <= q*k + t with the five-case correction term t."""
    if q < 2:
        raise BoundError(f"needs q >= 2 (got q={q})")
    k = (1 + isqrt(4 * q - 3)) // 2
    if k * k - k + 1 <= q <= k * k - 1:
        t, case = 0, "k^2-k+1 <= q <= k^2-1"
    elif q == k * k:
        A = 3 * k * k + k - 1
        B = 5 * k**4 + 6 * k**3 - k * k - 2 * k + 1
        t, case = _floor_half_diff_sqrt(A, B), "q = k^2"
    elif k * k + 1 <= q <= k * k + k - 2:
        t, case = (k - 1) * q // ((k + 1) ** 2 - (q + 1)), "k^2+1 <= q <= k^2+k-2"
    elif q == k * k + k - 1:
        t, case = k * k - k, "q = k^2+k-1"
    elif q == k * k + k:
        t, case = k * k, "q = k^2+k"
    else:  # pragma: no cover - k's definition puts q in [k^2-k+1, k^2+k]
        raise BoundError(f"q = {q} outside the case table for k = {k}")
    exact = False
    for kk in (k - 1, k):
        if kk >= 2 and _is_prime_power(kk):
            if q in (kk * kk - 1, kk * kk + kk - 2, kk * kk + kk - 1, kk * kk + kk, kk * kk + kk + 1):
                exact = True
    return Bound22(q * k + t, k, t, case, exact)


@dataclass(frozen=True)
class SmallN:
    value: int
    kind: str  # "exact" or "upper"
    branch: str


def bound_small_n(t: int, n: int, q: int) -> SmallN:
    """n < t: M = n(q-1) exactly.  n = t: M <= q^2 if n <= q, else M <= nq."""
    if n < 2 or q < 2:
        raise BoundError(f"needs n >= 2, q >= 2 (got n={n}, q={q})")
    if n > t:
        raise BoundError(f"needs n <= t (got n={n}, t={t})")
    if n < t:
        return SmallN(n * (q - 1), "exact", "n < t")
    if n <= q:
        return SmallN(q * q, "upper", "n = t, n <= q")
    return SmallN(n * q, "upper", "n = t, n > q")


def bound_33(q: int) -> tuple[int, int]:
    """(floor(sqrt q)^3, floor(3 q^2 / 4)) for q >= 4."""
    if q < 4:
        raise BoundError(f"needs q >= 4 (got q={q})")
    r = isqrt(q)
    return r**3, 3 * q * q // 4


def sixth_power_base(q: int) -> int | None:
    """q1 when q = q1^6 with q1 a prime power, 1 mod 6."""
    r = round(q ** (1 / 6))
    for q1 in (r - 1, r, r + 1):
        if q1 >= 2 and q1**6 == q and q1 % 6 == 1 and _is_prime_power(q1):
            return q1
    return None


@dataclass(frozen=True)
class BoundEntry:
    source: str
    kind: str  # "lower" or "upper"
    value: int
    note: str = ""

    def to_dict(self) -> dict:
        return {"source": self.source, "kind": self.kind, "value": self.value, "note": self.note}


@dataclass
class BoundReport:
    t: int
    n: int
    q: int
    all_bounds: list[BoundEntry] = field(default_factory=list)
    annotations: list[str] = field(default_factory=list)

    def _best(self, kind):
        cands = [b for b in self.all_bounds if b.kind == kind]
        if not cands:
            return None
        pick = max if kind == "lower" else min
        return pick(cands, key=lambda b: b.value)

    @property
    def lower(self) -> BoundEntry | None:
        return self._best("lower")

    @property
    def upper(self) -> BoundEntry | None:
        return self._best("upper")

    def consistent(self) -> bool:
        lo, up = self.lower, self.upper
        return lo is None or up is None or lo.value <= up.value

    def to_dict(self) -> dict:
        def best(b):
            return None if b is None else {"value": b.value, "source": b.source}

        return {
            "params": {"t": self.t, "n": self.n, "q": self.q},
            "best_lower": best(self.lower),
            "best_upper": best(self.upper),
            "all": [b.to_dict() for b in self.all_bounds],
            "annotations": list(self.annotations),
        }


def bound_report(t: int, n: int, q: int, certified: list[tuple[int, str]] | None = None) -> BoundReport:
    """Every bound that applies to (t, n, q), plus certified constructions ``(M, label)``."""
    if t < 2 or n < 1 or q < 2:
        raise BoundError(f"needs t >= 2, n >= 1, q >= 2 (got t={t}, n={n}, q={q})")
    rep = BoundReport(t, n, q)
    add = rep.all_bounds.append
    if t >= 3 and n >= 2:
        add(BoundEntry("bound_sc_upper", "upper", bound_sc_upper(t, n, q), "conditional on M > q"))
    if t == 2:
        add(BoundEntry("bound_2sc_length_n", "upper", bound_2sc_length_n(n, q)))
        if n == 2:
            b = bound_22(q)
            note = f"k={b.k}, t={b.t}, case {b.case}" + ("; attained (exact)" if b.exact else "")
            add(BoundEntry("bound_22", "upper", b.value, note))
            if b.exact:
                add(BoundEntry("bound_22", "lower", b.value, "optimal codes exist for this q"))
    if 2 <= n <= t:
        s = bound_small_n(t, n, q)
        add(BoundEntry("bound_small_n", "upper", s.value, s.branch))
        if s.kind == "exact":
            add(BoundEntry("bound_small_n", "lower", s.value, s.branch))
    if t == 3 and n == 3 and q >= 4:
        lo, up = bound_33(q)
        add(BoundEntry("bound_33", "lower", lo))
        add(BoundEntry("bound_33", "upper", up))
        q1 = sixth_power_base(q)
        if q1 is not None:
            rep.annotations.append(
                f"sixth-power regime: q = {q1}^6 with {q1} = 1 mod 6 admits M = Omega(q^(5/3) + q^(4/3) - q); "
                "no constant is given, so no numeric bound is asserted"
            )
    for M, label in certified or ():
        add(BoundEntry(label, "lower", M, "certified construction"))
    return rep
