"""scikit-learn style wrappers around the verifiers and the tracer.

A code is passed as an (M, n) array with one codeword per row, the layout
``fit`` methods conventionally expect.  Fitted state carries a trailing
underscore.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_code_array, check_positive_int
from .code import CodeError, DescendantSet
from .tracing import trace
from .verifiers import (
    DEFAULT_MAX_CANDIDATES,
    is_fpc,
    is_fpc2_fast,
    is_sc,
    is_sc3_fast,
    is_ssc,
    is_ssc3_fast,
)

METHODS = ("auto", "fast", "definitional")


def fast_applies(code, property: str, t: int) -> bool:
    """Whether a fast length-3 verifier covers (property, t) for this code."""
    if code.n != 3:
        return False
    if property == "fpc":
        return t == 2
    if property == "sc":
        return t == 3
    return t == 3 and code.q >= 3


def verify(code, property: str, t: int, method: str = "auto",
           max_candidates: int | None = DEFAULT_MAX_CANDIDATES, n_jobs: int = 1):
    """Dispatch to the fast or definitional verifier."""
    prop = property.lower()
    if prop not in ("fpc", "sc", "ssc"):
        raise ValueError(f"unknown property {property!r}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    fast = fast_applies(code, prop, t)
    if method == "fast" and not fast:
        raise ValueError(f"no fast verifier for property={prop}, t={t}, n={code.n}, q={code.q}")
    if method == "fast" or (method == "auto" and fast):
        return {"fpc": is_fpc2_fast, "sc": is_sc3_fast, "ssc": is_ssc3_fast}[prop](code)
    if prop == "fpc":
        return is_fpc(code, t, n_jobs=n_jobs)
    if prop == "sc":
        return is_sc(code, t)
    return is_ssc(code, t, max_candidates, n_jobs=n_jobs)


class CodeVerifier(BaseEstimator):
    """Check one separability property of the code given to ``fit``."""

    def __init__(self, property="ssc", t=2, method="auto", q=None,
                 max_candidates=DEFAULT_MAX_CANDIDATES, n_jobs=1):
        self.property = property
        self.t = t
        self.method = method
        self.q = q
        self.max_candidates = max_candidates
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        t = check_positive_int(self.t, "t")
        code = check_code_array(X, self.q)
        self.code_ = code
        self.report_ = verify(code, self.property, t, self.method, self.max_candidates, self.n_jobs)
        self.verdict_ = self.report_.verdict
        self.witness_ = self.report_.witness
        return self

    def predict(self, X=None):
        check_is_fitted(self, "report_")
        return self.verdict_


class CoalitionTracer(BaseEstimator):
    """Identify colluders from observed descendant sets."""

    def __init__(self, t=2, q=None, max_candidates=None):
        self.t = t
        self.q = q
        self.max_candidates = max_candidates

    def fit(self, X, y=None):
        check_positive_int(self.t, "t")
        self.code_ = check_code_array(X, self.q)
        return self

    def _as_observation(self, obs) -> DescendantSet:
        if isinstance(obs, DescendantSet):
            d = obs
        else:
            d = DescendantSet(tuple(frozenset(int(v) for v in s) for s in obs))
        if d.n != self.code_.n:
            raise CodeError(f"observation has {d.n} coordinates, code has {self.code_.n}")
        return d

    def trace(self, obs):
        check_is_fitted(self, "code_")
        return trace(self.code_, self._as_observation(obs), self.t, self.max_candidates)

    def predict(self, observations):
        """Guilty sets (0-based codeword indices), one per observation."""
        return [self.trace(obs).guilty for obs in observations]
