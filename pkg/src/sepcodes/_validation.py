"""Input checks shared by the estimator wrappers."""

from __future__ import annotations

import numpy as np
from sklearn.utils import check_array

from .code import Code, CodeError


def check_code_array(X, q: int | None = None) -> Code:
    """Turn an (M, n) array of codewords (one per row) into a :class:`Code`.

    ``q`` defaults to the largest symbol plus one.
    """
    if isinstance(X, Code):
        if q is not None and q != X.q:
            raise CodeError(f"alphabet size {q} disagrees with the code's q = {X.q}")
        return X
    arr = check_array(X, dtype=None, ensure_2d=True, ensure_min_samples=1, ensure_min_features=1)
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise CodeError("code symbols must be integers")
        arr = arr.astype(np.int64)
    if arr.min() < 0:
        raise CodeError("code symbols must be non-negative")
    if q is None:
        q = int(arr.max()) + 1
    return Code.from_codewords((tuple(int(v) for v in row) for row in arr), q, arr.shape[1])


def check_positive_int(value, name: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)
