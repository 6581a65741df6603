import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from sepcodes.code import CodeError, descendant
from sepcodes.estimators import CoalitionTracer, CodeVerifier, fast_applies, verify
from sepcodes._validation import check_code_array


def arr(code):
    return np.array(code.columns)


def test_verifier_examples(ex1, ex2, dm3):
    assert CodeVerifier(property="ssc", t=2).fit(arr(ex1)).verdict_
    v = CodeVerifier(property="fpc", t=2).fit(arr(ex1))
    assert not v.predict() and v.witness_ is not None
    v = CodeVerifier(property="ssc", t=2).fit(arr(ex2))
    assert not v.verdict_ and v.witness_.coalition == {0, 4}
    v = CodeVerifier(property="sc", t=3).fit(arr(dm3))
    assert v.report_.method == "fast" and not v.verdict_


def test_method_override(dm3):
    v = CodeVerifier(property="sc", t=3, method="definitional").fit(arr(dm3))
    assert v.report_.method == "definitional" and not v.verdict_
    with pytest.raises(ValueError):
        CodeVerifier(property="sc", t=4, method="fast").fit(arr(dm3))
    with pytest.raises(ValueError):
        CodeVerifier(property="sc", t=3, method="quick").fit(arr(dm3))


def test_params_roundtrip():
    v = CodeVerifier(property="sc", t=3, n_jobs=2)
    assert v.get_params()["t"] == 3
    c = clone(v)
    assert c.get_params() == v.get_params()
    c.set_params(t=2)
    assert c.t == 2


def test_not_fitted():
    with pytest.raises(NotFittedError):
        CodeVerifier().predict()
    with pytest.raises(NotFittedError):
        CoalitionTracer().trace([{0}])


def test_tracer(ex1):
    tr = CoalitionTracer(t=2).fit(arr(ex1))
    obs = [descendant(ex1, {0, 2}), [[0], [0], [0]]]
    assert tr.predict(obs) == [frozenset({0, 2}), frozenset({0})]
    assert tr.trace(obs[0]).certified
    with pytest.raises(CodeError):
        tr.trace([[0], [0]])


def test_check_code_array():
    code = check_code_array([[0, 0, 0], [1, 2, 0]])
    assert (code.n, code.M, code.q) == (3, 2, 3)
    assert check_code_array([[0, 0], [1, 1]], q=5).q == 5
    assert check_code_array(np.array([[0.0, 1.0], [1.0, 0.0]])).columns == ((0, 1), (1, 0))
    with pytest.raises(CodeError):
        check_code_array([[0.5, 1]])
    with pytest.raises(CodeError):
        check_code_array([[-1, 1]])
    with pytest.raises(CodeError):
        check_code_array([[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        check_code_array(np.zeros((0, 3)))


def test_fast_applies(ex3, dm3):
    assert fast_applies(dm3, "ssc", 3)
    assert not fast_applies(ex3, "ssc", 3)  # q = 2
    assert fast_applies(ex3, "sc", 3)
    assert not fast_applies(ex3, "sc", 2)
    assert verify(ex3, "SSC", 3).method == "definitional"
