import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from sepcodes.code import Code, CodeError, descendant, hamming_distance
from sepcodes.verifiers import (
    CollisionWitness,
    FramingWitness,
    ResourceCapExceeded,
    StrongSeparationWitness,
    explaining_intersection,
    is_fpc,
    is_fpc2_fast,
    is_sc,
    is_sc3_fast,
    is_ssc,
    is_ssc3_fast,
    witness_reproduces,
)

from helpers import naive_fpc, naive_sc, naive_ssc, random_code


def test_example1(ex1):
    r = is_fpc(ex1, 2)
    assert not r.verdict
    assert r.witness == FramingWitness(frozenset({1, 2}), 0)
    assert witness_reproduces(ex1, r)
    assert is_ssc(ex1, 2).verdict
    assert is_sc(ex1, 2).verdict


def test_example2(ex2):
    assert is_sc(ex2, 2).verdict
    r = is_ssc(ex2, 2)
    assert not r.verdict
    assert r.witness.coalition == {0, 4}
    assert r.witness.intersection == frozenset()
    assert witness_reproduces(ex2, r)


def test_example3(ex3):
    assert is_fpc(ex3, 2).verdict
    assert is_sc(ex3, 3).verdict
    assert is_ssc(ex3, 3).verdict
    assert is_sc3_fast(ex3).verdict
    with pytest.raises(ValueError):
        is_ssc3_fast(ex3)


def test_dm_example(dm3):
    assert is_fpc(dm3, 2).verdict
    assert is_fpc2_fast(dm3).verdict
    r = is_sc(dm3, 3)
    assert not r.verdict and witness_reproduces(dm3, r)
    assert descendant(dm3, {0, 3, 6}) == descendant(dm3, {1, 4, 7})
    fast = is_sc3_fast(dm3)
    assert not fast.verdict
    assert fast.derived.coalition_pair() == (frozenset({0, 3, 6}), frozenset({1, 4, 7}))
    assert witness_reproduces(dm3, fast)
    ssc = is_ssc3_fast(dm3)
    assert not ssc.verdict and witness_reproduces(dm3, ssc)
    assert not is_ssc(dm3, 3).verdict


def test_fpc2_fast_example1(ex1):
    r = is_fpc2_fast(ex1)
    assert not r.verdict
    assert witness_reproduces(ex1, r)


def test_fast_requires_length3(ex1):
    long = Code(ex1.rows + (ex1.rows[0],), 2)
    for fn in (is_fpc2_fast, is_sc3_fast):
        with pytest.raises(CodeError):
            fn(long)


def test_t_range(ex1):
    with pytest.raises(ValueError):
        is_sc(ex1, 1)
    with pytest.raises(ValueError):
        is_ssc(ex1, 1)
    with pytest.raises(ValueError):
        is_fpc(ex1, 0)


def test_resource_cap(dm3):
    with pytest.raises(ResourceCapExceeded):
        is_ssc(dm3, 3, max_candidates=2)
    with pytest.raises(ResourceCapExceeded):
        explaining_intersection(dm3, {0, 3, 6}, max_candidates=8)


def test_explaining_intersection_dm(dm3):
    inter, explainers = explaining_intersection(dm3, {0, 3, 6})
    assert inter == frozenset()
    assert explainers


@st.composite
def small_codes(draw, n_max=3, q_max=3, M_max=6):
    n = draw(st.integers(2, n_max))
    q = draw(st.integers(2, q_max))
    M = draw(st.integers(1, min(M_max, q**n)))
    words = draw(st.lists(st.tuples(*[st.integers(0, q - 1)] * n), min_size=M, max_size=M, unique=True))
    return Code.from_codewords(words, q, n)


@settings(max_examples=300, deadline=None)
@given(small_codes(), st.integers(2, 3))
def test_definitional_match_naive(code, t):
    assert is_fpc(code, t).verdict == naive_fpc(code, t)
    assert is_fpc(code, t - 1).verdict == naive_fpc(code, t - 1)
    assert is_sc(code, t).verdict == naive_sc(code, t)
    assert is_ssc(code, t).verdict == naive_ssc(code, t)


@settings(max_examples=300, deadline=None)
@given(small_codes(n_max=4), st.integers(1, 3))
def test_negative_witnesses_reproduce(code, t):
    for report in (is_fpc(code, t),) + ((is_sc(code, t), is_ssc(code, t)) if t >= 2 else ()):
        if not report.verdict:
            assert witness_reproduces(code, report)


def test_witness_reproduces_rejects_bogus(ex2):
    bogus = is_sc(ex2, 2)
    assert not witness_reproduces(ex2, bogus)  # positive verdicts have no evidence
    from sepcodes.verifiers import VerificationReport
    fake = VerificationReport("SC", 2, False, "definitional", CollisionWitness(frozenset({0}), frozenset({1})))
    assert not witness_reproduces(ex2, fake)
    fake = VerificationReport("SSC", 2, False, "definitional",
                              StrongSeparationWitness(frozenset({0, 4}), frozenset(), (frozenset({0, 1}),)))
    assert not witness_reproduces(ex2, fake)


def test_parallel_matches_serial():
    rng = random.Random(5)
    for _ in range(5):
        code = random_code(rng, 3, 14, 3)
        for t in (2, 3):
            a, b = is_fpc(code, t), is_fpc(code, t, n_jobs=2)
            assert a == b
            a, b = is_ssc(code, t), is_ssc(code, t, n_jobs=2)
            assert a.verdict == b.verdict and a.witness == b.witness


def test_sc3_framed_words_are_far():
    """In a 3-separable length-3 code, a codeword caught in desc(C0) but outside
    C0 differs from every member of C0 in at least two coordinates."""
    rng = random.Random(11)
    seen = 0
    for _ in range(3000):
        code = random_code(rng, 3, rng.randint(3, 7), rng.choice([3, 4]))
        if not is_sc(code, 3).verdict:
            continue
        for coal in itertools.combinations(range(code.M), 3):
            d = descendant(code, coal)
            for k, w in enumerate(code.columns):
                if k not in coal and w in d:
                    seen += 1
                    assert all(hamming_distance(w, code.codeword(c)) >= 2 for c in coal)
    assert seen > 20
