"""Independent reference implementations used as test oracles.

These work on plain tuples and Python sets, straight from the definitions,
and share no code with the package's verifiers.
"""

import itertools
import random

from sepcodes.code import Code


def desc_sets(words, coal):
    return tuple(frozenset(words[k][i] for k in coal) for i in range(len(words[0])))


def _subsets(M, lo, hi):
    for k in range(lo, hi + 1):
        yield from itertools.combinations(range(M), k)


def naive_fpc(code, t):
    words = code.columns
    for coal in _subsets(code.M, 1, min(t, code.M)):
        d = desc_sets(words, coal)
        for k, w in enumerate(words):
            if k not in coal and all(x in s for x, s in zip(w, d)):
                return False
    return True


def naive_sc(code, t):
    words = code.columns
    seen = set()
    for coal in _subsets(code.M, 1, min(t, code.M)):
        d = desc_sets(words, coal)
        if d in seen:
            return False
        seen.add(d)
    return True


def naive_ssc(code, t):
    """Intersect every subset of the whole code whose descendant matches."""
    words = code.columns
    by_desc = {}
    for coal in _subsets(code.M, 1, code.M):
        by_desc.setdefault(desc_sets(words, coal), []).append(frozenset(coal))
    for coal in _subsets(code.M, 1, min(t, code.M)):
        family = by_desc[desc_sets(words, coal)]
        if frozenset.intersection(*family) != frozenset(coal):
            return False
    return True


def random_code(rng: random.Random, n, M, q):
    space = list(itertools.product(range(q), repeat=n))
    return Code.from_codewords(rng.sample(space, M), q, n)


def all_codes(n, q, max_M, min_M=1):
    space = list(itertools.product(range(q), repeat=n))
    for M in range(min_M, max_M + 1):
        for words in itertools.combinations(space, M):
            yield Code.from_codewords(words, q, n)


def planted_nabla_code(rng: random.Random, q, extra=0):
    """Six words forming a Nabla pattern, plus ``extra`` random words."""
    rows = [rng.sample(range(q), 3) for _ in range(3)]
    x = [tuple(rows[i][k] for i in range(3)) for k in range(3)]
    y = [
        (x[0][0], x[1][1], x[2][2]),
        (x[1][0], x[2][1], x[0][2]),
        (x[2][0], x[0][1], x[1][2]),
    ]
    words = x + y
    space = [w for w in itertools.product(range(q), repeat=3) if w not in words]
    words += rng.sample(space, extra)
    rng.shuffle(words)
    return Code.from_codewords(words, q, 3)
