import random

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from ribbons import oracle
from ribbons.generator import (
    NoTiling,
    ShapeWeightMismatch,
    cospin_polynomial,
    enumerate_tableaux,
    level_stats,
    max_spin2,
    spin_polynomial,
)
from ribbons.polynomial import SpinPolynomial, poly_eval_one, poly_mirror
from ribbons.shapes import SkewShape, compositions, partitions, subpartitions

from conftest import skew_shapes
from kostka import count_ssyt, count_ssyt_chains
from reference import SMALL_COSPIN, SMALL_SHAPE, SMALL_SPIN, SMALL_WEIGHT

SMALL = SkewShape(SMALL_SHAPE)


def _instances(max_cells, ks):
    for n in range(max_cells + 1):
        for lam in partitions(n):
            for mu in subpartitions(lam):
                shape = SkewShape(lam, mu)
                for k in ks:
                    if len(shape) % k == 0:
                        for w in compositions(len(shape) // k):
                            yield shape, k, w


def test_published_polynomial_pair():
    assert spin_polynomial(SMALL, 3, SMALL_WEIGHT) == SpinPolynomial({2 * e: c for e, c in SMALL_SPIN.items()})
    assert cospin_polynomial(SMALL, 3, SMALL_WEIGHT) == SpinPolynomial({2 * e: c for e, c in SMALL_COSPIN.items()})
    assert max_spin2(SMALL, 3) == 14


def test_enumerate_examples():
    assert sum(1 for _ in enumerate_tableaux(SMALL, 3, SMALL_WEIGHT)) == 107
    (only,) = enumerate_tableaux(SkewShape((3,)), 3, (1,))
    assert only[0].rows == ((1, 0, 0),) and only[1] == 0
    assert sorted(s for _, s in enumerate_tableaux(SkewShape((2, 2, 2)), 3, (1, 1))) == [2, 4]


def test_small_polynomials():
    assert spin_polynomial(SkewShape((1, 1, 1)), 3, (1,)) == SpinPolynomial({2: 1})
    assert cospin_polynomial(SkewShape((1, 1, 1)), 3, (1,)) == SpinPolynomial.one()
    assert cospin_polynomial(SkewShape((3,)), 3, (1,)) == SpinPolynomial.one()
    assert max_spin2(SkewShape((3,)), 3) == 0
    assert max_spin2(SkewShape((2, 2, 2)), 3) == 4


def test_errors():
    with pytest.raises(ShapeWeightMismatch):
        spin_polynomial(SkewShape((1, 1)), 3, (1,))
    with pytest.raises(ShapeWeightMismatch):
        enumerate_tableaux(SkewShape((1, 1)), 3, (1,))
    with pytest.raises(ShapeWeightMismatch):
        level_stats(SkewShape((1, 1)), 3, (1,))
    with pytest.raises(ValueError):
        spin_polynomial(SkewShape((3,)), 1, (2, 0, 1))
    with pytest.raises(NoTiling):
        max_spin2(SkewShape((4, 2)), 3)
    with pytest.raises(NoTiling):
        max_spin2(SkewShape((1, 1)), 3)


def test_empty_shape():
    shape = SkewShape((2, 1), (2, 1))
    assert spin_polynomial(shape, 3, ()) == SpinPolynomial.one()
    assert [a.rows for a, _ in enumerate_tableaux(shape, 3, ())] == [((-1, -1), (-1,))]


def test_level_stats_small():
    st_ = level_stats(SkewShape((3,)), 3, (1,))
    assert st_.nodes == (1,) and st_.distinct_shapes == (1,)
    st_ = level_stats(SkewShape((2, 2, 2)), 3, (2,))
    assert st_.nodes == (1,) and st_.distinct_shapes == (1,)


def test_memo_modes_agree_exhaustive():
    for shape, k, w in _instances(8, (1, 2, 3, 4, 5)):
        assert spin_polynomial(shape, k, w) == spin_polynomial(shape, k, w, memoized=False), (shape, k, w)


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(skew_shapes(max_cells=15, max_outer=22), st.integers(1, 5), st.randoms(use_true_random=False))
def test_memo_modes_agree_random(shape, k, rnd):
    if len(shape) % k:
        return
    comps = list(compositions(len(shape) // k)) if len(shape) // k <= 10 else None
    w = rnd.choice(comps) if comps else tuple([1] * (len(shape) // k))
    assert spin_polynomial(shape, k, w) == spin_polynomial(shape, k, w, memoized=False)


def test_generator_matches_oracle_small():
    for shape, k, w in _instances(8, (2, 3)):
        assert spin_polynomial(shape, k, w) == oracle.brute_spin_poly(shape, k, w), (shape, k, w)


def test_enumeration_consistency():
    for shape, k, w in _instances(9, (2, 3)):
        items = list(enumerate_tableaux(shape, k, w))
        g = spin_polynomial(shape, k, w)
        assert len({a.rows for a, _ in items}) == len(items) == poly_eval_one(g)
        terms = {}
        for _, s2 in items:
            terms[s2] = terms.get(s2, 0) + 1
        assert SpinPolynomial(terms) == g
        # all exponents of one shape share a parity
        assert len({e % 2 for e in g.terms}) <= 1
        if w:
            assert level_stats(shape, k, w).nodes[-1] == poly_eval_one(g)


def test_mirror_relation_and_max_spin():
    for n in range(10):
        for lam in partitions(n):
            for mu in subpartitions(lam):
                shape = SkewShape(lam, mu)
                for k in (2, 3):
                    if len(shape) % k:
                        continue
                    brute = oracle.brute_max_spin2(shape, k)
                    if brute is None:
                        with pytest.raises(NoTiling):
                            max_spin2(shape, k)
                        continue
                    top = max_spin2(shape, k)
                    assert top == brute
                    for w in compositions(len(shape) // k):
                        g = spin_polynomial(shape, k, w)
                        if g:
                            assert poly_mirror(cospin_polynomial(shape, k, w), top) == g
                            assert g.max_exponent2() <= top


def test_k1_counts_are_kostka_numbers():
    rnd = random.Random(7)
    for _ in range(60):
        lam = rnd.choice(list(partitions(rnd.randint(1, 10))))
        mu = rnd.choice(list(subpartitions(lam)))
        shape = SkewShape(lam, mu)
        w = rnd.choice(list(compositions(len(shape)))) if len(shape) else ()
        g = spin_polynomial(shape, 1, w)
        assert set(g.terms) <= {0}
        assert poly_eval_one(g) == count_ssyt(lam, mu, w)


def test_parallel_matches_sequential():
    assert spin_polynomial(SMALL, 3, SMALL_WEIGHT, workers=2) == spin_polynomial(SMALL, 3, SMALL_WEIGHT)
    assert spin_polynomial(SMALL, 3, SMALL_WEIGHT, memoized=False, workers=2) == spin_polynomial(SMALL, 3, SMALL_WEIGHT)
    seq = [(a.rows, s) for a, s in enumerate_tableaux(SMALL, 3, SMALL_WEIGHT)]
    par = [(a.rows, s) for a, s in enumerate_tableaux(SMALL, 3, SMALL_WEIGHT, workers=2)]
    assert seq == par
    shape = SkewShape((6,) * 4)
    assert level_stats(shape, 3, (2, 1, 3, 2), workers=3) == level_stats(shape, 3, (2, 1, 3, 2))


def test_ssyt_counters_agree():
    # the two independent k = 1 references used here and in the acceptance suite
    for n in range(9):
        for lam in partitions(n):
            for mu in subpartitions(lam):
                for w in compositions(n - sum(mu)):
                    assert count_ssyt(lam, mu, w) == count_ssyt_chains(lam, mu, w)
