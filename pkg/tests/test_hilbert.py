"""K-polynomials, multidegrees, and the closed-form identities."""

import random

import pytest

from minorgb.fields import QQ
from minorgb.hilbert import (LaurentPoly, c_polynomial, g_multidegree,
                             h_complete, k_mn_closed, k_polynomial,
                             k_polynomial_ideal, k_polynomial_of_prime,
                             verify_recursion, verify_rg5_rg6, verify_rg7,
                             verify_rg8)
from minorgb.ideals import (MonomialIdeal, localized_length, minimal_primes,
                            predicted_gin_row)
from minorgb.matrices import build_matrix, maximal_minors
from minorgb.orders import degrevlex, lex, order_from_weight
from minorgb.ring import Ring, grid_ring


def _mono(R, s):
    (e, c), = R.parse(s).terms.items()
    return e


def _ideal(R, strs):
    return MonomialIdeal(R, [_mono(R, s) for s in strs])


def test_k_polynomial_pivot_strategy_independence():
    rng = random.Random(5)
    R = grid_ring(2, 3, field=QQ, grading="row")
    for _ in range(15):
        gens = []
        for _ in range(rng.randint(1, 4)):
            e = [0] * 6
            for i in rng.sample(range(6), rng.randint(1, 3)):
                e[i] = rng.randint(1, 2)
            gens.append(tuple(e))
        J = MonomialIdeal(R, gens)
        assert (k_polynomial(J, strategy="most-frequent")
                == k_polynomial(J, strategy="first"))


def test_k_polynomial_ideal_order_independent():
    L = build_matrix(2, 3, "row-graded", seed=1)
    minors = maximal_minors(L)
    R = L.ring
    base = k_polynomial_ideal(minors, degrevlex(R))
    assert base == k_polynomial_ideal(minors, lex(R))
    rng = random.Random(1)
    for _ in range(5):
        w = [rng.randint(1, 10 ** 6) for _ in range(R.nvars)]
        assert base == k_polynomial_ideal(minors, order_from_weight(w, R))


def test_k_polynomial_inclusion_detects_proper_containment():
    # K distinguishes an ideal from a strictly smaller one, which is the
    # equality test used when matching predicted initial ideals
    R = grid_ring(2, 3, field=QQ, grading="row")
    J = predicted_gin_row(2, 3, ring=R)
    smaller = MonomialIdeal(R, J.gens[:-1])
    assert k_polynomial(J) != k_polynomial(smaller)


def test_k_mn_closed_conventions():
    assert k_mn_closed(0, 3).is_zero()
    assert k_mn_closed(2, 1) == LaurentPoly.const(2, 1)
    k23 = k_mn_closed(2, 3)
    assert k23.terms == {(0, 0): 1, (1, 1): -3, (2, 1): 1, (1, 2): 1}


def test_closed_form_matches_predicted_staircase():
    for m, n in ((2, 3), (2, 4), (3, 4), (3, 5)):
        R = grid_ring(m, n, field=QQ, grading="row")
        assert k_polynomial(predicted_gin_row(m, n, ring=R)) \
            == k_mn_closed(m, n)


def test_prime_k_polynomial_and_multidegree():
    R = grid_ring(2, 3, field=QQ, grading="row")
    for b in ((1, 0), (2, 1), (1, 2)):
        k = k_polynomial_of_prime(R, b)
        g = g_multidegree(k)
        assert g.terms == {b: 1}


def test_multidegree_is_sum_over_minimal_primes():
    # G(S/M) = sum of localized lengths times y^b over the minimal primes
    R = grid_ring(2, 3, field=QQ, grading="row")
    for J in (predicted_gin_row(2, 3, ring=R),
              _ideal(R, ["x_1_1^2*x_2_1", "x_1_2*x_2_2"])):
        k = k_polynomial(J)
        primes = minimal_primes(J)
        codim = min(len(q) for q in primes)
        expected = LaurentPoly(2)
        for p in primes:
            if len(p) != codim:
                continue
            b = tuple(sum(1 for v in p if R.block_of[v] == i)
                      for i in range(R.nblocks))
            expected = expected + localized_length(J, p) \
                * LaurentPoly.y_power(2, b)
        assert g_multidegree(k) == expected


def test_h_complete_basic():
    assert h_complete(0, 2).terms == {(0, 0): 1}
    assert h_complete(2, 2).terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    with pytest.raises(ValueError):
        h_complete(-1, 2)


def test_c_polynomial_constant_term():
    # C(1,...,1) = K(0,...,0) = value of K at y = 0... the substitution
    # y_i -> 1 - y_i is an involution
    k = k_mn_closed(2, 3)
    assert c_polynomial(c_polynomial(k)) == k


def test_identity_checks():
    for m in range(1, 4):
        for t in range(0, 5):
            assert verify_rg8(m, t)
            assert verify_rg7(m, t)
    for m in range(1, 4):
        for n in range(m, 6):
            assert verify_rg5_rg6(m, n)
            assert verify_recursion(m, n)
