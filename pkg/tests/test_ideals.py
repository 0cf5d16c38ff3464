"""Monomial ideal combinatorics: radicality, Borel property, duality."""

import random
from itertools import combinations

from minorgb.fields import QQ
from minorgb.ideals import (MonomialIdeal, alexander_dual, borel_closure,
                            dual_of_polarized_prime_ideal, is_borel_fixed,
                            is_radical, krull_codimension, localized_length,
                            minimal_primes, polarize, predicted_gin_column,
                            predicted_gin_row, prime_as_b_vector, radical,
                            radical_borel_fixed_ideals, variable_prime)
from minorgb.matrices import build_matrix
from minorgb.ring import Ring, grid_ring, mono_divides


def _mono(R, s):
    (e, c), = R.parse(s).terms.items()
    return e


def _ideal(R, strs):
    return MonomialIdeal(R, [_mono(R, s) for s in strs])


def test_radical_and_is_radical():
    R = Ring(["x", "y", "z"], field=QQ)
    J = _ideal(R, ["x^2*y", "y*z^2"])
    assert not is_radical(J)
    Jr = radical(J)
    assert is_radical(Jr)
    assert sorted(Jr.gens_str()) == ["x*y", "y*z"]
    assert is_radical(_ideal(R, ["x*y", "z"]))


def test_borel_fixed_examples():
    R = grid_ring(2, 2, field=QQ, grading="row")
    assert is_borel_fixed(_ideal(R, ["x_1_1"]))
    # x_12 alone is not fixed: the move x_12 -> x_11 leaves the ideal
    assert not is_borel_fixed(_ideal(R, ["x_1_2"]))
    assert is_borel_fixed(_ideal(R, ["x_1_1", "x_2_1"]))
    # x_21*x_22 would need x_21^2 too
    assert not is_borel_fixed(_ideal(R, ["x_1_1", "x_2_1*x_2_2"]))


def test_borel_closure_is_borel_and_minimal():
    R = grid_ring(2, 3, field=QQ, grading="row")
    J = _ideal(R, ["x_1_2*x_2_2"])
    B = borel_closure(J)
    assert is_borel_fixed(B)
    assert all(any(mono_divides(g, f) for g in B.gens)
               for f in J.gens)


def _brute_minimal_primes(J):
    # every minimal subset of variables meeting the support of each gen
    R = J.ring
    n = R.nvars
    supports = [frozenset(i for i in range(n) if g[i]) for g in J.gens]
    covers = []
    for k in range(n + 1):
        for sub in combinations(range(n), k):
            s = set(sub)
            if all(s & sp for sp in supports):
                covers.append(frozenset(s))
    return sorted(c for c in covers
                  if not any(d < c for d in covers))


def test_minimal_primes_against_subset_oracle():
    rng = random.Random(4)
    R = Ring(["a", "b", "c", "d", "e"], field=QQ)
    for _ in range(30):
        gens = []
        for _ in range(rng.randint(1, 4)):
            e = [0] * 5
            for i in rng.sample(range(5), rng.randint(1, 3)):
                e[i] = rng.randint(1, 2)
            gens.append(tuple(e))
        J = MonomialIdeal(R, gens)
        assert minimal_primes(J) == _brute_minimal_primes(J)


def test_row_graded_2x3_prime_structure():
    R = grid_ring(2, 3, field=QQ, grading="row")
    J = predicted_gin_row(2, 3, ring=R)
    bs = [prime_as_b_vector(R, p) for p in minimal_primes(J)]
    assert sorted(bs) == [(0, 2), (1, 1), (2, 0)]
    assert krull_codimension(J) == 2


def test_localized_length_values():
    R = grid_ring(2, 3, field=QQ, grading="row")
    J = predicted_gin_row(2, 3, ring=R)
    for p in minimal_primes(J):
        assert localized_length(J, p) == 1
    R2 = Ring(["x", "y"], field=QQ)
    J2 = _ideal(R2, ["x^2"])
    assert localized_length(J2, frozenset({0})) == 2


def test_alexander_dual_involution_on_squarefree():
    rng = random.Random(7)
    R = Ring(["a", "b", "c", "d"], field=QQ)
    for _ in range(20):
        gens = []
        for _ in range(rng.randint(1, 4)):
            sub = rng.sample(range(4), rng.randint(1, 3))
            e = tuple(1 if i in sub else 0 for i in range(4))
            gens.append(e)
        J = MonomialIdeal(R, gens)
        assert alexander_dual(alexander_dual(J)) == J


def test_polarize_outputs_squarefree():
    R = Ring(["x", "y"], field=QQ)
    J = _ideal(R, ["x^2", "x*y^2"])
    P, _ = polarize(J)
    assert is_radical(P)
    assert len(P.gens) == len(J.gens)


def test_prime_dual_reconstruction():
    for blocks in ([3], [2, 2], [1, 3], [2, 3]):
        R, corpus = radical_borel_fixed_ideals(blocks)
        for J in corpus:
            assert dual_of_polarized_prime_ideal(J) == J


def test_variable_prime_roundtrip():
    R = grid_ring(2, 3, field=QQ, grading="row")
    for b in ((1, 0), (2, 3), (1, 2)):
        P = variable_prime(R, b)
        support = frozenset(i for g in P.gens for i in range(R.nvars) if g[i])
        assert prime_as_b_vector(R, support) == b


def test_predicted_gin_row_staircase():
    R = grid_ring(2, 4, field=QQ, grading="row")
    J = predicted_gin_row(2, 4, ring=R)
    # generators x_1a * x_2b with a + b <= 4
    assert sorted(J.gens_str()) == sorted(
        "x_1_%d*x_2_%d" % (a, b) for a in range(1, 4) for b in range(1, 4)
        if a + b <= 4)
    assert is_borel_fixed(J) and is_radical(J)
    assert krull_codimension(J) == 3


def test_predicted_gin_column_from_matroid():
    L = build_matrix(2, 3, "column-graded", seed=1)
    J = predicted_gin_column(L)
    assert is_borel_fixed(J) and is_radical(J)
    assert krull_codimension(J) == 2


def test_radical_borel_fixed_enumeration_properties():
    R, corpus = radical_borel_fixed_ideals([2, 2])
    assert len(corpus) == len(set(corpus))
    for J in corpus:
        assert is_radical(J) and is_borel_fixed(J)
        assert not J.is_zero() and not J.is_unit()
