"""Linear-form matrices, minors, and the specialization map."""

import random
from itertools import combinations

from minorgb.fields import QQ, Field
from minorgb.groebner import initial_ideal
from minorgb.matrices import (SpecializationMatrix, build_matrix, codimension,
                              maximal_minors, random_specialization,
                              specialize_phi, y_ring)
from minorgb.orders import degrevlex


def test_minor_alternates_under_row_swap():
    L = build_matrix(2, 3, "column-graded", seed=7)
    Ls = L.row_swapped(0, 1)
    for a, b in zip(maximal_minors(L), maximal_minors(Ls)):
        assert a + b == a.ring.zero()


def test_minor_multidegrees_column_grading():
    L = build_matrix(3, 5, "column-graded", seed=2)
    for cols, p in maximal_minors(L, with_indices=True):
        if p.is_zero():
            continue
        expected = [0] * L.n
        for c in cols:
            expected[c - 1] = 1
        assert p.multidegree() == tuple(expected)


def test_minor_multidegrees_row_grading():
    L = build_matrix(2, 4, "row-graded", seed=2)
    for p in maximal_minors(L):
        if not p.is_zero():
            assert p.multidegree() == (1, 1)


def test_specialize_phi_is_a_ring_map():
    L = build_matrix(2, 3, "variables")
    R = L.ring
    F = R.field
    A = random_specialization(F, 2, 3, seed=5)
    rng = random.Random(11)
    for _ in range(10):
        f = R.zero()
        g = R.zero()
        for _ in range(3):
            e = tuple(rng.randint(0, 1) for _ in range(R.nvars))
            f = f + R.monomial(e, F(rng.randint(1, 50)))
            e = tuple(rng.randint(0, 1) for _ in range(R.nvars))
            g = g + R.monomial(e, F(rng.randint(1, 50)))
        (pf, pg, pfg, psum), T = specialize_phi([f, g, f * g, f + g], A)
        assert pfg == pf * pg
        assert psum == pf + pg


def test_specialization_sends_minors_to_squarefree_monomials():
    F = Field(32003)
    for m, n in ((2, 3), (2, 4), (3, 5)):
        A = random_specialization(F, m, n, seed=9)
        L = build_matrix(m, n, "variables", field=F)
        minors = maximal_minors(L)
        images, T = specialize_phi(minors, A)
        seen = set()
        for p in images:
            assert len(p.terms) == 1
            (e, c), = p.terms.items()
            assert max(e) == 1 and sum(e) == m
            seen.add(e)
        # all squarefree degree-m monomials in n variables appear
        assert len(seen) == len(list(combinations(range(n), m)))


def test_specialization_found_within_attempt_budget():
    F = Field(32003)
    for m in range(2, 5):
        for n in range(m + 1, 6):
            A = random_specialization(F, m, n, seed=m * 10 + n)
            for cols in combinations(range(n), m):
                assert A.scalar_minor(cols) != F(0)


def test_scalar_minor_known_values():
    F = QQ
    A = SpecializationMatrix(F, [[F(1), F(2), F(3)], [F(4), F(5), F(6)]])
    assert A.scalar_minor((0, 1)) == F(-3)
    assert A.scalar_minor((0, 2)) == F(-6)
    assert A.scalar_minor((1, 2)) == F(-3)


def test_codimension_of_minor_ideals():
    for m, n in ((2, 3), (2, 4)):
        L = build_matrix(m, n, "variables")
        c = codimension(maximal_minors(L), degrevlex(L.ring))
        assert c == n - m + 1


def test_codimension_generic_graded_matrices():
    for mode in ("column-graded", "row-graded"):
        L = build_matrix(2, 4, mode, seed=1)
        assert codimension(maximal_minors(L), degrevlex(L.ring)) == 3


def test_zero_column_detection():
    doc_entries = [["x_1_1", "0", "x_1_3"], ["x_2_1", "0", "x_2_3"]]
    L = build_matrix(2, 3, "column-graded", entries=doc_entries)
    assert L.column_is_zero(2)
    assert not L.column_is_zero(1)
