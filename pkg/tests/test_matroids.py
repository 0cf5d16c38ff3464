"""Column matroids, duals, and spans of coefficient matrices."""

import pytest

from minorgb.fields import QQ
from minorgb.ideals import is_radical
from minorgb.matrices import build_matrix, maximal_minors
from minorgb.matroids import (BasisCapExceeded, Matroid, column_matroid,
                              span_matroid, stanley_reisner)
from minorgb.ring import Ring


def test_column_matroid_generic():
    L = build_matrix(2, 3, "column-graded", seed=1)
    M = column_matroid(L)
    assert M.is_uniform()
    assert M.rank_value == 2
    assert M.circuits() == [frozenset({1, 2, 3})]


def test_column_matroid_zero_column_is_loop():
    ents = [["x_1_1", "0", "x_1_3"], ["x_2_1", "0", "x_2_3"]]
    L = build_matrix(2, 3, "column-graded", entries=ents)
    M = column_matroid(L)
    assert M.rank_value == 2
    assert sorted(map(sorted, M.bases)) == [[1, 3]]
    assert frozenset({2}) in M.circuits()


def test_dual_matroid():
    M = Matroid(4, [frozenset(b) for b in ((1, 2), (1, 3), (2, 3))])
    D = M.dual()
    assert D.rank_value == 2
    assert set(D.bases) == {frozenset({1, 2, 3, 4}) - b for b in M.bases}
    assert D.dual().bases == M.bases


def test_stanley_reisner_of_uniform():
    M = Matroid(3, [frozenset(b) for b in ((1, 2), (1, 3), (2, 3))])
    R = Ring(["a", "b", "c"], field=QQ)
    J = stanley_reisner(M, R)
    # non-faces of the independence complex: only the full set
    assert J.gens_str() == ["a*b*c"]
    assert is_radical(J)


def test_span_matroid_counts():
    for (m, n), total in (((2, 3), 78), ((2, 4), 7272)):
        L = build_matrix(m, n, "row-graded", seed=1)
        minors = [p for p in maximal_minors(L) if not p.is_zero()]
        monos, M = span_matroid(minors)
        assert M.rank_value == len(minors)
        assert len(M.bases) == total
        assert len(monos) == M.n


def test_span_matroid_cap():
    L = build_matrix(3, 5, "row-graded", seed=1)
    minors = [p for p in maximal_minors(L) if not p.is_zero()]
    with pytest.raises(BasisCapExceeded):
        span_matroid(minors, cap=1000)
