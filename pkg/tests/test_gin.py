"""Generic initial ideals under block-wise coordinate changes."""

import pytest

from minorgb.fields import QQ, Field
from minorgb.gin import (apply_group_element, exchange_move, multigraded_gin,
                         order_is_admissible)
from minorgb.hilbert import k_polynomial, k_polynomial_ideal
from minorgb.ideals import is_borel_fixed, predicted_gin_row
from minorgb.matrices import build_matrix, maximal_minors
from minorgb.orders import degrevlex, lex, order_from_weight
from minorgb.ring import Ring, grid_ring


def test_gin_of_single_variable():
    # gin(x_2) = (x_1): a generic coordinate change moves any variable
    # onto the leading one
    R = Ring(["x_1", "x_2"], field=Field(32003), blocks=[["x_1", "x_2"]])
    res = multigraded_gin([R.parse("x_2")], degrevlex(R), seed=0)
    assert res.candidate.gens_str() == ["x_1"]
    assert res.agreed and res.borel_certified


def test_exchange_move_substitution():
    R = grid_ring(1, 3, field=Field(32003), grading="row")
    el = exchange_move(R, 0, 1, 0)
    (img,) = apply_group_element(el, [R.parse("x_1_2")])
    assert img == R.parse("x_1_2 + x_1_1")
    with pytest.raises(ValueError):
        exchange_move(R, 0, 0, 1)


def test_order_admissibility():
    R = grid_ring(2, 2, field=QQ, grading="row")
    assert order_is_admissible(R, degrevlex(R))
    assert order_is_admissible(R, lex(R))
    # weights must rank earlier block variables higher
    bad = order_from_weight([1, 2, 1, 2], R)
    assert not order_is_admissible(R, bad)
    good = order_from_weight([9, 7, 5, 3], R)
    assert order_is_admissible(R, good)


def test_gin_preserves_k_polynomial():
    L = build_matrix(2, 3, "row-graded", seed=1)
    minors = maximal_minors(L)
    res = multigraded_gin(minors, degrevlex(L.ring), seed=2)
    assert res.agreed
    assert k_polynomial(res.candidate) \
        == k_polynomial_ideal(minors, degrevlex(L.ring))


def test_gin_of_row_graded_minors_matches_staircase():
    for seed in (1, 2):
        L = build_matrix(2, 3, "row-graded", seed=seed)
        minors = maximal_minors(L)
        res = multigraded_gin(minors, degrevlex(L.ring), seed=3)
        assert res.agreed and res.borel_certified
        assert is_borel_fixed(res.candidate)
        assert res.candidate == predicted_gin_row(2, 3, ring=L.ring)


def test_gin_rejects_inadmissible_order():
    R = grid_ring(2, 2, field=Field(32003), grading="row")
    bad = order_from_weight([1, 2, 1, 2], R)
    with pytest.raises(ValueError):
        multigraded_gin([R.parse("x_1_1")], bad)
