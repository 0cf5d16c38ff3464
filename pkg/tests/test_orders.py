"""Term orders: comparisons, leading terms, CLI syntax."""

import pytest

from minorgb.fields import QQ
from minorgb.orders import (degrevlex, leading_monomial, lex,
                            order_from_weight, parse_order)
from minorgb.ring import Ring


def R3():
    return Ring(["x", "y", "z"], field=QQ)


def test_lex_order():
    R = R3()
    o = lex(R)
    # x > y^5 under lex
    assert o.compare((1, 0, 0), (0, 5, 0)) == "greater"
    assert leading_monomial(o, R.parse("y^5 + x")) == (1, 0, 0)


def test_degrevlex_order():
    R = R3()
    o = degrevlex(R)
    # degree first, then reverse-lex: x*z < y^2
    assert o.compare((1, 0, 1), (0, 2, 0)) == "less"
    assert leading_monomial(o, R.parse("x*z + y^2")) == (0, 2, 0)
    assert leading_monomial(o, R.parse("x + y^2")) == (0, 2, 0)


def test_weight_order_with_tiebreak():
    R = R3()
    o = order_from_weight([1, 1, 3], R)
    assert leading_monomial(o, R.parse("x*y + z")) == (0, 0, 1)
    # equal weight falls back to the priority tiebreak
    assert o.compare((1, 0, 0), (0, 1, 0)) == "greater"


def test_compare_is_total_and_multiplicative():
    R = R3()
    for o in (lex(R), degrevlex(R), order_from_weight([2, 5, 1], R)):
        monos = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 0, 2)]
        for u in monos:
            for v in monos:
                c = o.compare(u, v)
                if u == v:
                    assert c == "equal"
                else:
                    assert c in ("less", "greater")
                    # multiplying by a common monomial preserves order
                    shifted = o.compare(
                        tuple(a + 1 for a in u), tuple(b + 1 for b in v))
                    assert shifted == c


def test_parse_order_syntax():
    R = R3()
    assert parse_order(R, "lex").kind == "lex"
    assert parse_order(R, "degrevlex").kind == "degrevlex"
    o = parse_order(R, "weight:1,2,0")
    assert leading_monomial(o, R.parse("x + y")) == (0, 1, 0)
    o2 = parse_order(R, "lex;vars:z>y>x")
    assert leading_monomial(o2, R.parse("x + z")) == (0, 0, 1)
    with pytest.raises(ValueError):
        parse_order(R, "weight:1,2")
    with pytest.raises(ValueError):
        parse_order(R, "mystery")
