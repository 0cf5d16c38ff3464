"""Term orders on monomials: lex, degrevlex, and weight orders.

An order carries an explicit variable priority list (most significant
first); comparisons work on exponent tuples.  Weight orders break ties
with lex on the priority list, so they are genuine term orders for any
rational weight vector.
"""

from fractions import Fraction

from .ring import mono_deg


class TermOrder:
    """Total multiplicative monomial order with 1 as minimum."""

    __slots__ = ("kind", "weights", "priority", "_rev")

    def __init__(self, kind, priority, weights=None):
        if kind not in ("lex", "degrevlex", "weight"):
            raise ValueError("unknown order kind %r" % (kind,))
        self.kind = kind
        self.priority = tuple(priority)
        self._rev = tuple(reversed(self.priority))
        if kind == "weight":
            if weights is None:
                raise ValueError("weight order needs a weight vector")
            self.weights = tuple(Fraction(w) for w in weights)
        else:
            self.weights = None

    def key(self, exps):
        """Sort key: key(u) < key(v) iff u precedes v in the order."""
        if self.kind == "lex":
            return tuple(exps[p] for p in self.priority)
        if self.kind == "degrevlex":
            return (mono_deg(exps), tuple(-exps[p] for p in self._rev))
        w = sum(wi * e for wi, e in zip(self.weights, exps))
        return (w, tuple(exps[p] for p in self.priority))

    def compare(self, u, v):
        """Return 'less', 'equal', or 'greater' for u versus v."""
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return "less"
        if ku > kv:
            return "greater"
        return "equal"

    def __eq__(self, other):
        return (isinstance(other, TermOrder) and self.kind == other.kind
                and self.priority == other.priority
                and self.weights == other.weights)

    def __hash__(self):
        return hash((self.kind, self.priority, self.weights))

    def __repr__(self):
        if self.kind == "weight":
            return "TermOrder(weight %s)" % (self.weights,)
        return "TermOrder(%s)" % self.kind


def lex(ring, priority=None):
    return TermOrder("lex", priority if priority is not None
                     else range(ring.nvars))


def degrevlex(ring, priority=None):
    return TermOrder("degrevlex", priority if priority is not None
                     else range(ring.nvars))


def order_from_weight(w, ring=None, priority=None):
    """Weight order with lex tiebreak on the declared variable list."""
    if priority is None:
        priority = range(len(w)) if ring is None else range(ring.nvars)
    return TermOrder("weight", priority, weights=w)


def compare(order, u, v):
    return order.compare(u, v)


def leading_term(order, p):
    """(exponent tuple, coefficient) of the order-maximal term of p."""
    if p.is_zero():
        raise ValueError("zero polynomial has no leading term")
    e = max(p.terms, key=order.key)
    return e, p.terms[e]


def leading_monomial(order, p):
    return leading_term(order, p)[0]


def parse_order(ring, text):
    """CLI order syntax: 'lex', 'degrevlex', 'weight:1,2,0,...', each
    optionally followed by ';vars:name>name>...' giving the priority list.
    """
    priority = None
    parts = [s.strip() for s in text.replace(";", " ").split() if s.strip()]
    kind_part = None
    for part in parts:
        if part.startswith("vars:"):
            names = part[len("vars:"):].split(">")
            priority = [ring.index[nm] for nm in names]
            if sorted(priority) != list(range(ring.nvars)):
                raise ValueError("priority list must mention every variable")
        else:
            kind_part = part
    if kind_part is None:
        raise ValueError("no order kind in %r" % (text,))
    if kind_part == "lex":
        return lex(ring, priority)
    if kind_part == "degrevlex":
        return degrevlex(ring, priority)
    if kind_part.startswith("weight:"):
        ws = [Fraction(s) for s in kind_part[len("weight:"):].split(",")]
        if len(ws) != ring.nvars:
            raise ValueError("weight vector has wrong length")
        return order_from_weight(ws, ring, priority)
    raise ValueError("unknown order %r" % (text,))
