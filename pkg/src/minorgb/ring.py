"""Multigraded polynomial rings and exact sparse polynomials.

Monomials are dense exponent tuples (one slot per ring variable).  A ring
carries a block grading: every variable belongs to exactly one block, and
its degree is the corresponding standard basis vector of Z^m.  Polynomials
are immutable dicts {exponent tuple: nonzero coefficient}.
"""

import re

from .fields import Field


def mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u, v):
    """True if x^u divides x^v."""
    return all(a <= b for a, b in zip(u, v))


def mono_div(v, u):
    """Exponent of x^v / x^u; caller guarantees divisibility."""
    return tuple(b - a for a, b in zip(u, v))


def mono_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_deg(u):
    return sum(u)


class Ring:
    """A polynomial ring: variable names, coefficient field, block grading.

    blocks: list of lists of variable names.  The order of names inside a
    block is the Borel order of the block (first name = first variable).
    Defaults to a single block containing all variables in declared order.
    """

    def __init__(self, names, field=None, blocks=None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.field = field if field is not None else Field()
        self.nvars = len(self.names)
        self.index = {name: i for i, name in enumerate(self.names)}
        if blocks is None:
            blocks = [list(self.names)]
        seen = set()
        block_ix = []
        for blk in blocks:
            row = []
            for name in blk:
                if name not in self.index or name in seen:
                    raise ValueError("bad grading block entry %r" % (name,))
                seen.add(name)
                row.append(self.index[name])
            block_ix.append(tuple(row))
        if len(seen) != self.nvars:
            raise ValueError("grading blocks must cover every variable")
        self.blocks = tuple(block_ix)
        self.nblocks = len(self.blocks)
        self.block_of = [None] * self.nvars
        self.position_in_block = [None] * self.nvars
        for b, row in enumerate(self.blocks):
            for pos, v in enumerate(row):
                self.block_of[v] = b
                self.position_in_block[v] = pos
        self.block_of = tuple(self.block_of)
        self.position_in_block = tuple(self.position_in_block)
        self._zero_exp = (0,) * self.nvars

    # -- constructors ----------------------------------------------------

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {self._zero_exp: self.field.one()})

    def constant(self, c):
        c = self.field(c)
        return Poly(self, {self._zero_exp: c} if c else {})

    def var(self, i):
        if isinstance(i, str):
            i = self.index[i]
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one()})

    def monomial(self, exps, coeff=1):
        c = self.field(coeff)
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent tuple has wrong length")
        return Poly(self, {exps: c} if c else {})

    def from_terms(self, terms):
        clean = {}
        for e, c in terms.items():
            c = self.field(c)
            if c:
                clean[tuple(e)] = c
        return Poly(self, clean)

    # -- grading ---------------------------------------------------------

    def mono_multidegree(self, exps):
        d = [0] * self.nblocks
        for v, e in enumerate(exps):
            if e:
                d[self.block_of[v]] += e
        return tuple(d)

    def same_ring(self, other):
        return (self.names == other.names and self.field == other.field
                and self.blocks == other.blocks)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.same_ring(other)

    def __hash__(self):
        return hash((self.names, self.field, self.blocks))

    def __repr__(self):
        return "Ring(%s over %r, %d blocks)" % (
            ",".join(self.names), self.field, self.nblocks)

    # -- printing order (degrevlex on declared list; presentational) ------

    def _print_key(self, exps):
        return (mono_deg(exps), tuple(-e for e in reversed(exps)))

    def mono_str(self, exps):
        parts = []
        for v, e in enumerate(exps):
            if e == 1:
                parts.append(self.names[v])
            elif e > 1:
                parts.append("%s^%d" % (self.names[v], e))
        return "*".join(parts) if parts else "1"

    def parse(self, text):
        return _parse(self, text)


class RingMismatch(ValueError):
    pass


class Poly:
    """Immutable exact multivariate polynomial."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch("polynomials live in different rings")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out.get(e, F.zero()), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    def __sub__(self, other):
        self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.sub(out.get(e, F.zero()), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    def __neg__(self):
        F = self.ring.field
        return Poly(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        F = self.ring.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                s = F.add(out.get(e, F.zero()), F.mul(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.ring, out)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c):
        F = self.ring.field
        c = F(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {e: F.mul(v, c) for e, v in self.terms.items()})

    def times_monomial(self, exps, coeff=1):
        F = self.ring.field
        c = F(coeff)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {mono_mul(e, exps): F.mul(v, c)
                                for e, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def monomials(self):
        """Exponent tuples in descending canonical (print) order."""
        return sorted(self.terms, key=self.ring._print_key, reverse=True)

    def total_degree(self):
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(mono_deg(e) for e in self.terms)

    def multidegree(self):
        """Common multidegree of all terms.

        Raises ValueError on the zero polynomial or if the polynomial is
        not multihomogeneous.
        """
        if not self.terms:
            raise ValueError("zero polynomial")
        degs = {self.ring.mono_multidegree(e) for e in self.terms}
        if len(degs) != 1:
            raise ValueError("not multihomogeneous")
        return degs.pop()

    def is_multihomogeneous(self):
        try:
            self.multidegree()
            return True
        except ValueError:
            return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        R = self.ring
        bits = []
        for e in self.monomials():
            c = self.terms[e]
            m = R.mono_str(e)
            if m == "1":
                s = str(c)
            elif c == R.field.one():
                s = m
            elif R.field.p == 0 and c == -1:
                s = "-" + m
            else:
                s = "%s*%s" % (c, m)
            bits.append(s)
        out = bits[0]
        for s in bits[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    __repr__ = __str__


def poly_arith(a, b, op):
    """Dispatch-style exact arithmetic ('add' | 'sub' | 'mul')."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % (op,))


# -- parser ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()]))")


class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__("%s at position %d" % (msg, pos))
        self.pos = pos


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                raise ParseError("unexpected character %r" % text[pos], pos)
            break
        if m.group(1):
            tokens.append(("int", int(m.group(1)), m.start()))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start()))
        else:
            tokens.append((m.group(3), None, m.start()))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, ring, text):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expr(self):
        kind, _, _ = self.peek()
        neg = False
        if kind in ("+", "-"):
            neg = self.take()[0] == "-"
        p = self.term()
        if neg:
            p = -p
        while True:
            kind, _, _ = self.peek()
            if kind == "+":
                self.take()
                p = p + self.term()
            elif kind == "-":
                self.take()
                p = p - self.term()
            else:
                return p

    def term(self):
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self):
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("expected integer exponent", pos)
            return base ** val
        return base

    def base(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.ring.constant(val)
        if kind == "name":
            if val not in self.ring.index:
                raise ParseError("unknown variable %r" % val, pos)
            return self.ring.var(val)
        if kind == "(":
            p = self.expr()
            kind, _, pos = self.take()
            if kind != ")":
                raise ParseError("expected ')'", pos)
            return p
        if kind == "-":
            return -self.factor()
        raise ParseError("unexpected token", pos)


def _parse(ring, text):
    p = _Parser(ring, text)
    out = p.expr()
    kind, _, pos = p.peek()
    if kind != "end":
        raise ParseError("trailing input", pos)
    return out


def parse_poly(text, ring):
    """Parse a polynomial expression in the given ring."""
    return _parse(ring, text)


def grid_ring(m, n, field=None, grading="none", prefix="x"):
    """Ring on the m*n variables x_i_j of an m-by-n matrix.

    grading: 'none' (one block), 'column' (block j = column j, ordered by
    row), or 'row' (block i = row i, ordered by column).
    """
    names = ["%s_%d_%d" % (prefix, i, j)
             for i in range(1, m + 1) for j in range(1, n + 1)]
    if grading == "none":
        blocks = None
    elif grading == "column":
        blocks = [["%s_%d_%d" % (prefix, i, j) for i in range(1, m + 1)]
                  for j in range(1, n + 1)]
    elif grading == "row":
        blocks = [["%s_%d_%d" % (prefix, i, j) for j in range(1, n + 1)]
                  for i in range(1, m + 1)]
    else:
        raise ValueError("grading must be none|column|row")
    return Ring(names, field=field, blocks=blocks)
