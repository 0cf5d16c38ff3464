"""Multigraded Hilbert-series numerators (K-polynomials), C-polynomials,
G-multidegrees, the closed formula for the row-graded minor ideal, its
recursion, and the complete-symmetric-function identities.

K-polynomials are integer Laurent polynomials in y_1..y_m stored as
{exponent vector: int}.  The pivot recursion is
K(S/M) = K(S/(M + (x_v))) + y^{deg x_v} * K(S/(M : x_v)),
with pairwise-coprime generator sets as the closed-form base case.
"""

from itertools import combinations
from math import comb

from .ideals import MonomialIdeal, minimalize


class LaurentPoly:
    """Finitely supported integer Laurent polynomial in m variables."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def const(cls, m, c=1):
        return cls(m, {(0,) * m: c})

    @classmethod
    def y_power(cls, m, exps, c=1):
        return cls(m, {tuple(exps): c})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(self.m, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(self.m, out)

    def __neg__(self):
        return LaurentPoly(self.m, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.m,
                               {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(self.m, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly) and self.m == other.m
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def substitute_affine(self, shift, sign):
        """y_i -> shift + sign*y_i (shift, sign integers), exactly."""
        out = LaurentPoly(self.m)
        for e, c in self.terms.items():
            if any(x < 0 for x in e):
                raise ValueError("substitution needs a true polynomial")
            piece = LaurentPoly.const(self.m, c)
            for i, exp in enumerate(e):
                unit = [0] * self.m
                unit[i] = 1
                lin = (LaurentPoly.const(self.m, shift)
                       + LaurentPoly.y_power(self.m, unit, sign))
                for _ in range(exp):
                    piece = piece * lin
            out = out + piece
        return out

    def embed(self, m):
        """Reinterpret in m >= self.m variables (append zero exponents)."""
        pad = (0,) * (m - self.m)
        return LaurentPoly(m, {e + pad: c for e, c in self.terms.items()})

    def serialize(self):
        return sorted((list(e), c) for e, c in self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join("y%d^%d" % (i + 1, x)
                            for i, x in enumerate(e) if x) or "1"
            bits.append("%+d*%s" % (c, mono))
        return " ".join(bits)


def one_minus_y(m, i):
    unit = [0] * m
    unit[i] = 1
    return LaurentPoly.const(m, 1) - LaurentPoly.y_power(m, unit)


# -- K-polynomial of a monomial ideal ----------------------------------------

def _pivot_variable(gens, strategy):
    counts = {}
    for g in gens:
        for v, e in enumerate(g):
            if e:
                counts[v] = counts.get(v, 0) + 1
    if strategy == "most-frequent":
        return max(sorted(counts), key=lambda v: counts[v])
    # 'first': first variable of the first non-simple generator
    for g in sorted(gens):
        support = [v for v, e in enumerate(g) if e]
        if len(support) > 1 or any(counts[v] > 1 for v in support):
            return support[0]
    return min(counts)


def k_polynomial(M, strategy="most-frequent"):
    """K-polynomial of S/M for a monomial ideal M, by pivot recursion."""
    ring = M.ring
    m = ring.nblocks

    def mdeg(g):
        return ring.mono_multidegree(g)

    memo = {}

    def rec(gens):
        gens = tuple(sorted(gens))
        if gens in memo:
            return memo[gens]
        if any(not any(g) for g in gens):
            return LaurentPoly(m)  # unit ideal, S/M = 0
        # base case: pairwise coprime generators form a regular sequence
        coprime = True
        seen = set()
        for g in gens:
            sup = {v for v, e in enumerate(g) if e}
            if sup & seen:
                coprime = False
                break
            seen |= sup
        if coprime:
            out = LaurentPoly.const(m, 1)
            for g in gens:
                out = out * (LaurentPoly.const(m, 1)
                             - LaurentPoly.y_power(m, mdeg(g)))
            memo[gens] = out
            return out
        v = _pivot_variable(gens, strategy)
        unit = [0] * ring.nvars
        unit[v] = 1
        pivot = tuple(unit)
        plus = minimalize(list(gens) + [pivot])
        colon = minimalize([tuple(e - 1 if i == v and e else e
                                  for i, e in enumerate(g)) for g in gens])
        out = (rec(tuple(plus))
               + LaurentPoly.y_power(m, mdeg(pivot)) * rec(tuple(colon)))
        memo[gens] = out
        return out

    return rec(M.gens)


def k_polynomial_ideal(gens, order, check_order=None):
    """K-polynomial of S/(gens) via the initial monomial ideal; optionally
    asserts order-independence against a second order."""
    from .groebner import initial_ideal
    for g in gens:
        g.multidegree()
    lead = initial_ideal(gens, order)
    out = k_polynomial(lead)
    if check_order is not None:
        other = k_polynomial(initial_ideal(gens, check_order))
        if other != out:
            raise AssertionError("K-polynomial differs between orders")
    return out


# -- C-polynomial and G-multidegree ------------------------------------------

def c_polynomial(k):
    """K evaluated at (1-y_1, ..., 1-y_m)."""
    return k.substitute_affine(1, -1)


def g_multidegree(k):
    """Sum of the support-minimal terms of the C-polynomial."""
    c = c_polynomial(k)
    exps = list(c.terms)
    minimal = [e for e in exps
               if not any(f != e and all(a <= b for a, b in zip(f, e))
                          for f in exps)]
    return LaurentPoly(k.m, {e: c.terms[e] for e in minimal})


# -- closed formula, identities, recursion ------------------------------------

def h_complete(k, m):
    """Complete homogeneous symmetric polynomial of degree k in m
    variables: the sum of all degree-k monomials."""
    if k < 0:
        raise ValueError("negative degree")
    if m == 0:
        return LaurentPoly.const(0, 1 if k == 0 else 0)
    out = {}
    for bars in combinations(range(k + m - 1), m - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(k + m - 2 - prev)
        out[tuple(exps)] = 1
    return LaurentPoly(m, out)


def k_mn_closed(m, n):
    """Closed form of the K-polynomial of S/I_m for the m x n row-graded
    variable matrix: 1 - (y_1...y_m) * sum_k (-1)^k C(n, m+k) h_k.

    Conventions: m = 0 gives 0 (unit ideal); n < m gives 1 (zero ideal).
    """
    if m == 0:
        return LaurentPoly(0)
    if n < m:
        return LaurentPoly.const(m, 1)
    acc = LaurentPoly(m)
    for k in range(n - m + 1):
        acc = acc + (-1) ** k * comb(n, m + k) * h_complete(k, m)
    return LaurentPoly.const(m, 1) - LaurentPoly.y_power(m, (1,) * m) * acc


def verify_rg8(m, t):
    """h_t(1+y) = sum_k C(m+t-1, m+k-1) h_k(y), checked by expansion."""
    lhs = h_complete(t, m).substitute_affine(1, 1)
    rhs = LaurentPoly(m)
    for k in range(t + 1):
        rhs = rhs + comb(m + t - 1, m + k - 1) * h_complete(k, m)
    return lhs == rhs


def verify_rg7(m, t):
    """sum_{k<=t} h_k(1+y) = sum_{k<=t} C(m+t, m+k) h_k(y)."""
    lhs = LaurentPoly(m)
    rhs = LaurentPoly(m)
    for k in range(t + 1):
        lhs = lhs + h_complete(k, m).substitute_affine(1, 1)
        rhs = rhs + comb(m + t, m + k) * h_complete(k, m)
    return lhs == rhs


def verify_rg5_rg6(m, n):
    """The pair of equivalent identities closing the Hilbert-series
    comparison: sum h_k(1-y) = sum (-1)^k C(n,m+k) h_k(y), its sign-flipped
    form with 1+y, and the equivalence of the two under y -> -y."""
    t = n - m
    lhs5 = LaurentPoly(m)
    rhs5 = LaurentPoly(m)
    lhs6 = LaurentPoly(m)
    rhs6 = LaurentPoly(m)
    for k in range(t + 1):
        hk = h_complete(k, m)
        lhs5 = lhs5 + hk.substitute_affine(1, -1)
        rhs5 = rhs5 + (-1) ** k * comb(n, m + k) * hk
        lhs6 = lhs6 + hk.substitute_affine(1, 1)
        rhs6 = rhs6 + comb(n, m + k) * hk
    if lhs5 != rhs5 or lhs6 != rhs6:
        return False
    # sign substitution carries the first identity to the second
    return (lhs5.substitute_affine(0, -1) == lhs6
            and rhs5.substitute_affine(0, -1) == rhs6)


def verify_recursion(m, n):
    """K_{m,n} = (1-y_m) K_{m,n-1} + y_m K_{m-1,n-1}, with K_{0,.} = 0 and
    K_{m,n} = 1 for n < m."""
    lhs = k_mn_closed(m, n)
    unit = [0] * m
    unit[m - 1] = 1
    first = one_minus_y(m, m - 1) * k_mn_closed(m, n - 1)
    second = (LaurentPoly.y_power(m, unit)
              * k_mn_closed(m - 1, n - 1).embed(m))
    return lhs == first + second


def k_polynomial_of_prime(ring, b):
    """K(S/P_b) = prod_i (1-y_i)^{b_i}."""
    m = ring.nblocks
    out = LaurentPoly.const(m, 1)
    for i, bi in enumerate(b):
        for _ in range(bi):
            out = out * one_minus_y(m, i)
    return out
