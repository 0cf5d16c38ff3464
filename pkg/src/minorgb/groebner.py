"""Polynomial reduction, Buchberger's algorithm, and the universal
Groebner basis certificate.

The certificate enumerates all realizable markings of the generator set
and checks, for each, that every S-pair formed with respect to the marked
terms reduces to zero.  A passing marking shows the set is a Groebner
basis for every term order inducing that marking; since realizable
markings exhaust the restrictions of term orders to the generators'
monomials, a full pass certifies universality.
"""

from .ideals import MonomialIdeal
from .markings import Marking, realizable_markings, candidate_count
from .orders import leading_term
from .ring import mono_div, mono_divides, mono_lcm, mono_mul


def reduce_poly(f, G, order):
    """Normal form of f modulo G: no term of the result is divisible by a
    leading monomial of G, and f minus the result lies in (G)."""
    G = [g for g in G if not g.is_zero()]
    if not G:
        return f
    ring = f.ring
    F = ring.field
    lms = [leading_term(order, g) for g in G]
    remainder = ring.zero()
    work = f
    while not work.is_zero():
        e, c = leading_term(order, work)
        for g, (lm, lc) in zip(G, lms):
            if mono_divides(lm, e):
                work = work - g.times_monomial(mono_div(e, lm), F.div(c, lc))
                break
        else:
            t = ring.monomial(e, c)
            remainder = remainder + t
            work = work - t
    return remainder


def s_polynomial(f, g, order):
    ef, cf = leading_term(order, f)
    eg, cg = leading_term(order, g)
    lcm = mono_lcm(ef, eg)
    F = f.ring.field
    return (f.times_monomial(mono_div(lcm, ef), F.inv(cf))
            - g.times_monomial(mono_div(lcm, eg), F.inv(cg)))


def _monic(p, order):
    _, c = leading_term(order, p)
    return p.scale(p.ring.field.inv(c))


def buchberger(gens, order):
    """Reduced Groebner basis of (gens): monic, interreduced, sorted by
    leading monomial.  Normal pair selection with the coprime and chain
    criteria."""
    G = []
    seen = set()
    for g in gens:
        if g.is_zero():
            raise ValueError("zero generator")
        g = _monic(g, order)
        if g not in seen:
            seen.add(g)
            G.append(g)
    lms = [leading_term(order, g)[0] for g in G]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    done = set()

    def lcm_of(pair):
        return mono_lcm(lms[pair[0]], lms[pair[1]])

    while pairs:
        pair = min(pairs, key=lambda p: (order.key(lcm_of(p)), p))
        pairs.discard(pair)
        done.add(pair)
        i, j = pair
        lcm = lcm_of(pair)
        if lcm == mono_mul(lms[i], lms[j]):
            continue  # coprime leading terms
        chain = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(lms[k], lcm):
                continue
            p1 = (min(i, k), max(i, k))
            p2 = (min(j, k), max(j, k))
            if p1 in done and p2 in done:
                chain = True
                break
        if chain:
            continue
        r = reduce_poly(s_polynomial(G[i], G[j], order), G, order)
        if not r.is_zero():
            r = _monic(r, order)
            G.append(r)
            lms.append(leading_term(order, r)[0])
            t = len(G) - 1
            pairs.update((k, t) for k in range(t))

    # minimalize: drop generators whose lm is divisible by another lm
    keep = []
    for i, lm in enumerate(lms):
        if not any(mono_divides(lms[k], lm) for k in range(len(G)) if
                   k != i and (lms[k] != lm or k < i)):
            keep.append(i)
    basis = [G[i] for i in keep]
    # tail-reduce
    reduced = []
    for i, g in enumerate(basis):
        others = [basis[k] for k in range(len(basis)) if k != i]
        r = reduce_poly(g, others, order) if others else g
        reduced.append(_monic(r, order))
    reduced.sort(key=lambda g: order.key(leading_term(order, g)[0]))
    return GroebnerBasis(tuple(reduced), order)


class GroebnerBasis:
    """Reduced Groebner basis with its order."""

    __slots__ = ("generators", "order")

    def __init__(self, generators, order):
        self.generators = tuple(generators)
        self.order = order

    def leading_monomials(self):
        return [leading_term(self.order, g)[0] for g in self.generators]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def initial_ideal(gens, order):
    """Minimal monomial generators of in_<(I) for I = (gens)."""
    gb = buchberger(gens, order)
    ring = gens[0].ring
    return MonomialIdeal(ring, gb.leading_monomials())


def marked_reduce(f, G, marking):
    """Normal form of f by marked division; the marking's witness order
    realizes the marked leading terms, so this equals reduce under that
    order."""
    if marking.witness is None:
        raise ValueError("marking is not realizable (no witness)")
    order = marking.order()
    for g, chosen in zip(G, marking.choices):
        if leading_term(order, g)[0] != chosen:
            raise ValueError("witness order does not reproduce the marking")
    return reduce_poly(f, G, order)


class MarkingOutcome:
    __slots__ = ("marking", "all_spairs_reduce", "failing_spair")

    def __init__(self, marking, all_spairs_reduce, failing_spair):
        self.marking = marking
        self.all_spairs_reduce = all_spairs_reduce
        self.failing_spair = failing_spair  # (i, j, normal form) or None


class UniversalityReport:
    """Outcome of the universal Groebner basis certificate."""

    def __init__(self, generators, outcomes, candidate_total):
        self.generators = tuple(generators)
        self.outcomes = outcomes
        self.candidate_total = candidate_total
        self.verdict = all(o.all_spairs_reduce for o in outcomes)

    @property
    def realizable_count(self):
        return len(self.outcomes)

    def initial_ideals(self):
        """Distinct ideals of marked terms across passing markings."""
        ring = self.generators[0].ring
        seen = {}
        for o in self.outcomes:
            if not o.all_spairs_reduce:
                continue
            ideal = MonomialIdeal(ring, o.marking.choices)
            seen[ideal] = True
        return sorted(seen, key=lambda I: I.gens)


def _marked_spair_reduces(G, marking, i, j):
    order = marking.order()
    ei = marking.choices[i]
    ej = marking.choices[j]
    lcm = mono_lcm(ei, ej)
    if lcm == mono_mul(ei, ej):
        return True, None  # coprime criterion, valid under the witness order
    F = G[0].ring.field
    ci = G[i].terms[ei]
    cj = G[j].terms[ej]
    s = (G[i].times_monomial(mono_div(lcm, ei), F.inv(ci))
         - G[j].times_monomial(mono_div(lcm, ej), F.inv(cj)))
    r = reduce_poly(s, G, order)
    if r.is_zero():
        return True, None
    return False, r


def universal_gb_certificate(gens, cap=10 ** 6, stop_on_failure=False):
    """Check whether gens form a universal Groebner basis.

    Enumerates realizable markings; for each, reduces every S-pair formed
    with respect to the marked terms.  verdict is True iff all pass.
    """
    gens = list(gens)
    if any(g.is_zero() for g in gens):
        raise ValueError("generators must be nonzero")
    for g in gens:
        g.multidegree()  # must be multihomogeneous
    markings = realizable_markings(gens, cap=cap)
    outcomes = []
    for marking in markings:
        failing = None
        ok = True
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                good, r = _marked_spair_reduces(gens, marking, i, j)
                if not good:
                    ok = False
                    failing = (i, j, r)
                    break
            if not ok:
                break
        outcomes.append(MarkingOutcome(marking, ok, failing))
        if not ok and stop_on_failure:
            break
    return UniversalityReport(gens, outcomes, candidate_count(gens))


def universal_basis(gens, cap=10 ** 7, max_rounds=10):
    """Universal Groebner basis of the ideal (gens), as a monic canonical
    list together with its passing certificate.

    Grows the candidate set by closure: every realizable marking of the
    current set yields a witness order; the reduced Groebner basis of the
    original generators under that order is folded into the set.  When a
    round adds nothing new, the certificate is run on the result.  Raises
    MarkingCapExceeded (from the enumeration) when the marking count
    explodes, so callers can fall back to sampling.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("no generators")
    ring = gens[0].ring

    def canon(p):
        e, c = leading_term_print(ring, p)
        return p.scale(ring.field.inv(c))

    basis = {}
    for g in gens:
        basis[canon(g)] = True
    seen_orders = set()
    for _ in range(max_rounds):
        grew = False
        for mk in realizable_markings(list(basis), cap=cap):
            key = mk.witness
            if key in seen_orders:
                continue
            seen_orders.add(key)
            for g in buchberger(gens, mk.order()):
                g = canon(g)
                if g not in basis:
                    basis[g] = True
                    grew = True
        if not grew:
            break
    else:
        raise ValueError("universal basis closure did not stabilize")
    result = sorted(basis, key=lambda p: sorted(p.terms))
    report = universal_gb_certificate(result, cap=cap)
    if not report.verdict:
        raise ValueError("closure stabilized but the certificate failed")
    return result, report


def leading_term_print(ring, p):
    """Leading term under the ring's display order (degrevlex)."""
    e = max(p.terms, key=ring._print_key)
    return e, p.terms[e]


def all_initial_ideals(gens, cap=10 ** 6):
    """The complete set of distinct initial ideals of (gens); requires the
    universality certificate to pass."""
    report = universal_gb_certificate(gens, cap=cap)
    if not report.verdict:
        raise ValueError(
            "generators are not a universal Groebner basis; "
            "initial-ideal enumeration would be incomplete")
    return report.initial_ideals()


def _basis_rref(rows, basis_cols, F):
    """Reduce the row space so each returned row pivots on one basis
    column (coefficient 1, zero on the other basis columns)."""
    width = len(rows[0])
    M = [list(r) for r in rows]
    r = 0
    pivots = []
    for c in basis_cols:
        piv = next(i for i in range(r, len(M)) if M[i][c])
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, a) for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return {c: M[i] for i, c in enumerate(pivots)}


def single_multidegree_initial_ideals(gens, cap=10 ** 5):
    """All initial ideals' degree-bottom layers for an ideal generated in
    one multidegree.

    A term order picks out in_<(I) in the generators' multidegree by
    Gaussian elimination on their span V: the selected monomial set is a
    basis B of the matroid of V, attained by some order exactly when a
    weight vector makes every basis monomial larger than each non-basis
    monomial of its fundamental circuit (so the reduced rows pivoted on B
    lead at B).  Returns the distinct ideals (B) over attainable bases;
    each satisfies (B) <= in_<(I) for its orders, with equality iff the
    Hilbert series agree, which callers check via K-polynomials.
    """
    from .markings import fm_witness
    from .matroids import coefficient_matrix, span_matroid
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("no nonzero generators")
    degs = {g.multidegree() for g in gens}
    if len(degs) != 1:
        raise ValueError("generators must share one multidegree")
    ring = gens[0].ring
    monos, matroid = span_matroid(gens, cap=cap)
    _, rows, F = coefficient_matrix(gens)
    nvars = ring.nvars
    out = {}
    for B in matroid.bases:
        cols = sorted(k - 1 for k in B)
        rref = _basis_rref(rows, cols, F)
        constraints = []
        for c, row in rref.items():
            for f, a in enumerate(row):
                if f != c and a:
                    constraints.append(tuple(
                        monos[c][v] - monos[f][v] for v in range(nvars)))
        if fm_witness(constraints, nvars) is None:
            continue
        ideal = MonomialIdeal(ring, [monos[c] for c in cols])
        out[ideal] = True
    return sorted(out, key=lambda I: I.gens)
