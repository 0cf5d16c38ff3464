"""Coherent markings of generator sets.

A marking picks one monomial per generator.  It is realizable when some
weight vector w satisfies w.(chosen - other) > 0 for every non-chosen
monomial of every generator.  Feasibility of the strict homogeneous
system is decided exactly by Fourier-Motzkin elimination over Q, which
also produces an interior witness vector.
"""

from fractions import Fraction
from math import gcd

from .orders import order_from_weight


class MarkingCapExceeded(RuntimeError):
    """Raised when the candidate-marking count exceeds the guardrail."""


class Marking:
    """One chosen exponent per generator, with a realizability witness."""

    __slots__ = ("choices", "witness")

    def __init__(self, choices, witness):
        self.choices = tuple(choices)
        self.witness = tuple(witness) if witness is not None else None

    def order(self, ring=None):
        if self.witness is None:
            raise ValueError("marking has no witness")
        return order_from_weight(self.witness, ring)

    def __eq__(self, other):
        return isinstance(other, Marking) and self.choices == other.choices

    def __hash__(self):
        return hash(self.choices)

    def __repr__(self):
        return "Marking(%r)" % (self.choices,)


def _primitive(row):
    g = 0
    for a in row:
        g = gcd(g, a)
    if g == 0:
        return row
    return tuple(a // g for a in row)


def fm_witness(rows, nvars):
    """Strict feasibility of {r . w > 0 for all r in rows} over Q.

    Returns a rational witness vector, or None when infeasible.  rows are
    integer tuples of length nvars; elimination proceeds in variable order
    and back-substitutes interval midpoints.
    """
    current = set()
    for r in rows:
        r = _primitive(tuple(r))
        if not any(r):
            return None  # 0 > 0
        current.add(r)

    stages = []
    for k in range(nvars):
        pos, neg, rest = [], [], set()
        involved = []
        for r in current:
            if r[k] > 0:
                pos.append(r)
                involved.append(r)
            elif r[k] < 0:
                neg.append(r)
                involved.append(r)
            else:
                rest.add(r)
        stages.append(involved)
        for p in pos:
            for q in neg:
                comb = tuple(p[k] * q[i] - q[k] * p[i]
                             for i in range(nvars))
                comb = _primitive(comb)
                if not any(comb):
                    return None
                rest.add(comb)
        current = rest
    if current:
        return None  # leftover rows are identically zero

    w = [Fraction(0)] * nvars
    for k in range(nvars - 1, -1, -1):
        lower = None
        upper = None
        for r in stages[k]:
            rest_val = sum(Fraction(r[i]) * w[i] for i in range(k + 1, nvars))
            bound = -rest_val / r[k]
            if r[k] > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        if lower is not None and upper is not None:
            w[k] = (lower + upper) / 2
        elif lower is not None:
            w[k] = lower + 1
        elif upper is not None:
            w[k] = upper - 1
    for r in rows:
        if sum(Fraction(c) * wi for c, wi in zip(r, w)) <= 0:
            raise AssertionError("Fourier-Motzkin witness failed recheck")
    return tuple(w)


def separation_rows(chosen, others):
    """Difference vectors chosen - other for one generator."""
    return [tuple(c - o for c, o in zip(chosen, other)) for other in others]


def candidate_count(gens):
    total = 1
    for g in gens:
        total *= len(g.terms)
    return total


def realizable_markings(gens, cap=10 ** 6):
    """All realizable markings of the generator set, with witnesses.

    Enumeration is lexicographic over the canonical term lists of the
    generators; infeasible prefixes are pruned by Fourier-Motzkin, and a
    parent witness is reused whenever it already separates the child's
    choice (which keeps the search close to the realizable set).
    """
    if any(g.is_zero() for g in gens):
        raise ValueError("generators must be nonzero")
    if not gens:
        return []
    nvars = gens[0].ring.nvars
    if candidate_count(gens) > cap:
        raise MarkingCapExceeded(
            "candidate marking count %d exceeds cap %d"
            % (candidate_count(gens), cap))

    term_lists = [g.monomials() for g in gens]
    out = []

    def dfs(level, rows, choices, hint):
        if level == len(gens):
            witness = hint if hint is not None else fm_witness(rows, nvars)
            if witness is not None:
                out.append(Marking(choices, witness))
            return
        for chosen in term_lists[level]:
            new_rows = separation_rows(
                chosen, [t for t in term_lists[level] if t != chosen])
            if hint is not None and all(
                    sum(c * w for c, w in zip(r, hint)) > 0
                    for r in new_rows):
                dfs(level + 1, rows + new_rows, choices + [chosen], hint)
                continue
            combined = rows + new_rows
            witness = fm_witness(combined, nvars)
            if witness is not None:
                dfs(level + 1, combined, choices + [chosen], witness)

    dfs(0, [], [], None)
    return out


def marking_is_realizable(gens, choices):
    """Exact feasibility check for one explicit marking."""
    rows = []
    for g, chosen in zip(gens, choices):
        rows.extend(separation_rows(
            chosen, [t for t in g.terms if t != chosen]))
    nvars = gens[0].ring.nvars
    return fm_witness(rows, nvars)


def induced_marking(gens, order):
    """Marking a term order induces on the generators (no witness)."""
    return tuple(max(g.terms, key=order.key) for g in gens)
