"""Column matroids of matrices of linear forms, matroid duality, and
Stanley-Reisner ideals of independence complexes.

Bases are the m-subsets of columns with nonvanishing maximal minor; the
exchange axiom is validated on construction for small ground sets.
"""

from itertools import combinations

from .ideals import MonomialIdeal


class Matroid:
    """Matroid on ground set {1..n} given by its bases."""

    __slots__ = ("n", "bases", "rank_value")

    def __init__(self, n, bases, validate=None):
        self.n = n
        self.bases = frozenset(frozenset(b) for b in bases)
        if not self.bases:
            raise ValueError("a matroid needs at least one basis")
        sizes = {len(b) for b in self.bases}
        if len(sizes) != 1:
            raise ValueError("bases must be equicardinal")
        self.rank_value = sizes.pop()
        if validate is None:
            validate = n <= 12
        if validate:
            self._validate_exchange()

    def _validate_exchange(self):
        for b1 in self.bases:
            for b2 in self.bases:
                for x in b1 - b2:
                    if not any(b1 - {x} | {y} in self.bases
                               for y in b2 - b1):
                        raise ValueError("basis exchange axiom fails")

    def rank(self, subset):
        subset = frozenset(subset)
        return max(len(subset & b) for b in self.bases)

    def is_independent(self, subset):
        subset = frozenset(subset)
        return any(subset <= b for b in self.bases)

    def circuits(self):
        """Minimal dependent subsets."""
        out = []
        for r in range(1, self.rank_value + 2):
            for sub in combinations(range(1, self.n + 1), r):
                s = frozenset(sub)
                if not self.is_independent(s) and all(
                        self.is_independent(s - {x}) for x in s):
                    out.append(s)
        return sorted(out, key=lambda s: (len(s), sorted(s)))

    def dual(self):
        ground = frozenset(range(1, self.n + 1))
        return Matroid(self.n, [ground - b for b in self.bases],
                       validate=False)

    def is_uniform(self, r=None):
        r = self.rank_value if r is None else r
        from math import comb
        return (self.rank_value == r
                and len(self.bases) == comb(self.n, r))

    def __eq__(self, other):
        return (isinstance(other, Matroid) and self.n == other.n
                and self.bases == other.bases)

    def __repr__(self):
        return "Matroid(n=%d, rank=%d, %d bases)" % (
            self.n, self.rank_value, len(self.bases))


class BasisCapExceeded(Exception):
    """Raised when basis enumeration of a span matroid passes the cap."""


def _submatrix_rank(rows, cols, F):
    M = [[r[c] for c in cols] for r in rows]
    m = len(M)
    n = len(cols)
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        for i in range(r + 1, m):
            if M[i][c]:
                f = F.mul(M[i][c], inv)
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[r])]
        r += 1
    return r


def coefficient_matrix(polys):
    """Monomial support (sorted) and coefficient rows of the polynomials."""
    if not polys:
        raise ValueError("no polynomials")
    F = polys[0].ring.field
    monos = sorted({e for p in polys for e in p.terms})
    index = {e: i for i, e in enumerate(monos)}
    rows = []
    for p in polys:
        row = [F(0)] * len(monos)
        for e, c in p.terms.items():
            row[index[e]] = c
        rows.append(row)
    return monos, rows, F


def span_matroid(polys, cap=10 ** 5):
    """Matroid of the coefficient span of a list of polynomials.

    The ground set is the list of monomials occurring in the polynomials
    (returned alongside, ground element k is monomial k-1); a subset is
    independent when the corresponding coordinate projection of the span
    is injective.  Bases are enumerated by exchange walks from a greedy
    starting basis; BasisCapExceeded is raised past the cap.
    """
    monos, rows, F = coefficient_matrix(polys)
    rank = _submatrix_rank(rows, range(len(monos)), F)
    greedy = []
    for c in range(len(monos)):
        if _submatrix_rank(rows, greedy + [c], F) == len(greedy) + 1:
            greedy.append(c)
        if len(greedy) == rank:
            break
    start = frozenset(greedy)
    seen = {start}
    queue = [start]
    while queue:
        B = queue.pop()
        for e in B:
            rest = [c for c in B if c != e]
            for f in range(len(monos)):
                if f in B:
                    continue
                cand = frozenset(rest + [f])
                if cand in seen:
                    continue
                if _submatrix_rank(rows, sorted(cand), F) == rank:
                    if len(seen) >= cap:
                        raise BasisCapExceeded(
                            "span matroid has more than %d bases" % cap)
                    seen.add(cand)
                    queue.append(cand)
    bases = [frozenset(c + 1 for c in b) for b in seen]
    return monos, Matroid(len(monos), bases, validate=False)


def column_matroid(L):
    """Matroid on the columns of a matrix of linear forms, with bases the
    column m-subsets whose maximal minor is nonzero."""
    from .matrices import maximal_minors
    bases = [cols for cols, minor in maximal_minors(L, with_indices=True)
             if not minor.is_zero()]
    if not bases:
        raise ValueError("all maximal minors vanish (rank below m)")
    return Matroid(L.n, bases)


def dual_matroid(M):
    return M.dual()


def stanley_reisner(matroid, ring, ground_vars=None):
    """Stanley-Reisner ideal of the matroid's independence complex: one
    squarefree generator per circuit.  ground_vars maps ground elements
    1..n to variable indices of the ring (defaults to 0..n-1)."""
    if ground_vars is None:
        ground_vars = list(range(matroid.n))
    gens = []
    for circuit in matroid.circuits():
        e = [0] * ring.nvars
        for g in circuit:
            e[ground_vars[g - 1]] = 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, gens)
