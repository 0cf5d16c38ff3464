"""Multigraded Betti numbers of monomial ideals via upper Koszul
simplicial complexes, linear-resolution and projective-dimension
predicates, and the Eagon-Northcott rank oracle.

For a monomial ideal M and an exponent vector a, the complex K^a has a
face for each squarefree subset t of supp(a) with x^(a-t) in M, and
beta_{i,a}(M) is the reduced homology rank of K^a in dimension i-1.
Betti numbers are supported on the lcm lattice of the generators;
boundary-matrix ranks are exact Gaussian eliminations over the
coefficient field.
"""

from itertools import combinations
from math import comb

from .ideals import lcm_lattice
from .ring import mono_deg


class GeneratorCapExceeded(RuntimeError):
    pass


def field_rank(rows, field):
    """Rank of a matrix given as a list of coefficient lists."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = field.mul(rows[r][col], inv)
                rows[r] = [field.sub(a, field.mul(factor, b))
                           for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def reduced_homology_ranks(faces, field):
    """Reduced homology ranks of a simplicial complex over a field.

    faces: iterable of frozensets, all faces of the complex including the
    empty face; an input without the empty face is the void complex.
    Returns a dict dim -> rank, for dims >= -1.
    """
    by_dim = {}
    for f in faces:
        f = frozenset(f)
        by_dim.setdefault(len(f) - 1, []).append(f)
    if -1 not in by_dim:
        return {}
    for d in by_dim:
        by_dim[d] = sorted(set(by_dim[d]), key=sorted)
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in by_dim.items()}
    maxdim = max(by_dim)
    ranks = {}
    boundary_rank = {}
    one = field.one()
    for d in range(0, maxdim + 1):
        rows = []
        lower = index.get(d - 1, {})
        for f in by_dim.get(d, []):
            row = [field.zero()] * len(lower)
            verts = sorted(f)
            for i, v in enumerate(verts):
                sub = frozenset(f - {v})
                sign = one if i % 2 == 0 else field.neg(one)
                row[lower[sub]] = sign
            rows.append(row)
        boundary_rank[d] = field_rank(rows, field) if rows else 0
    boundary_rank[maxdim + 1] = 0
    for d in range(-1, maxdim + 1):
        dim_c = len(by_dim.get(d, []))
        ranks[d] = dim_c - boundary_rank.get(d, 0) - boundary_rank[d + 1]
    return ranks


def _koszul_complex_faces(M, a):
    support = [v for v, e in enumerate(a) if e]
    faces = []
    for r in range(len(support) + 1):
        for sub in combinations(support, r):
            shifted = list(a)
            for v in sub:
                shifted[v] -= 1
            if M.contains(tuple(shifted)):
                faces.append(frozenset(sub))
    return faces


class BettiTable:
    """Fine and coarse Betti numbers of S/M.

    fine: {(i, block multidegree): count}; by_exponent: {(i, exponent
    tuple): count} in the full variable grading; coarse: {(i, total
    degree): count}.  Index 0 is the free module S itself; index i+1
    collects the i-th Betti numbers of the ideal.
    """

    def __init__(self, fine, coarse, by_exponent=None):
        self.fine = dict(fine)
        self.coarse = dict(coarse)
        self.by_exponent = dict(by_exponent or {})

    def squarefree_support(self):
        """True when every nonzero entry sits in a squarefree variable
        multidegree."""
        return all(max(a) <= 1 for (i, a), c in self.by_exponent.items()
                   if i and c)

    def totals(self):
        """beta_i(S/M) as a tuple, up to the projective dimension."""
        if not self.coarse:
            return (1,)
        top = max(i for i, _ in self.coarse)
        out = [0] * (top + 1)
        for (i, _), c in self.coarse.items():
            out[i] += c
        return tuple(out)

    def ideal_coarse(self):
        """{(i, j): beta_{i,j} of the ideal M} (shift by one from S/M)."""
        return {(i - 1, j): c for (i, j), c in self.coarse.items() if i >= 1}

    def max_index(self):
        return max(i for i, _ in self.coarse)

    def serialize(self):
        coarse = sorted([i, j, c] for (i, j), c in self.coarse.items())
        fine = sorted([i, list(a), c] for (i, a), c in self.fine.items())
        return {"coarse": coarse, "fine": fine}

    def __eq__(self, other):
        return (isinstance(other, BettiTable) and self.fine == other.fine
                and self.coarse == other.coarse)


def betti_table(M, cap=20):
    """Multigraded Betti table of S/M by Koszul simplicial homology at the
    lcm-lattice degrees."""
    if len(M.gens) > cap:
        raise GeneratorCapExceeded(
            "%d generators exceed the cap %d" % (len(M.gens), cap))
    ring = M.ring
    field = ring.field
    zero_block = (0,) * ring.nblocks
    zero_exp = (0,) * ring.nvars
    fine = {(0, zero_block): 1}
    coarse = {(0, 0): 1}
    by_exp = {(0, zero_exp): 1}
    if M.is_zero():
        return BettiTable(fine, coarse, by_exp)
    for a in lcm_lattice(M.gens):
        faces = _koszul_complex_faces(M, a)
        ranks = reduced_homology_ranks(faces, field)
        for d, r in ranks.items():
            if r <= 0:
                continue
            i = d + 1  # beta_{i,a}(M) with i = dim + 1
            block = ring.mono_multidegree(a)
            key = (i + 1, block)
            fine[key] = fine.get(key, 0) + r
            ckey = (i + 1, mono_deg(a))
            coarse[ckey] = coarse.get(ckey, 0) + r
            ekey = (i + 1, a)
            by_exp[ekey] = by_exp.get(ekey, 0) + r
    return BettiTable(fine, coarse, by_exp)


def has_linear_resolution(M, cap=20):
    """All generators in one total degree d, and beta_{i,j}(M) = 0 unless
    j = d + i."""
    if M.is_zero():
        return False
    degs = {mono_deg(g) for g in M.gens}
    if len(degs) != 1:
        return False
    d = degs.pop()
    table = betti_table(M, cap=cap)
    return all(j == d + i for (i, j), c in table.ideal_coarse().items() if c)


def projective_dimension(M, cap=20):
    """pd of the ideal M: the largest i with beta_i(M) nonzero."""
    if M.is_zero():
        raise ValueError("zero ideal")
    table = betti_table(M, cap=cap)
    return max(i for (i, _), c in table.ideal_coarse().items() if c)


def eagon_northcott_ranks(m, n):
    """Expected beta_i(S/I_m) for a maximal-minor ideal of expected
    codimension: (1, C(n,m)C(m-1,0), C(n,m+1)C(m,1), ...)."""
    if m > n:
        raise ValueError("need m <= n")
    out = [1]
    for k in range(n - m + 1):
        out.append(comb(n, m + k) * comb(m + k - 1, k))
    return tuple(out)
