"""Graded matrices of linear forms, exact maximal minors, the scalar
specialization x_ij -> a_ij y_j, and codimension of minor ideals.

Random coefficients come from a splittable construction keyed by
(seed, i, j, k) through SHA-256, so generic matrices rebuild
bit-identically on any platform.
"""

import hashlib
from itertools import combinations

from .fields import Field
from .ideals import MonomialIdeal, krull_codimension
from .ring import Ring, grid_ring


def keyed_scalar(field, seed, *key, nonzero=True):
    """Deterministic field element keyed by (seed, *key)."""
    p = field.p if field.p else 2 ** 31 - 1
    label = "%s:%s" % (seed, ":".join(str(k) for k in key))
    counter = 0
    while True:
        h = hashlib.sha256(("%s#%d" % (label, counter)).encode()).digest()
        val = int.from_bytes(h[:8], "big") % p
        if val or not nonzero:
            return field(val)
        counter += 1


class LinearMatrix:
    """m x n matrix of degree-1 forms with a grading mode."""

    __slots__ = ("m", "n", "grading", "ring", "entries")

    def __init__(self, m, n, grading, ring, entries):
        self.m = m
        self.n = n
        self.grading = grading
        self.ring = ring
        self.entries = tuple(tuple(row) for row in entries)
        if len(self.entries) != m or any(len(r) != n for r in self.entries):
            raise ValueError("entry array shape mismatch")
        for i, row in enumerate(self.entries):
            for j, p in enumerate(row):
                self._check_entry(i + 1, j + 1, p)

    def _check_entry(self, i, j, p):
        if p.is_zero():
            return
        for e in p.terms:
            if sum(e) != 1:
                raise ValueError("entry (%d,%d) is not a linear form" % (i, j))
            v = e.index(1)
            name = self.ring.names[v]
            if self.grading == "column":
                if not name.endswith("_%d" % j):
                    raise ValueError(
                        "entry (%d,%d) uses %s, not a column-%d variable"
                        % (i, j, name, j))
            elif self.grading == "row":
                if not name.startswith("x_%d_" % i):
                    raise ValueError(
                        "entry (%d,%d) uses %s, not a row-%d variable"
                        % (i, j, name, i))

    def row_swapped(self, a, b):
        rows = list(self.entries)
        rows[a], rows[b] = rows[b], rows[a]
        return LinearMatrix(self.m, self.n, self.grading, self.ring, rows)

    def column_is_zero(self, j):
        return all(self.entries[i][j - 1].is_zero() for i in range(self.m))

    def __repr__(self):
        return "LinearMatrix(%dx%d, %s-graded)" % (self.m, self.n,
                                                   self.grading)


def build_matrix(m, n, mode, entries=None, seed=None, field=None, ring=None,
                 variables=None):
    """Construct a LinearMatrix.

    mode: 'variables' (entries x_ij), 'column-graded' or 'row-graded'
    (random combinations keyed by seed, or explicit entry strings), or
    'explicit' (entry strings in a ring with the given variables and no
    block grading).
    """
    field = field if field is not None else Field()
    if mode == "variables":
        ring = ring or grid_ring(m, n, field=field, grading="none")
        ents = [[ring.var("x_%d_%d" % (i, j)) for j in range(1, n + 1)]
                for i in range(1, m + 1)]
        return LinearMatrix(m, n, "none", ring, ents)

    if mode in ("column-graded", "row-graded"):
        grading = "column" if mode == "column-graded" else "row"
        ring = ring or grid_ring(m, n, field=field, grading=grading)
        if entries is not None:
            ents = [[ring.parse(s) for s in row] for row in entries]
            return LinearMatrix(m, n, grading, ring, ents)
        if seed is None:
            raise ValueError("random construction needs a seed")
        ents = []
        # a random entry mixes all the variables of its grading block:
        # column j holds x_{1j}..x_{mj}; row i holds x_{i1}..x_{in}
        kmax = m if grading == "column" else n
        for i in range(1, m + 1):
            row = []
            for j in range(1, n + 1):
                p = ring.zero()
                for k in range(1, kmax + 1):
                    lam = keyed_scalar(field, seed, i, j, k)
                    var = ("x_%d_%d" % (k, j) if grading == "column"
                           else "x_%d_%d" % (i, k))
                    p = p + ring.var(var).scale(lam)
                row.append(p)
            ents.append(row)
        return LinearMatrix(m, n, grading, ring, ents)

    if mode == "explicit":
        if entries is None:
            raise ValueError("explicit mode needs entries")
        if ring is None:
            if variables is None:
                raise ValueError("explicit mode needs a ring or variables")
            ring = Ring(variables, field=field)
        ents = [[ring.parse(s) for s in row] for row in entries]
        return LinearMatrix(m, n, "none", ring, ents)

    raise ValueError("unknown mode %r" % (mode,))


def _minor_of_columns(L, cols):
    """Determinant of the submatrix on the 1-based column tuple, by
    cofactor expansion extended one column at a time."""
    ring = L.ring
    # minors[rows] = det of submatrix (rows, first t columns of cols)
    minors = {(): ring.one()}
    for t, j in enumerate(cols, start=1):
        new = {}
        for rows in combinations(range(L.m), t):
            acc = ring.zero()
            for pos, r in enumerate(rows):
                sub = tuple(x for x in rows if x != r)
                cof = minors[sub].times_monomial(
                    (0,) * ring.nvars,
                    ring.field((-1) ** (pos + t - 1)))
                acc = acc + cof * L.entries[r][j - 1]
            new[rows] = acc
        minors = new
    return minors[tuple(range(L.m))]


def maximal_minors(L, with_indices=False):
    """The C(n,m) maximal minors indexed by increasing column tuples, in
    lexicographic tuple order; vanishing minors are kept (as zero)."""
    if L.m > L.n:
        raise ValueError("need m <= n")
    out = []
    for cols in combinations(range(1, L.n + 1), L.m):
        minor = _minor_of_columns(L, cols)
        out.append((cols, minor) if with_indices else minor)
    return out


class SpecializationMatrix:
    """m x n scalar matrix with all entries and all maximal minors
    nonzero."""

    __slots__ = ("m", "n", "field", "entries")

    def __init__(self, field, entries):
        self.field = field
        self.entries = tuple(tuple(field(a) for a in row) for row in entries)
        self.m = len(self.entries)
        self.n = len(self.entries[0])
        if any(not a for row in self.entries for a in row):
            raise ValueError("specialization entries must be nonzero")
        for cols in combinations(range(self.n), self.m):
            if not self.scalar_minor(cols):
                raise ValueError("vanishing maximal minor at columns %s"
                                 % (cols,))

    def scalar_minor(self, cols):
        """Exact determinant of the column submatrix (0-based cols)."""
        F = self.field
        mat = [[self.entries[i][j] for j in cols] for i in range(self.m)]
        det = F.one()
        size = self.m
        for k in range(size):
            pivot = None
            for r in range(k, size):
                if mat[r][k]:
                    pivot = r
                    break
            if pivot is None:
                return F.zero()
            if pivot != k:
                mat[k], mat[pivot] = mat[pivot], mat[k]
                det = F.neg(det)
            det = F.mul(det, mat[k][k])
            inv = F.inv(mat[k][k])
            for r in range(k + 1, size):
                factor = F.mul(mat[r][k], inv)
                mat[r] = [F.sub(a, F.mul(factor, b))
                          for a, b in zip(mat[r], mat[k])]
        return det


def random_specialization(field, m, n, seed, attempts=5):
    """Seeded random SpecializationMatrix; retries draw fresh entries."""
    for attempt in range(attempts):
        entries = [[keyed_scalar(field, seed, "A", attempt, i, j)
                    for j in range(n)] for i in range(m)]
        try:
            return SpecializationMatrix(field, entries)
        except ValueError:
            continue
    raise RuntimeError("no generic specialization found in %d attempts"
                       % attempts)


def y_ring(n, field):
    """K[y_1..y_n] with deg y_j = e_j."""
    names = ["y_%d" % j for j in range(1, n + 1)]
    return Ring(names, field=field, blocks=[[nm] for nm in names])


def specialize_phi(polys, A, target=None):
    """Apply the ring map x_ij -> a_ij y_j to polynomials on the m x n
    variable grid; returns (images, target ring)."""
    if not polys:
        raise ValueError("no polynomials")
    ring = polys[0].ring
    field = ring.field
    target = target or y_ring(A.n, field)
    var_image = {}
    for v, name in enumerate(ring.names):
        _, i, j = name.split("_")
        i, j = int(i), int(j)
        if i > A.m or j > A.n:
            raise ValueError("matrix shape does not match the ring")
        var_image[v] = (A.entries[i - 1][j - 1], j - 1)
    images = []
    for p in polys:
        q = target.zero()
        for e, c in p.terms.items():
            coeff = c
            out = [0] * target.nvars
            for v, exp in enumerate(e):
                if not exp:
                    continue
                a, j = var_image[v]
                coeff = field.mul(coeff, pow(a, exp, field.p) if field.p
                                  else a ** exp)
                out[j] += exp
            q = q + target.monomial(tuple(out), coeff)
        images.append(q)
    return images, target


def codimension(gens, order):
    """Codimension (height) of the ideal generated by gens, computed on
    the initial monomial ideal."""
    from .groebner import initial_ideal
    from .ideals import radical
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return 0
    lead = initial_ideal(gens, order)
    if lead.is_unit():
        raise ValueError("unit ideal")
    return krull_codimension(radical(lead))


def monomial_ideal_of_squarefree_supports(ring, supports):
    gens = []
    for s in supports:
        e = [0] * ring.nvars
        for v in s:
            e[v] = 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, gens)
