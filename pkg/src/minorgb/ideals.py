"""Monomial-ideal combinatorics: radicality, Borel-fixedness, minimal
primes, Alexander duality, polarization, and the predicted generic
initial ideals of the column- and row-graded constructions.

Borel-fixedness is the characteristic-zero (strongly stable) exchange
test per grading block, applied to minimal generators; all instances in
this artifact are squarefree, where the notions agree in large odd
characteristic.
"""

from itertools import combinations, product

from .ring import Ring, mono_deg, mono_divides, mono_lcm


class MonomialIdeal:
    """Minimal monomial generators (exponent tuples) in a ring."""

    __slots__ = ("ring", "gens", "_hash")

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = tuple(sorted(minimalize(gens)))
        self._hash = None

    def contains(self, exps):
        return any(mono_divides(g, exps) for g in self.gens)

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return any(not any(g) for g in self.gens)

    def supports(self):
        return [frozenset(v for v, e in enumerate(g) if e) for g in self.gens]

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.ring == other.ring
                and self.gens == other.gens)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.gens))
        return self._hash

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def gens_str(self):
        return sorted(self.ring.mono_str(g) for g in self.gens)

    def __repr__(self):
        return "MonomialIdeal(%s)" % ", ".join(self.gens_str())


def minimalize(gens):
    """Drop generators divisible by another generator; dedupe."""
    gens = sorted(set(tuple(g) for g in gens), key=mono_deg)
    out = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return out


# -- radical ---------------------------------------------------------------

def is_radical(M):
    return all(all(e <= 1 for e in g) for g in M.gens)


def radical(M):
    return MonomialIdeal(
        M.ring, [tuple(1 if e else 0 for e in g) for g in M.gens])


# -- Borel fixedness --------------------------------------------------------

def _shift_earlier(ring, g, v):
    """Exponent of x_{prev(v)} * g / x_v, or None if v is first in block."""
    pos = ring.position_in_block[v]
    if pos == 0:
        return None
    prev = ring.blocks[ring.block_of[v]][pos - 1]
    out = list(g)
    out[v] -= 1
    out[prev] += 1
    return tuple(out)


def is_borel_fixed(M):
    """Strongly-stable test per block on minimal generators: moving any
    variable of a generator one step earlier in its block stays in M."""
    for g in M.gens:
        for v, e in enumerate(g):
            if not e:
                continue
            moved = _shift_earlier(M.ring, g, v)
            if moved is not None and not M.contains(moved):
                return False
    return True


def borel_closure(M):
    """Smallest strongly stable monomial ideal containing M."""
    gens = set(M.gens)
    changed = True
    while changed:
        changed = False
        current = MonomialIdeal(M.ring, gens)
        for g in current.gens:
            for v, e in enumerate(g):
                if not e:
                    continue
                moved = _shift_earlier(M.ring, g, v)
                if moved is not None and not current.contains(moved):
                    gens.add(moved)
                    changed = True
        gens = set(MonomialIdeal(M.ring, gens).gens)
    return MonomialIdeal(M.ring, gens)


# -- minimal primes ----------------------------------------------------------

def minimal_primes(M):
    """Minimal primes as frozensets of variable indices, sorted."""
    if M.is_unit():
        raise ValueError("unit ideal has no minimal primes")
    memo = {}

    def primes(supports):
        supports = [s for s in supports if s]
        if not supports:
            return frozenset([frozenset()])
        key = frozenset(supports)
        if key in memo:
            return memo[key]
        pivot = min(supports, key=len)
        out = set()
        for v in sorted(pivot):
            rest = [s for s in supports if v not in s]
            for p in primes(rest):
                out.add(p | {v})
        # keep inclusion-minimal only
        result = frozenset(p for p in out
                           if not any(q < p for q in out))
        memo[key] = result
        return result

    found = primes(M.supports())
    return sorted(found, key=lambda p: (len(p), sorted(p)))


def prime_as_b_vector(ring, prime):
    """If the variable prime is of the form P_b (first b_i variables of
    each block), return b; else None."""
    b = []
    for blk in ring.blocks:
        count = sum(1 for v in blk if v in prime)
        if set(blk[:count]) != set(blk) & set(prime):
            return None
        b.append(count)
    return tuple(b)


def variable_prime(ring, b):
    """P_b: the ideal of the first b_i variables of each block."""
    gens = []
    for i, blk in enumerate(ring.blocks):
        if b[i] > len(blk):
            raise ValueError("b exceeds block size")
        for v in blk[:b[i]]:
            e = [0] * ring.nvars
            e[v] = 1
            gens.append(tuple(e))
    return MonomialIdeal(ring, gens)


INFINITE_LENGTH = "infinite"


def localized_length(M, prime):
    """length((S/M) localized at the variable prime) if the prime is
    minimal over M; INFINITE_LENGTH otherwise.

    Localizing sets every variable outside the prime to 1; the length is
    the count of standard monomials of the resulting ideal in the prime's
    variables.
    """
    pvars = sorted(prime)
    local = []
    for g in M.gens:
        local.append(tuple(g[v] for v in pvars))
    local = minimalize(local)
    # minimality of the prime <=> the localized ideal contains a pure
    # power of every prime variable
    bounds = []
    for k in range(len(pvars)):
        pure = [g[k] for g in local
                if all(e == 0 for i, e in enumerate(g) if i != k) and g[k]]
        if not pure:
            return INFINITE_LENGTH
        bounds.append(min(pure))
    count = 0
    for exps in product(*(range(b) for b in bounds)):
        if not any(all(ge <= xe for ge, xe in zip(g, exps)) for g in local):
            count += 1
    return count


# -- Alexander duality and polarization --------------------------------------

def alexander_dual(M):
    """Squarefree ideal of minimal transversals of the generator supports."""
    if not is_radical(M):
        raise ValueError("Alexander dual requires a squarefree ideal")
    covers = [frozenset()]
    for support in M.supports():
        new = set()
        for c in covers:
            if c & support:
                new.add(c)
            else:
                for v in support:
                    new.add(c | {v})
        covers = [c for c in new if not any(d < c for d in new)]
    gens = []
    for c in covers:
        e = [0] * M.ring.nvars
        for v in c:
            e[v] = 1
        gens.append(tuple(e))
    return MonomialIdeal(M.ring, gens)


def polarize(M):
    """Standard polarization into a fresh ring with one variable per
    (variable, slot) pair; returns (ideal, new ring)."""
    ring = M.ring
    max_exp = [0] * ring.nvars
    for g in M.gens:
        for v, e in enumerate(g):
            max_exp[v] = max(max_exp[v], e)
    names = []
    blocks = [[] for _ in range(ring.nblocks)]
    slot_index = {}
    for v in range(ring.nvars):
        for t in range(max_exp[v]):
            name = "%s__%d" % (ring.names[v], t + 1)
            slot_index[(v, t)] = len(names)
            blocks[ring.block_of[v]].append(name)
            names.append(name)
    target = Ring(names, field=ring.field,
                  blocks=[b for b in blocks if b] or None)
    gens = []
    for g in M.gens:
        e = [0] * target.nvars
        for v, exp in enumerate(g):
            for t in range(exp):
                e[slot_index[(v, t)]] = 1
        gens.append(tuple(e))
    return MonomialIdeal(target, gens), target


def dual_of_polarized_prime_ideal(M):
    """Reconstruction of a radical Borel-fixed ideal from its minimal
    primes: polarize (prod_i x_i^{b_i} : b minimal-prime vector) inside the
    original ring and take the Alexander dual.  Returns the reconstructed
    ideal for comparison with M."""
    ring = M.ring
    gens = []
    for prime in minimal_primes(M):
        b = prime_as_b_vector(ring, prime)
        if b is None:
            raise ValueError("minimal prime is not of P_b form")
        e = [0] * ring.nvars
        for i, blk in enumerate(ring.blocks):
            for v in blk[:b[i]]:
                e[v] = 1
        gens.append(tuple(e))
    return alexander_dual(MonomialIdeal(ring, gens))


# -- predicted generic initial ideals ----------------------------------------

def predicted_gin_column(L):
    """Squarefree ideal on the first-row variables x_{1j}, one generator
    x_{1,j_1}...x_{1,j_m} per nonvanishing maximal minor [j_1..j_m]."""
    from .matrices import maximal_minors
    if L.grading != "column":
        raise ValueError("predicted_gin_column needs a column-graded matrix")
    ring = L.ring
    gens = []
    for cols, minor in maximal_minors(L, with_indices=True):
        if minor.is_zero():
            continue
        e = [0] * ring.nvars
        for j in cols:
            e[ring.index["x_1_%d" % j]] = 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, gens)


def predicted_gin_row(m, n, ring=None):
    """The ideal (x_{1,j_1} x_{2,j_2} ... x_{m,j_m} : sum j_i <= n) inside
    the row-graded m-by-n variable grid."""
    if m > n:
        raise ValueError("need m <= n")
    if ring is None:
        from .ring import grid_ring
        ring = grid_ring(m, n, grading="row")
    gens = []
    for js in product(range(1, n + 1), repeat=m):
        if sum(js) > n:
            continue
        e = [0] * ring.nvars
        for i, j in enumerate(js, start=1):
            e[ring.index["x_%d_%d" % (i, j)]] += 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, gens)


# -- corpus of radical Borel-fixed ideals ------------------------------------

def radical_borel_fixed_ideals(block_sizes, field=None):
    """All nonzero radical Borel-fixed ideals in the ring with the given
    block sizes.

    Minimal generators of a radical Borel-fixed ideal use at most one
    variable per block with exponent one, so candidates are products of
    one variable from some subset of blocks; ideals are antichains of
    candidates passing the strongly stable test.
    """
    names = []
    blocks = []
    for i, ni in enumerate(block_sizes, start=1):
        blk = ["x_%d_%d" % (i, j) for j in range(1, ni + 1)]
        names.extend(blk)
        blocks.append(blk)
    ring = Ring(names, field=field, blocks=blocks)

    candidates = []
    nblocks = len(block_sizes)
    for blkset in range(1, 1 << nblocks):
        chosen_blocks = [i for i in range(nblocks) if blkset >> i & 1]
        for picks in product(*(range(block_sizes[i]) for i in chosen_blocks)):
            e = [0] * ring.nvars
            for i, j in zip(chosen_blocks, picks):
                e[ring.blocks[i][j]] = 1
            candidates.append(tuple(e))
    candidates.sort()

    out = []
    n = len(candidates)
    for mask in range(1, 1 << n):
        gens = [candidates[k] for k in range(n) if mask >> k & 1]
        antichain = True
        for a, b in combinations(gens, 2):
            if mono_divides(a, b) or mono_divides(b, a):
                antichain = False
                break
        if not antichain:
            continue
        M = MonomialIdeal(ring, gens)
        if is_borel_fixed(M):
            out.append(M)
    return ring, out


# -- dimension ---------------------------------------------------------------

def krull_codimension(M):
    """height of M = min cardinality of a minimal prime."""
    if M.is_unit():
        raise ValueError("unit ideal")
    if M.is_zero():
        return 0
    return min(len(p) for p in minimal_primes(M))


def lcm_lattice(gens):
    """All lcms of nonempty subsets of the generators."""
    gens = list(gens)
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                l = mono_lcm(a, g)
                if l not in lattice:
                    new.add(l)
        lattice |= new
        frontier = new
    return sorted(lattice)
