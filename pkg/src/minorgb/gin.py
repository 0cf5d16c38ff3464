"""Multigraded generic initial ideals by randomized grading-preserving
coordinate changes.

gin trials use dense random invertible blocks (one per grading block);
upper-triangular Borel elements are exposed separately for exchange-move
experiments.  Randomization is Monte Carlo over F_32003 by default: all
trials must agree, and disagreement is reported, never averaged away.
"""

import random

from .groebner import initial_ideal
from .ideals import is_borel_fixed


class BorelElement:
    """Per-block upper triangular invertible scalar matrices."""

    def __init__(self, ring, blocks):
        self.ring = ring
        self.blocks = [tuple(tuple(ring.field(a) for a in row)
                             for row in blk) for blk in blocks]
        for b, blk in enumerate(self.blocks):
            size = len(ring.blocks[b])
            if len(blk) != size or any(len(r) != size for r in blk):
                raise ValueError("block %d has wrong shape" % b)
            for r in range(size):
                if not blk[r][r]:
                    raise ValueError("zero diagonal entry in block %d" % b)
                if any(blk[r][c] for c in range(r)):
                    raise ValueError("block %d is not upper triangular" % b)


def _block_is_invertible(field, mat):
    mat = [list(r) for r in mat]
    size = len(mat)
    for k in range(size):
        pivot = next((r for r in range(k, size) if mat[r][k]), None)
        if pivot is None:
            return False
        mat[k], mat[pivot] = mat[pivot], mat[k]
        inv = field.inv(mat[k][k])
        for r in range(k + 1, size):
            if mat[r][k]:
                f = field.mul(mat[r][k], inv)
                mat[r] = [field.sub(a, field.mul(f, b))
                          for a, b in zip(mat[r], mat[k])]
    return True


def apply_group_element(element, polys):
    """Substitute x_{i,j} -> sum_k g^(i)_{k,j} x_{i,k} for the per-block
    matrices g; multidegrees are preserved."""
    if not polys:
        return []
    ring = polys[0].ring
    if isinstance(element, BorelElement):
        blocks = element.blocks
    else:
        blocks = [tuple(tuple(ring.field(a) for a in row) for row in blk)
                  for blk in element]
    field = ring.field
    for b, blk in enumerate(blocks):
        if not _block_is_invertible(field, blk):
            raise ValueError("singular block %d" % b)
    images = []
    for v in range(ring.nvars):
        b = ring.block_of[v]
        j = ring.position_in_block[v]
        img = ring.zero()
        for k, var in enumerate(ring.blocks[b]):
            coeff = blocks[b][k][j]
            if coeff:
                img = img + ring.var(var).scale(coeff)
        images.append(img)
    out = []
    for p in polys:
        q = ring.zero()
        for e, c in p.terms.items():
            piece = ring.constant(c)
            for v, exp in enumerate(e):
                for _ in range(exp):
                    piece = piece * images[v]
            q = q + piece
        out.append(q)
    return out


def exchange_move(ring, block, j, k):
    """The Borel element sending x_{block,j} to x_{block,j} + x_{block,k}
    (k earlier than j) and fixing every other variable."""
    if k >= j:
        raise ValueError("need k < j for an upper-triangular move")
    blocks = []
    for b, blk in enumerate(ring.blocks):
        size = len(blk)
        mat = [[ring.field(1 if r == c else 0) for c in range(size)]
               for r in range(size)]
        if b == block:
            mat[k][j] = ring.field(1)
        blocks.append(mat)
    return BorelElement(ring, blocks)


class GinResult:
    """Candidate gin with trial-agreement and Borel certificates."""

    __slots__ = ("candidate", "trials", "agreed", "borel_certified", "seed",
                 "all_candidates")

    def __init__(self, candidate, trials, agreed, borel_certified, seed,
                 all_candidates):
        self.candidate = candidate
        self.trials = trials
        self.agreed = agreed
        self.borel_certified = borel_certified
        self.seed = seed
        self.all_candidates = all_candidates


def order_is_admissible(ring, order):
    """Within every block, earlier variables must be larger; a generic
    linear form then leads with the block's first variable."""
    for blk in ring.blocks:
        for a, b in zip(blk, blk[1:]):
            ea = [0] * ring.nvars
            eb = [0] * ring.nvars
            ea[a] = 1
            eb[b] = 1
            if order.compare(tuple(ea), tuple(eb)) != "greater":
                return False
    return True


def random_group_element(ring, seed, trial):
    """Dense random invertible matrices, one per block; deterministic in
    (seed, trial)."""
    field = ring.field
    bound = field.p if field.p else 2 ** 31 - 1
    blocks = []
    for b, blk in enumerate(ring.blocks):
        size = len(blk)
        counter = 0
        while True:
            rng = random.Random("gin:%s:%s:%s:%s" % (seed, trial, b, counter))
            mat = [[field(rng.randrange(bound)) for _ in range(size)]
                   for _ in range(size)]
            if _block_is_invertible(field, mat):
                break
            counter += 1
        blocks.append(mat)
    return blocks


def multigraded_gin(gens, order, seed=0, trials=5):
    """Initial ideal after a random grading-preserving change of
    coordinates, repeated over independent trials."""
    if not gens:
        raise ValueError("no generators")
    ring = gens[0].ring
    if not order_is_admissible(ring, order):
        raise ValueError("order must make earlier block variables larger")
    for g in gens:
        g.multidegree()
    candidates = []
    for t in range(trials):
        element = random_group_element(ring, seed, t)
        moved = apply_group_element(element, gens)
        candidates.append(initial_ideal(moved, order))
    agreed = all(c == candidates[0] for c in candidates)
    candidate = candidates[0]
    return GinResult(candidate, trials, agreed,
                     agreed and is_borel_fixed(candidate), seed, candidates)
