from __future__ import annotations
"""
Brute-force oracles.

Each function recomputes a quantity straight from its definition, by
exhaustive search on tiny instances, so the suites can compare it against
the structural algorithm.
"""

import logging
from itertools import permutations, product
from typing import Dict, Hashable, List, Tuple

import numpy as np

from depjsl.demorgan.algebra import UnaryAlgebra, algebra_morphisms
from depjsl.demorgan.fixtures import GENERATOR, free_one_generated
from depjsl.demorgan.functors import Side
from depjsl.finrel.relation import Rel, bool_product
from depjsl.jsl.homsets import enumerate_morphisms
from depjsl.jsl.semilattice import Jsl
from depjsl.tensor.bi_ideal import BiIdeal, enumerate_bi_ideals
from depjsl.utils.config import Config, guard

__all__ = [
    "bi_ideal_closure_oracle",
    "ug_factor_oracle",
    "algebra_iso_oracle",
    "bilinear_maps",
    "free_hom_count",
]

logger = logging.getLogger(__name__)


def bi_ideal_closure_oracle(s0: np.ndarray, q: Jsl, r: Jsl) -> BiIdeal:
    """Intersection of every bi-ideal containing *s0*."""
    m = np.ones((len(q), len(r)), dtype=bool)
    for ideal in enumerate_bi_ideals(q, r):
        if not (s0 & ~ideal.matrix).any():
            m &= ideal.matrix
    return BiIdeal(q, r, m)


def ug_factor_oracle(g: Rel, e: Rel, side: Side | str) -> bool:
    """
    Whether some relation ``h`` has ``e = h ⨟ Ğ`` (side j) or ``e = h ⨟ G`` (side m).

    Every candidate ``h`` is tried.
    """
    side = Side(side)
    base = g.matrix.T if side is Side.J else g.matrix
    rows, cols = e.matrix.shape[0], base.shape[0]
    guard("factor candidates", rows * cols, Config.MAX_SUBSET_BITS)
    for bits in range(1 << (rows * cols)):
        h = np.array([(bits >> k) & 1 for k in range(rows * cols)], dtype=bool).reshape(rows, cols)
        if np.array_equal(bool_product(h, base), e.matrix):
            return True
    return False


def algebra_iso_oracle(a: UnaryAlgebra, b: UnaryAlgebra) -> bool:
    """Whether some permutation is an order isomorphism commuting with σ."""
    n = len(a)
    if n != len(b):
        return False
    guard("permutations", n, 8)
    sa, sb = np.array(a.sigma), np.array(b.sigma)
    for perm in permutations(range(n)):
        p = np.array(perm, dtype=np.int64)
        if np.array_equal(a.base.leq, b.base.leq[np.ix_(p, p)]) and np.array_equal(p[sa], sb[p]):
            return True
    return False


def bilinear_maps(q: Jsl, r: Jsl, s: Jsl) -> List[Dict[Tuple[Hashable, Hashable], Hashable]]:
    """
    Every bilinear ``Q × R → S``.

    A bilinear map picks a morphism ``R → S`` for each ``a ∈ Q``; the
    choices are kept when they are also linear in ``a``.
    """
    rows = enumerate_morphisms(r, s)
    guard("bilinear candidates", len(rows) ** len(q), Config.MAX_ENUMERATION)
    out = []
    for choice in product(rows, repeat=len(q)):
        t = np.array([f.images for f in choice], dtype=np.int64).reshape(len(q), len(r))
        if (t[q.bot] != s.bot).any():
            continue
        joined = t[q.join_table]                                   # [a1, a2, b]
        pointwise = s.join_table[t[:, None, :], t[None, :, :]]
        if not np.array_equal(joined, pointwise):
            continue
        out.append({(q[a], r[b]): s[int(t[a, b])] for a in range(len(q)) for b in range(len(r))})
    logger.debug("%d bilinear maps into a semilattice of size %d", len(out), len(s))
    return out


def free_hom_count(kind, target: UnaryAlgebra, value: Hashable) -> int:
    """Number of homomorphisms from the free one-generated algebra to *target* sending the generator to *value*."""
    free = free_one_generated(kind)
    x = free.base.index(GENERATOR)
    v = target.base.index(value)
    return sum(1 for f in algebra_morphisms(free, target) if f.images[x] == v)

