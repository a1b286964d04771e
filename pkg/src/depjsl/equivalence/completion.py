from __future__ import annotations
"""Dedekind-MacNeille completion as ``Open(≰_P)``."""

from itertools import combinations
from typing import Optional, Tuple

import numpy as np

from depjsl.finrel.finset import bits
from depjsl.finrel.poset import MonotoneMap, Poset
from depjsl.finrel.relation import Rel
from depjsl.equivalence.functors import open_index, open_obj
from depjsl.jsl.semilattice import Jsl
from depjsl.utils.config import Config, guard

__all__ = ["dm_completion", "poset_join", "poset_meet", "dm_preserves_bounds"]


def dm_completion(p: Poset) -> Tuple[Jsl, MonotoneMap]:
    """
    The completion ``Open(≰_P)`` and the embedding ``e_P(x) = ≰_P[x]``.

    ``e_P`` is an order-embedding and keeps every join and meet that
    already exists in ``P``.
    """
    nleq = Rel(p.carrier, p.carrier, ~p.leq)
    dm = open_obj(nleq)
    idx = open_index(nleq)
    return dm, MonotoneMap(p, dm.order, tuple(idx[row] for row in nleq.rows))


def poset_join(p: Poset, mask: int) -> Optional[int]:
    """Least upper bound of a subset of ``P``, if it exists."""
    ub = np.ones(len(p), dtype=bool)
    for i in bits(mask):
        ub &= p.leq[i]
    cands = np.flatnonzero(ub)
    for c in cands:
        if p.leq[c, cands].all():
            return int(c)
    return None


def poset_meet(p: Poset, mask: int) -> Optional[int]:
    lb = np.ones(len(p), dtype=bool)
    for i in bits(mask):
        lb &= p.leq[:, i]
    cands = np.flatnonzero(lb)
    for c in cands:
        if p.leq[cands, c].all():
            return int(c)
    return None


def dm_preserves_bounds(p: Poset) -> bool:
    """Every existing join and meet of a subset of ``P`` is kept by ``e_P``."""
    guard("poset subsets", len(p), Config.MAX_SUBSET_BITS)
    dm, e = dm_completion(p)
    for k in range(len(p) + 1):
        for combo in combinations(range(len(p)), k):
            mask = sum(1 << i for i in combo)
            images = [e.images[i] for i in combo]
            j = poset_join(p, mask)
            if j is not None and e.images[j] != dm.join_idx(images):
                return False
            m = poset_meet(p, mask)
            if m is not None and e.images[m] != dm.meet_idx(images):
                return False
    return True
