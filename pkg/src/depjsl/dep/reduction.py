from __future__ import annotations
"""Bipartite isomorphisms and reduction of a relation to its reduced form."""

import logging
from collections import Counter
from typing import Dict, Hashable, List, Optional, Tuple

import numpy as np

from depjsl.errors import CarrierMismatchError, NotDepMorphismError
from depjsl.finrel.relation import Rel
from depjsl.dep.morphism import DepMorphism

__all__ = [
    "bipartite_iso",
    "find_bipartite_iso",
    "join_irreducible_opens",
    "meet_irreducible_opens",
    "dep_reduce",
    "dep_reduce_inverse",
]

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# bipartite isomorphisms
# ---------------------------------------------------------------------------

def bipartite_iso(
    g: Rel,
    h: Rel,
    src: Dict[Hashable, Hashable],
    tgt: Dict[Hashable, Hashable],
) -> DepMorphism:
    """
    The Dep-isomorphism ``g → h`` witnessed by bijections of sources and targets.

    Requires ``g(x, y) ⟺ h(src[x], tgt[y])``; the morphism is ``src ; h``.
    """
    if len(g.source) != len(h.source) or len(g.target) != len(h.target):
        raise CarrierMismatchError("carriers have different sizes")
    ps = np.array([h.source.index(src[x]) for x in g.source], dtype=np.int64)
    pt = np.array([h.target.index(tgt[y]) for y in g.target], dtype=np.int64)
    if len(set(ps.tolist())) != len(ps) or len(set(pt.tolist())) != len(pt):
        raise CarrierMismatchError("source or target map is not a bijection")
    moved = h.matrix[np.ix_(ps, pt)]
    if not np.array_equal(moved, g.matrix):
        i, j = (int(v) for v in np.argwhere(moved != g.matrix)[0])
        raise NotDepMorphismError(
            "bijections do not carry one relation onto the other",
            witness=(g.source[i], g.target[j]),
        )
    return DepMorphism(g, h, Rel(g.source, h.target, h.matrix[ps]))


def _column_profile(m: np.ndarray, rows: List[int]) -> Counter:
    return Counter(tuple(bool(v) for v in m[rows, j]) for j in range(m.shape[1]))


def find_bipartite_iso(g: Rel, h: Rel) -> Optional[Tuple[Dict[Hashable, Hashable], Dict[Hashable, Hashable]]]:
    """
    Bijections ``(src, tgt)`` carrying *g* onto *h*, or ``None``.

    Sources are matched by backtracking; a partial match survives only while
    the column patterns restricted to the matched rows agree as multisets.
    """
    if g.matrix.shape != h.matrix.shape:
        return None
    n = len(g.source)
    gdeg = g.matrix.sum(axis=1)
    hdeg = h.matrix.sum(axis=1)
    if sorted(gdeg.tolist()) != sorted(hdeg.tolist()):
        return None
    if sorted(g.matrix.sum(axis=0).tolist()) != sorted(h.matrix.sum(axis=0).tolist()):
        return None
    assign: List[int] = []
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        for y in range(n):
            if used[y] or gdeg[k] != hdeg[y]:
                continue
            assign.append(y)
            if _column_profile(g.matrix, list(range(k + 1))) == _column_profile(h.matrix, assign):
                used[y] = True
                if extend(k + 1):
                    return True
                used[y] = False
            assign.pop()
        return False

    if not extend(0):
        return None
    # match columns with equal patterns in the order they appear
    pool: Dict[Tuple[bool, ...], List[int]] = {}
    for j in range(len(h.target)):
        pool.setdefault(tuple(bool(v) for v in h.matrix[assign, j]), []).append(j)
    tgt = {}
    for j in range(len(g.target)):
        key = tuple(bool(v) for v in g.matrix[:, j])
        tgt[g.target[j]] = h.target[pool[key].pop(0)]
    src = {g.source[i]: h.source[assign[i]] for i in range(n)}
    return src, tgt


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------

def join_irreducible_opens(g: Rel) -> List[int]:
    """Open sets of *g* that are not a union of strictly smaller rows."""
    out = []
    for row in sorted(set(g.rows)):
        if row == 0:
            continue
        below = 0
        for other in g.rows:
            if other != row and other & ~row == 0:
                below |= other
        if below != row:
            out.append(row)
    return out


def meet_irreducible_opens(g: Rel) -> List[Tuple[int, int]]:
    """
    Meet-irreducible open sets, each with the least target generating it.

    Every such set is ``in_G(Gt \\ {y})`` for some ``y``; returns
    ``(open_mask, y)`` pairs for the smallest such ``y``.
    """
    full = g.target.full_mask
    cands: Dict[int, int] = {}
    for y in range(len(g.target)):
        c = g.interior_mask(full & ~(1 << y))
        cands.setdefault(c, y)
    top = g.interior_mask(full)
    out = []
    for c, y in cands.items():
        if c == top:
            continue
        above = full
        for d in cands:
            if d != c and c & ~d == 0:
                above &= d
        if g.interior_mask(above) != c:
            out.append((c, y))
    return sorted(out, key=lambda p: p[1])


def _reduced_support(g: Rel) -> Tuple[int, int]:
    src = 0
    for row in join_irreducible_opens(g):
        src |= 1 << g.rows.index(row)
    tgt = 0
    for _, y in meet_irreducible_opens(g):
        tgt |= 1 << y
    return src, tgt


def dep_reduce(g: Rel) -> Tuple[Rel, DepMorphism]:
    """
    A reduced restriction of *g* and the Dep-isomorphism onto it.

    Sources are the least elements whose row is a join-irreducible open
    set; targets the least elements generating a meet-irreducible one.
    """
    src, tgt = _reduced_support(g)
    reduced = g.restrict(src, tgt)
    forward = DepMorphism(g, reduced, g.restrict(g.source.full_mask, tgt))
    logger.debug("reduced %dx%d relation to %dx%d", len(g.source), len(g.target),
                 len(reduced.source), len(reduced.target))
    return reduced, forward


def dep_reduce_inverse(g: Rel) -> DepMorphism:
    """The inverse of :func:`dep_reduce`'s isomorphism: ``g`` restricted to the kept sources."""
    src, tgt = _reduced_support(g)
    reduced = g.restrict(src, tgt)
    return DepMorphism(reduced, g, g.restrict(src, g.target.full_mask))
