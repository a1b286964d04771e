from __future__ import annotations
"""Hom-semilattices, the special morphisms ↑ and ↓, and tightness."""

import logging
from typing import FrozenSet, Hashable, List, Tuple

import numpy as np

from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import Poset
from depjsl.jsl.morphism import JslMorphism, morphism_violation
from depjsl.jsl.semilattice import Jsl
from depjsl.utils.config import Config, guard

__all__ = [
    "enumerate_morphisms",
    "hom_semilattice",
    "pointwise_order",
    "special_up",
    "special_down",
    "is_tight",
    "tight_witnesses",
]

logger = logging.getLogger(__name__)


def enumerate_morphisms(q: Jsl, r: Jsl) -> List[JslMorphism]:
    """
    Every morphism ``q → r``.

    Morphisms are determined by their values on ``J(q)``: monotone
    assignments ``J(q) → r`` are extended by ``f(x) = ⋁{ g(j) : j ≤ x }`` and
    kept when the extension preserves binary joins.
    """
    ji = sorted(q.ji, key=lambda j: int(q.leq[:, j].sum()))
    k = len(ji)
    guard("morphism candidates", len(r) ** k if k else 1, max(Config.MAX_ENUMERATION, 1))
    below = q.leq[np.ix_(ji, range(len(q)))] if k else np.zeros((0, len(q)), dtype=bool)
    assign: List[int] = [0] * k
    out: List[JslMorphism] = []

    def extend(pos: int) -> None:
        if pos == k:
            images = np.array(
                [r.join_idx(assign[t] for t in range(k) if below[t, x]) for x in range(len(q))],
                dtype=np.int64,
            )
            if morphism_violation(q, r, images) is None:
                out.append(JslMorphism(q, r, tuple(images)))
            return
        j = ji[pos]
        for y in range(len(r)):
            ok = True
            for t in range(pos):
                i = ji[t]
                if q.leq[i, j] and not r.leq[assign[t], y]:
                    ok = False
                    break
            if ok:
                assign[pos] = y
                extend(pos + 1)

    extend(0)
    logger.debug("enumerated %d morphisms between semilattices of sizes %d and %d", len(out), len(q), len(r))
    return out


def pointwise_order(maps: List[JslMorphism], r: Jsl) -> np.ndarray:
    """``out[a, b]`` iff ``maps[a] ≤ maps[b]`` pointwise in *r*."""
    if not maps:
        return np.zeros((0, 0), dtype=bool)
    h = np.array([f.images for f in maps], dtype=np.int64)
    if h.shape[1] == 0:
        return np.ones((len(maps), len(maps)), dtype=bool)
    return r.leq[h[:, None, :], h[None, :, :]].all(axis=2)


def hom_semilattice(q: Jsl, r: Jsl) -> Jsl:
    """``JSL_f[q, r]``: all morphisms under the pointwise order; elements are ``JslMorphism`` values."""
    maps = enumerate_morphisms(q, r)
    return Jsl(Poset(FinSet(tuple(maps)), pointwise_order(maps, r)))


def special_up(q: Jsl, r: Jsl, q0: Hashable, r0: Hashable) -> JslMorphism:
    """``↑^{q0,r0}(x) = ⊥`` if ``x ≤ q0`` else ``r0``."""
    i0, k0 = q.index(q0), r.index(r0)
    return JslMorphism(q, r, tuple(r.bot if q.leq[x, i0] else k0 for x in range(len(q))))


def special_down(q: Jsl, r: Jsl, q0: Hashable, r0: Hashable) -> JslMorphism:
    """``↓^{q0,r0}(x) = ⊥`` if ``x = ⊥``, ``r0`` if ``⊥ < x ≤ q0``, else ``⊤``."""
    i0, k0 = q.index(q0), r.index(r0)

    def value(x: int) -> int:
        if x == q.bot:
            return r.bot
        return k0 if q.leq[x, i0] else r.top_idx

    return JslMorphism(q, r, tuple(value(x) for x in range(len(q))))


def tight_witnesses(f: JslMorphism) -> np.ndarray:
    """``W[m, j]`` over ``M(dom) × J(cod)`` iff ``↑^{m,j} ≤ f``."""
    q, r = f.dom, f.cod
    mi, ji = list(q.mi), list(r.ji)
    if not mi or not ji:
        return np.zeros((len(mi), len(ji)), dtype=bool)
    above = ~q.leq[:, mi]                   # x ≰ m
    reach = r.leq[np.ix_(ji, f.array)]      # j ≤ f(x)
    miss = above.T.astype(np.int64) @ (~reach).T.astype(np.int64)
    return miss == 0


def is_tight(f: JslMorphism) -> Tuple[bool, FrozenSet[Tuple[Hashable, Hashable]]]:
    """
    Decide whether *f* is a join of morphisms ``↑^{m,j}``.

    Returns:
        ``(tight, W)`` where ``W`` holds every ``(m, j)`` with ``↑^{m,j} ≤ f``;
        *f* is tight iff it equals the join of those.
    """
    q, r = f.dom, f.cod
    mi, ji = list(q.mi), list(r.ji)
    w = tight_witnesses(f)
    pairs = frozenset((q[mi[a]], r[ji[b]]) for a, b in zip(*np.nonzero(w)))
    if w.size:
        hits = (~q.leq[:, mi]).astype(np.int64) @ w.astype(np.int64) > 0
        rebuilt = tuple(r.join_idx(ji[b] for b in np.flatnonzero(hits[x])) for x in range(len(q)))
    else:
        rebuilt = (r.bot,) * len(q)
    return rebuilt == f.images, pairs
