from __future__ import annotations
"""
Natural isomorphisms of the equivalence: rep, red, ℰ and ∂, with
naturality checks driven by the sampling settings in ``Config``.
"""

import logging
from typing import List, Optional, Sequence, TypeVar

import numpy as np

from depjsl.finrel.relation import Rel
from depjsl.dep.morphism import DepMorphism, dep_compose, dep_dual, dep_hom
from depjsl.equivalence.functors import (
    Iso,
    nleq_mor,
    nleq_obj,
    open_index,
    open_mor,
    open_obj,
    pirr_mor,
    pirr_obj,
)
from depjsl.jsl.homsets import enumerate_morphisms
from depjsl.jsl.morphism import JslMorphism, compose
from depjsl.jsl.semilattice import Jsl
from depjsl.utils.config import Config

__all__ = [
    "rep_iso",
    "red_iso",
    "e_iso",
    "e_iso_inverse",
    "e_iso_pair",
    "partial_iso",
    "rep_natural",
    "red_natural",
    "e_natural",
    "partial_natural",
    "naturality_sample",
    "rep_naturality_failure",
    "red_naturality_failure",
]

logger = logging.getLogger(__name__)

T = TypeVar("T")


def rep_iso(q: Jsl) -> Iso:
    """
    ``rep_Q : Q → Open(Pirr Q)`` with its inverse.

    ``rep(x) = { m ∈ M(Q) : x ≰ m }`` and ``rep⁻¹(Y) = ⋀(M(Q) \\ Y)``.
    """
    p = pirr_obj(q)
    target = open_obj(p)
    idx = open_index(p)
    mi = list(q.mi)
    fwd = []
    for x in range(len(q)):
        mask = sum(1 << k for k, m in enumerate(mi) if not q.leq[x, m])
        fwd.append(idx[mask])
    bwd = []
    for y in p.open_masks:
        bwd.append(q.meet_idx(m for k, m in enumerate(mi) if not y >> k & 1))
    return Iso(JslMorphism(q, target, tuple(fwd)), JslMorphism(target, q, tuple(bwd)))


def red_iso(g: Rel) -> Iso:
    """
    ``red_G : G → Pirr(Open G)`` with inverse ``∈˘``.

    ``red(g_s, Y)`` iff ``G[g_s] ⊄ Y``.
    """
    og = open_obj(g)
    p = pirr_obj(og)
    m_masks = [g.target.mask(og[i]) for i in og.mi]
    j_masks = [g.target.mask(og[i]) for i in og.ji]
    fwd = np.array([[row & ~y != 0 for y in m_masks] for row in g.rows], dtype=bool)
    bwd = np.array([[x >> t & 1 == 1 for t in range(len(g.target))] for x in j_masks], dtype=bool)
    forward = DepMorphism(g, p, Rel(g.source, p.target, fwd.reshape(len(g.source), len(m_masks))))
    backward = DepMorphism(p, g, Rel(p.source, g.target, bwd.reshape(len(j_masks), len(g.target))))
    return Iso(forward, backward)


def e_iso(q: Jsl) -> DepMorphism:
    """``ℰ_Q = { (j, x) : j ≰ x } : Pirr Q → ≰_Q``."""
    return DepMorphism(pirr_obj(q), nleq_obj(q), Rel(q.ji_set, q.carrier, ~q.leq[list(q.ji), :]))


def e_iso_inverse(q: Jsl) -> DepMorphism:
    """``{ (x, m) : x ≰ m } : ≰_Q → Pirr Q``."""
    return DepMorphism(nleq_obj(q), pirr_obj(q), Rel(q.carrier, q.mi_set, ~q.leq[:, list(q.mi)]))


def e_iso_pair(q: Jsl) -> Iso:
    return Iso(e_iso(q), e_iso_inverse(q))


def partial_iso(g: Rel) -> Iso:
    """
    ``∂_G : (Open G)^op → Open Ğ`` with ``∂(X) = Ğ[Gt \\ X]``.

    The inverse is ``Z ↦ G[Gs \\ Z]``.
    """
    gc = g.converse()
    og, ogc = open_obj(g), open_obj(gc)
    idx, idx_c = open_index(g), open_index(gc)
    full_s, full_t = g.source.full_mask, g.target.full_mask
    fwd = tuple(idx_c[gc.up_mask(full_t & ~x)] for x in g.open_masks)
    bwd = tuple(idx[g.up_mask(full_s & ~z)] for z in gc.open_masks)
    return Iso(JslMorphism(og.op(), ogc, fwd), JslMorphism(ogc, og.op(), bwd))


# ---------------------------------------------------------------------------
# naturality
# ---------------------------------------------------------------------------

def rep_natural(f: JslMorphism) -> bool:
    """``Open(Pirr f) ∘ rep_Q = rep_R ∘ f``."""
    left = compose(rep_iso(f.dom).forward, open_mor(pirr_mor(f)))
    right = compose(f, rep_iso(f.cod).forward)
    return left == right


def red_natural(r: DepMorphism) -> bool:
    """``red_H ∘ r = Pirr(Open r) ∘ red_G`` in Dep."""
    left = dep_compose(r, red_iso(r.cod).forward)
    right = dep_compose(red_iso(r.dom).forward, pirr_mor(open_mor(r)))
    return left == right


def e_natural(f: JslMorphism) -> bool:
    """``Nleq f = ℰ⁻¹ ; Pirr f ; ℰ``."""
    via = dep_compose(dep_compose(e_iso_inverse(f.dom), pirr_mor(f)), e_iso(f.cod))
    return nleq_mor(f) == via


def partial_natural(r: DepMorphism) -> bool:
    """``(Open r)_* = ∂_G⁻¹ ∘ Open(rˇ) ∘ ∂_H``."""
    lhs = open_mor(r).adjoint()
    rhs = compose(compose(partial_iso(r.cod).forward, open_mor(dep_dual(r))), partial_iso(r.dom).backward)
    return lhs == rhs


def naturality_sample(maps: Sequence[T], seed: Optional[int] = None) -> List[T]:
    """All of *maps* up to ``NATURALITY_FULL``, else a seeded sample of ``NATURALITY_SAMPLE``."""
    if len(maps) <= Config.NATURALITY_FULL:
        return list(maps)
    rng = np.random.default_rng(Config.SEED if seed is None else seed)
    picks = sorted(rng.choice(len(maps), size=min(Config.NATURALITY_SAMPLE, len(maps)), replace=False))
    logger.debug("sampled %d of %d morphisms for naturality", len(picks), len(maps))
    return [maps[int(i)] for i in picks]


def rep_naturality_failure(q: Jsl, r: Jsl, seed: Optional[int] = None) -> Optional[JslMorphism]:
    """First morphism ``q → r`` at which rep is not natural, or ``None``."""
    for f in naturality_sample(enumerate_morphisms(q, r), seed):
        if not rep_natural(f):
            return f
    return None


def red_naturality_failure(g: Rel, h: Rel, seed: Optional[int] = None) -> Optional[DepMorphism]:
    for r in naturality_sample(dep_hom(g, h), seed):
        if not red_natural(r):
            return r
    return None
