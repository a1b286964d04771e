from __future__ import annotations
"""Fullness of Open: every morphism between open-set lattices comes from Dep."""

from depjsl.finrel.relation import Rel
from depjsl.dep.morphism import DepMorphism
from depjsl.equivalence.functors import open_index, require_open_domain
from depjsl.jsl.morphism import JslMorphism

__all__ = ["full_inverse"]


def full_inverse(f: JslMorphism, g: Rel, h: Rel) -> DepMorphism:
    """
    The Dep morphism ``g → h`` whose image under Open is *f*.

    ``R(g_s, h_t)`` iff ``h_t ∈ f(G[g_s])``.
    """
    require_open_domain(f, g, h)
    idx = open_index(g)
    rows = [h.target.mask(f.cod[f.images[idx[row]]]) for row in g.rows]
    return DepMorphism(g, h, Rel.from_masks(g.source, h.target, rows))
