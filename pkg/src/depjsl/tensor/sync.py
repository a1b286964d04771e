from __future__ import annotations
"""
The synchronous product ``G ⊙ H`` (Kronecker product of relations) and tight
Dep morphisms.

A Dep morphism is tight when it is a union of basic bicliques
``Ğ[g_t] × H[h_s]``. Tight morphisms out of a synchronous product re-tuple
into tight morphisms into ``Ȟ ⊙ I``.
"""

import logging
from typing import Hashable, List

import numpy as np

from depjsl.errors import CarrierMismatchError, NotTightError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import Poset
from depjsl.finrel.relation import Rel
from depjsl.dep.morphism import DepMorphism, dep_hom
from depjsl.equivalence.functors import Iso
from depjsl.jsl.morphism import JslMorphism
from depjsl.jsl.semilattice import Jsl

__all__ = [
    "sync_product",
    "sync_on_morphisms",
    "basic_biclique",
    "basic_independent",
    "dep_top",
    "is_tight_dep",
    "tight_dep_hom",
    "tight_dep_hom_jsl",
    "tight_dual",
    "tight_dual_iso",
    "rtup",
    "rtup_inverse",
]

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# synchronous product
# ---------------------------------------------------------------------------

def sync_product(g: Rel, h: Rel) -> Rel:
    """``(G ⊙ H)((a, c), (b, d))`` iff ``G(a, b)`` and ``H(c, d)``; pairs in lexicographic order."""
    return Rel(
        g.source.product(h.source),
        g.target.product(h.target),
        np.kron(g.matrix, h.matrix).astype(bool),
    )


def sync_on_morphisms(r: DepMorphism, s: DepMorphism) -> DepMorphism:
    """``R ⊙ S : G ⊙ G' → H ⊙ H'``."""
    return DepMorphism(sync_product(r.dom, s.dom), sync_product(r.cod, s.cod), sync_product(r.rel, s.rel))


# ---------------------------------------------------------------------------
# basic bicliques and tightness
# ---------------------------------------------------------------------------

def basic_biclique(g: Rel, h: Rel, g_t: Hashable, h_s: Hashable) -> DepMorphism:
    """``Ğ[g_t] × H[h_s] : G → H``."""
    m = np.outer(g.matrix[:, g.target.index(g_t)], h.matrix[h.source.index(h_s), :])
    return DepMorphism(g, h, Rel(g.source, h.target, m))


def dep_top(g: Rel, h: Rel) -> DepMorphism:
    """The largest morphism ``Ğ[Gt] × H[Hs]``."""
    m = np.outer(g.matrix.any(axis=1), h.matrix.any(axis=0))
    return DepMorphism(g, h, Rel(g.source, h.target, m))


def basic_independent(g: Rel, h: Rel, g_s: Hashable, h_t: Hashable) -> DepMorphism:
    """``⊤ ∩ ¬(cl_G({g_s}) × cl_Ȟ({h_t}))``."""
    left = g.cl_mask(1 << g.source.index(g_s))
    right = h.converse().cl_mask(1 << h.target.index(h_t))
    lm = np.array([left >> i & 1 == 1 for i in range(len(g.source))], dtype=bool)
    rm = np.array([right >> j & 1 == 1 for j in range(len(h.target))], dtype=bool)
    top = dep_top(g, h).rel.matrix
    return DepMorphism(g, h, Rel(g.source, h.target, top & ~np.outer(lm, rm)))


def _contained_bicliques(r: DepMorphism) -> np.ndarray:
    """Union of every basic biclique contained in *r*."""
    g, h, rel = r.dom, r.cod, r.rel.matrix
    out = np.zeros_like(rel)
    for gt in range(len(g.target)):
        col = g.matrix[:, gt]
        for hs in range(len(h.source)):
            block = np.outer(col, h.matrix[hs, :])
            if not (block & ~rel).any():
                out |= block
    return out


def is_tight_dep(r: DepMorphism) -> bool:
    """Whether *r* is the union of the basic bicliques it contains."""
    return bool(np.array_equal(_contained_bicliques(r), r.rel.matrix))


def tight_dep_hom(g: Rel, h: Rel) -> List[DepMorphism]:
    return [r for r in dep_hom(g, h) if is_tight_dep(r)]


def tight_dep_hom_jsl(g: Rel, h: Rel) -> Jsl:
    """Tight morphisms ``g → h`` under union."""
    maps = tight_dep_hom(g, h)
    leq = np.array([[a.issubset(b) for b in maps] for a in maps], dtype=bool).reshape(len(maps), len(maps))
    return Jsl(Poset(FinSet(tuple(maps)), leq))


def tight_dual(r: DepMorphism) -> DepMorphism:
    """
    ``v(R) = ¬(R₊˘) ; Ȟ'`` for tight ``R : G → H'``, typed ``Ğ → Ȟ'``.

    Applied to ``R : G → Ȟ`` this is ``Ğ → H``; applied again it inverts.
    """
    if not is_tight_dep(r):
        raise NotTightError("dual isomorphism is only defined on tight morphisms", witness=r.rel.pairs)
    k = r.cod.converse()
    rel = r.plus.converse().complement().compose(k)
    return DepMorphism(r.dom.converse(), k, rel)


def tight_dual_iso(g: Rel, h: Rel) -> Iso:
    """``v : (Tight[G, Ȟ])^op → Tight[Ğ, H]`` with its inverse, as semilattice morphisms."""
    src = tight_dep_hom_jsl(g, h.converse()).op()
    tgt = tight_dep_hom_jsl(g.converse(), h)
    fwd = tuple(tgt.index(tight_dual(r)) for r in src.elements)
    bwd = tuple(src.index(tight_dual(r)) for r in tgt.elements)
    return Iso(JslMorphism(src, tgt, fwd), JslMorphism(tgt, src, bwd))


# ---------------------------------------------------------------------------
# re-tupling
# ---------------------------------------------------------------------------

def rtup(r: DepMorphism, g: Rel, h: Rel) -> DepMorphism:
    """
    Re-tuple a tight ``R : G ⊙ H → I`` into ``G → Ȟ ⊙ I``.

    ``((g_s, h_s), i_t) ↦ (g_s, (h_s, i_t))``.
    """
    if r.dom != sync_product(g, h):
        raise CarrierMismatchError("morphism is not defined on the synchronous product of g and h")
    if not is_tight_dep(r):
        raise NotTightError("re-tupling needs a tight morphism", witness=r.rel.pairs)
    i = r.cod
    cod = sync_product(h.converse(), i)
    m = r.rel.matrix.reshape(len(g.source), len(h.source) * len(i.target))
    return DepMorphism(g, cod, Rel(g.source, cod.target, m))


def rtup_inverse(s: DepMorphism, h: Rel, i: Rel) -> DepMorphism:
    """Re-tuple a tight ``S : G → Ȟ ⊙ I`` back into ``G ⊙ H → I``."""
    if s.cod != sync_product(h.converse(), i):
        raise CarrierMismatchError("morphism does not land in the synchronous product of ȟ and i")
    if not is_tight_dep(s):
        raise NotTightError("re-tupling needs a tight morphism", witness=s.rel.pairs)
    g = s.dom
    dom = sync_product(g, h)
    m = s.rel.matrix.reshape(len(g.source) * len(h.source), len(i.target))
    return DepMorphism(dom, i, Rel(dom.source, i.target, m))
