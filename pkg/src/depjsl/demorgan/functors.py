from __future__ import annotations
"""
The graph-side categories UG_j, UG_m and UG, and their equivalences with
SAJ, SAM and SAI algebras.

A UG_j object ``(G, E)`` has ``E ⊆ Gs × Gs`` symmetric and a Dep morphism
``G → Ğ``; a UG_m object has ``E ⊆ Gt × Gt`` symmetric and a Dep morphism
``Ğ → G``. UG objects are plain undirected graphs.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable

import numpy as np

from depjsl.errors import CarrierMismatchError, FactorizationError, KindMismatchError, NotSymmetricError
from depjsl.finrel.relation import Rel
from depjsl.dep.morphism import DepMorphism, dep_compose, dep_dual, dep_violation
from depjsl.demorgan.algebra import AlgebraKind, UnaryAlgebra, is_algebra_morphism
from depjsl.demorgan.graphs import UGraph
from depjsl.equivalence.functors import Iso, open_index, open_mor, open_obj, pirr_mor, pirr_obj
from depjsl.equivalence.natural import partial_iso, red_iso, rep_iso
from depjsl.jsl.morphism import JslMorphism, compose
from depjsl.utils.config import Config, guard

__all__ = [
    "Side",
    "UgPair",
    "ug_pair_check",
    "diagonal_j",
    "diagonal_m",
    "ug_morphism_check",
    "ug_morphism_by_definition",
    "ugj_morphism_check",
    "ugm_morphism_check",
    "openj",
    "pirrj",
    "openm",
    "pirrm",
    "open_g",
    "pirr_g",
    "open_g_mor",
    "pirr_g_mor",
    "openj_mor",
    "pirrj_mor",
    "openm_mor",
    "pirrm_mor",
    "grep_iso",
    "gred_iso",
    "jrep_iso",
    "jred_iso",
    "mrep_iso",
    "mred_iso",
]

logger = logging.getLogger(__name__)


class Side(str, Enum):
    J = "j"
    M = "m"


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def _all_subsets(n: int, what: str) -> range:
    guard(what, n, Config.MAX_SUBSET_BITS)
    return range(1 << n)


def _holds_on_subsets(n: int, lhs: Callable[[int], int], rhs: Callable[[int], int], what: str) -> bool:
    return all(lhs(x) == rhs(x) for x in _all_subsets(n, what))


def _require_typed(r: Rel, g1: UGraph, g2: UGraph) -> None:
    if r.source != g1.vertices or r.target != g2.vertices:
        raise CarrierMismatchError("relation is not typed V₁ × V₂")


def _require_kind(alg: UnaryAlgebra, *kinds: AlgebraKind) -> None:
    if alg.kind not in kinds:
        allowed = "/".join(k.value for k in kinds)
        raise KindMismatchError(f"expected a {allowed} algebra, got {alg.kind.value}", witness=alg.kind.value)


# ---------------------------------------------------------------------------
# UG_j / UG_m objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UgPair:
    """
    An object ``(G, E)`` of UG_j (``side = j``) or UG_m (``side = m``).

    Attributes:
        g: the relation ``G``
        e: the symmetric relation ``E``
        side: which category the pair belongs to
    """

    g: Rel
    e: Rel
    side: Side

    def __post_init__(self) -> None:
        object.__setattr__(self, "side", Side(self.side))
        carrier = self.g.source if self.side is Side.J else self.g.target
        if self.e.source != carrier or self.e.target != carrier:
            raise CarrierMismatchError(f"E must be a relation on the {'source' if self.side is Side.J else 'target'} of G")
        if not self.e.is_symmetric():
            a, b = (int(v) for v in np.argwhere(self.e.matrix != self.e.matrix.T)[0])
            pair = (carrier[a], carrier[b])
            raise NotSymmetricError(f"E is not symmetric at {pair!r}", witness=pair)
        dom, cod = (self.g, self.g.converse()) if self.side is Side.J else (self.g.converse(), self.g)
        wit = dep_violation(self.e, dom, cod)
        if wit is not None:
            kind, i = wit
            name = carrier[i]
            raise FactorizationError(f"E does not factor through G: {kind} {name!r} is not open", witness=name)

    @cached_property
    def dep(self) -> DepMorphism:
        """``E`` as a Dep morphism ``G → Ğ`` (side j) or ``Ğ → G`` (side m)."""
        if self.side is Side.J:
            return DepMorphism(self.g, self.g.converse(), self.e)
        return DepMorphism(self.g.converse(), self.g, self.e)

    @property
    def component(self) -> Rel:
        """The common component ``E₋ = E₊ = ¬(¬E ; G)``."""
        return self.dep.minus


def ug_pair_check(g: Rel, e: Rel, side: Side | str) -> UgPair:
    """
    Validate ``(g, e)`` as a UG_j or UG_m object.

    Raises:
        NotSymmetricError: *e* is not symmetric.
        FactorizationError: a row of *e* is not open; the witness names it.
    """
    return UgPair(g, e, Side(side))


def diagonal_j(graph: UGraph) -> UgPair:
    """``(E, E)`` as a UG_j object."""
    return UgPair(graph.edges, graph.edges, Side.J)


def diagonal_m(graph: UGraph) -> UgPair:
    return UgPair(graph.edges, graph.edges, Side.M)


# ---------------------------------------------------------------------------
# morphism conditions
# ---------------------------------------------------------------------------

def ug_morphism_check(r: Rel, g1: UGraph, g2: UGraph) -> bool:
    """
    Whether *r* is a UG morphism ``g1 → g2``.

    *r* must be a Dep morphism ``E₁ → E₂`` with ``R↑ = E₂↑ ∘ Ř↓ ∘ E₁↑``
    on every subset of ``V₁``.
    """
    _require_typed(r, g1, g2)
    if dep_violation(r, g1.edges, g2.edges) is not None:
        return False
    e1, e2, rc = g1.edges, g2.edges, r.converse()
    return _holds_on_subsets(
        len(g1), r.up_mask, lambda x: e2.up_mask(rc.down_mask(e1.up_mask(x))), "UG morphism subsets"
    )


def ug_morphism_by_definition(r: Rel, g1: UGraph, g2: UGraph) -> bool:
    """``R↑ ∘ E₁↓ = E₂↑ ∘ Ř↓`` on every subset of ``V₁``."""
    _require_typed(r, g1, g2)
    if dep_violation(r, g1.edges, g2.edges) is not None:
        return False
    e1, e2, rc = g1.edges, g2.edges, r.converse()
    return _holds_on_subsets(
        len(g1), lambda y: r.up_mask(e1.down_mask(y)), lambda y: e2.up_mask(rc.down_mask(y)), "UG morphism subsets"
    )


def ugj_morphism_check(r: Rel, p1: UgPair, p2: UgPair) -> bool:
    """``R↑ ∘ E₁↓ = H↑ ∘ (E₂ ⨟ Ř)↓`` for a Dep morphism ``R : G → H``."""
    if p1.side is not Side.J or p2.side is not Side.J:
        raise KindMismatchError("UG_j morphisms need two UG_j objects")
    g, h = p1.g, p2.g
    if dep_violation(r, g, h) is not None:
        return False
    rd = DepMorphism(g, h, r)
    k = dep_compose(p2.dep, dep_dual(rd)).rel
    e1 = p1.e
    return _holds_on_subsets(
        len(g.source), lambda y: r.up_mask(e1.down_mask(y)), lambda y: h.up_mask(k.down_mask(y)), "UG_j subsets"
    )


def ugm_morphism_check(r: Rel, p1: UgPair, p2: UgPair) -> bool:
    """``E₂↓ ∘ R↑ = (Ř ⨟ E₁)↓ ∘ G↑`` for a Dep morphism ``R : G → H``."""
    if p1.side is not Side.M or p2.side is not Side.M:
        raise KindMismatchError("UG_m morphisms need two UG_m objects")
    g, h = p1.g, p2.g
    if dep_violation(r, g, h) is not None:
        return False
    rd = DepMorphism(g, h, r)
    k = dep_compose(dep_dual(rd), p1.dep).rel
    e2 = p2.e
    return _holds_on_subsets(
        len(g.source), lambda x: e2.down_mask(r.up_mask(x)), lambda x: k.down_mask(g.up_mask(x)), "UG_m subsets"
    )


# ---------------------------------------------------------------------------
# object actions
# ---------------------------------------------------------------------------

def openj(p: UgPair) -> UnaryAlgebra:
    """``Open_j(G, E) = (Open G, ∂_G⁻¹ ∘ Open E)``, a SAJ algebra."""
    if p.side is not Side.J:
        raise KindMismatchError("openj needs a UG_j object")
    sigma = compose(open_mor(p.dep), partial_iso(p.g).backward)
    return UnaryAlgebra(open_obj(p.g), sigma.images, AlgebraKind.SAJ)


def pirrj(alg: UnaryAlgebra) -> UgPair:
    """``Pirr_j(Q, σ) = (Pirr Q, Pirr σ)`` with ``σ : Q → Q^op``."""
    _require_kind(alg, AlgebraKind.SAJ, AlgebraKind.SAI)
    return UgPair(pirr_obj(alg.base), pirr_mor(alg.as_join_morphism()).rel, Side.J)


def openm(p: UgPair) -> UnaryAlgebra:
    """``Open_m(G, E) = (Open G, Open E ∘ ∂_G)``, a SAM algebra."""
    if p.side is not Side.M:
        raise KindMismatchError("openm needs a UG_m object")
    sigma = compose(partial_iso(p.g).forward, open_mor(p.dep))
    return UnaryAlgebra(open_obj(p.g), sigma.images, AlgebraKind.SAM)


def pirrm(alg: UnaryAlgebra) -> UgPair:
    """``Pirr_m(Q, σ) = (Pirr Q, Pirr σ)`` with ``σ : Q^op → Q``."""
    _require_kind(alg, AlgebraKind.SAM, AlgebraKind.SAI)
    return UgPair(pirr_obj(alg.base), pirr_mor(alg.as_meet_morphism()).rel, Side.M)


def open_g(graph: UGraph) -> UnaryAlgebra:
    """``Open_g(V, E) = (Open E, ∂_E)``, a De Morgan algebra."""
    sigma = partial_iso(graph.edges).forward
    return UnaryAlgebra(open_obj(graph.edges), sigma.images, AlgebraKind.SAI)


def pirr_g(alg: UnaryAlgebra) -> UGraph:
    """``Pirr_g(Q, σ)``: vertices ``J(Q)``, ``j1 — j2`` iff ``j2 ≰ σ(j1)``."""
    _require_kind(alg, AlgebraKind.SAI)
    q = alg.base
    ji = list(q.ji)
    m = ~q.leq[np.ix_(ji, alg.array[ji])].T
    return UGraph(q.ji_set, Rel(q.ji_set, q.ji_set, m))


# ---------------------------------------------------------------------------
# morphism actions
# ---------------------------------------------------------------------------

def open_g_mor(r: Rel, g1: UGraph, g2: UGraph) -> JslMorphism:
    """``Open R`` for a UG morphism ``R : g1 → g2``."""
    if not ug_morphism_check(r, g1, g2):
        raise FactorizationError("relation is not a UG morphism", witness=r.pairs)
    return open_mor(DepMorphism(g1.edges, g2.edges, r))


def pirr_g_mor(f: JslMorphism, a1: UnaryAlgebra, a2: UnaryAlgebra) -> DepMorphism:
    """``Pirr(σ₂ ∘ f)``: ``j — j'`` iff ``j' ≰ σ₂(f(j))``."""
    _require_kind(a1, AlgebraKind.SAI)
    _require_kind(a2, AlgebraKind.SAI)
    if not is_algebra_morphism(f, a1, a2):
        raise FactorizationError("morphism does not commute with σ", witness=f.as_dict())
    rel = pirr_mor(compose(f, a2.as_join_morphism())).rel
    return DepMorphism(pirr_g(a1).edges, pirr_g(a2).edges, rel)


def openj_mor(r: Rel, p1: UgPair, p2: UgPair) -> JslMorphism:
    if not ugj_morphism_check(r, p1, p2):
        raise FactorizationError("relation is not a UG_j morphism", witness=r.pairs)
    return open_mor(DepMorphism(p1.g, p2.g, r))


def pirrj_mor(f: JslMorphism, a1: UnaryAlgebra, a2: UnaryAlgebra) -> DepMorphism:
    if not is_algebra_morphism(f, a1, a2):
        raise FactorizationError("morphism does not commute with σ", witness=f.as_dict())
    return pirr_mor(f)


def openm_mor(r: Rel, p1: UgPair, p2: UgPair) -> JslMorphism:
    if not ugm_morphism_check(r, p1, p2):
        raise FactorizationError("relation is not a UG_m morphism", witness=r.pairs)
    return open_mor(DepMorphism(p1.g, p2.g, r))


def pirrm_mor(f: JslMorphism, a1: UnaryAlgebra, a2: UnaryAlgebra) -> DepMorphism:
    return pirrj_mor(f, a1, a2)


# ---------------------------------------------------------------------------
# natural isomorphisms
# ---------------------------------------------------------------------------

def grep_iso(alg: UnaryAlgebra) -> Iso:
    """
    ``grep : (Q, σ) → Open_g(Pirr_g(Q, σ))``.

    ``grep(q) = { j : j ≰ σ(q) }`` and ``grep⁻¹(Y) = σ(⋁(J(Q) \\ Y))``.
    """
    _require_kind(alg, AlgebraKind.SAI)
    q = alg.base
    graph = pirr_g(alg)
    target = open_g(graph).base
    idx = open_index(graph.edges)
    ji = list(q.ji)
    fwd = tuple(
        idx[sum(1 << k for k, j in enumerate(ji) if not q.leq[j, alg.sigma[x]])] for x in range(len(q))
    )
    bwd = tuple(
        alg.sigma[q.join_idx(j for k, j in enumerate(ji) if not y >> k & 1)] for y in graph.edges.open_masks
    )
    return Iso(JslMorphism(q, target, fwd), JslMorphism(target, q, bwd))


def gred_iso(graph: UGraph) -> Iso:
    """``gred = ∈ ⊆ V × J(Open E)`` with inverse ``∋``."""
    alg = open_g(graph)
    og = alg.base
    back = pirr_g(alg)
    m = np.array(
        [[v in og[j] for j in og.ji] for v in graph.vertices], dtype=bool
    ).reshape(len(graph), len(og.ji))
    fwd = DepMorphism(graph.edges, back.edges, Rel(graph.vertices, back.vertices, m))
    bwd = DepMorphism(back.edges, graph.edges, Rel(back.vertices, graph.vertices, m.T))
    return Iso(fwd, bwd)


def jrep_iso(alg: UnaryAlgebra) -> Iso:
    """``jrep = rep`` as an algebra isomorphism ``(Q, σ) → Open_j(Pirr_j(Q, σ))``."""
    _require_kind(alg, AlgebraKind.SAJ, AlgebraKind.SAI)
    iso = rep_iso(alg.base)
    target = openj(pirrj(alg))
    if not is_algebra_morphism(iso.forward, alg.relabel(AlgebraKind.SAJ), target):
        raise FactorizationError("rep does not commute with σ")
    return iso


def jred_iso(p: UgPair) -> Iso:
    """``jred = red_G`` as a UG_j isomorphism ``(G, E) → Pirr_j(Open_j(G, E))``."""
    iso = red_iso(p.g)
    target = pirrj(openj(p))
    if not ugj_morphism_check(iso.forward.rel, p, target):
        raise FactorizationError("red is not a UG_j morphism")
    return iso


def mrep_iso(alg: UnaryAlgebra) -> Iso:
    _require_kind(alg, AlgebraKind.SAM, AlgebraKind.SAI)
    iso = rep_iso(alg.base)
    target = openm(pirrm(alg))
    if not is_algebra_morphism(iso.forward, alg.relabel(AlgebraKind.SAM), target):
        raise FactorizationError("rep does not commute with σ")
    return iso


def mred_iso(p: UgPair) -> Iso:
    iso = red_iso(p.g)
    target = pirrm(openm(p))
    if not ugm_morphism_check(iso.forward.rel, p, target):
        raise FactorizationError("red is not a UG_m morphism")
    return iso
