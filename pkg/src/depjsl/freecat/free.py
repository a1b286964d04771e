from __future__ import annotations
"""
The free constructions Set → Poset → JSL → DL → BA.

* ``F_≤ X = (X, Δ)`` with the identity as unit.
* ``F_∨ P = Dn(P)`` under union, ``η(p) = ↓p``, ``ε(S) = ⋁S``.
* ``F_∧ Q = Dn(Q)`` under union and intersection, ``η(q) = Q ∖ ↑q``,
  ``ε(S) = ⋀(M(Q) ∖ S)``.
* ``F_¬ D = P(J(D))``, ``η(d) = J(D) ∩ ↓d``, ``ε(S) = ⋁S``.

Distributive lattices and boolean algebras are ``Jsl`` values; the lattice
structure is read off the order.
"""

import logging
from dataclasses import dataclass
from typing import Hashable, List, Mapping, Tuple

import numpy as np

from depjsl.errors import CarrierMismatchError, KindMismatchError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import MonotoneMap, Poset, discrete_poset
from depjsl.jsl.homsets import enumerate_morphisms
from depjsl.jsl.morphism import JslMorphism, compose
from depjsl.jsl.semilattice import Jsl, powerset, subset_lattice
from depjsl.utils.config import Config, guard

__all__ = [
    "Adjunction",
    "free_poset",
    "counit_poset",
    "extend_free_poset",
    "free_jsl",
    "free_jsl_object",
    "free_jsl_mor",
    "counit_jsl",
    "extend_free_jsl",
    "free_dl",
    "free_dl_object",
    "free_dl_mor",
    "counit_dl",
    "extend_free_dl",
    "free_ba",
    "free_ba_object",
    "free_ba_mor",
    "counit_ba",
    "extend_free_ba",
    "complement",
    "is_lattice_morphism",
    "lattice_morphisms",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Adjunction:
    """
    One free construction instantiated at an object ``A``.

    Attributes:
        name: which construction
        source: the object ``A``
        free: ``F A``
        unit: ``η_A : A → U F A``
        counit: ``ε_{F A} : F U F A → F A``
        first: index table of ``ε_{F A} ∘ F η_A`` (must be the identity of ``F A``)
        second: index table of ``U ε_{F A} ∘ η_{U F A}`` (must be the identity of ``U F A``)
    """

    name: str
    source: object
    free: object
    unit: object
    counit: object
    first: Tuple[int, ...]
    second: Tuple[int, ...]

    def triangle_identities(self) -> Tuple[bool, bool]:
        return _is_identity(self.first), _is_identity(self.second)


def _is_identity(table: Tuple[int, ...]) -> bool:
    return table == tuple(range(len(table)))


def _then(first: Tuple[int, ...], second: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(second[i] for i in first)


# ---------------------------------------------------------------------------
# Set → Poset
# ---------------------------------------------------------------------------

def counit_poset(p: Poset) -> MonotoneMap:
    """``ε_P : (P, Δ) → P``, the identity on elements."""
    return MonotoneMap(discrete_poset(p.carrier), p, tuple(range(len(p))))


def extend_free_poset(f: Mapping[Hashable, Hashable], x: FinSet, p: Poset) -> MonotoneMap:
    """A function ``X → P`` as the monotone map ``(X, Δ) → P``."""
    return MonotoneMap(discrete_poset(x), p, tuple(p.carrier.index(f[e]) for e in x))


def free_poset(x: FinSet) -> Adjunction:
    """``F_≤ X = (X, Δ)``."""
    free = discrete_poset(x)
    ident = tuple(range(len(x)))
    unit = {e: e for e in x}
    eps = counit_poset(free)
    # F η_X is the identity of (X, Δ)
    first = _then(ident, eps.images)
    second = _then(ident, eps.images)
    return Adjunction("free poset", x, free, unit, eps, first, second)


# ---------------------------------------------------------------------------
# Poset → JSL
# ---------------------------------------------------------------------------

def free_jsl_object(p: Poset) -> Jsl:
    """``Dn(P)`` ordered by inclusion; elements are frozensets."""
    guard("down-set enumeration", len(p), Config.MAX_SUBSET_BITS)
    return subset_lattice(p.carrier, p.downset_masks)


def _down_unit(p: Poset, free: Jsl) -> Tuple[int, ...]:
    return tuple(free.index(p.carrier.subset(p.down_mask(i))) for i in range(len(p)))


def free_jsl_mor(g: MonotoneMap) -> JslMorphism:
    """``F_∨ g : S ↦ ↓g[S]``."""
    src, tgt = free_jsl_object(g.dom), free_jsl_object(g.cod)
    images = []
    for s in src.elements:
        mask = 0
        for e in s:
            mask |= g.cod.down_mask(g.images[g.dom.carrier.index(e)])
        images.append(tgt.index(g.cod.carrier.subset(mask)))
    return JslMorphism(src, tgt, tuple(images))


def counit_jsl(q: Jsl) -> JslMorphism:
    """``ε_Q : Dn(Q) → Q``, ``S ↦ ⋁S``."""
    free = free_jsl_object(q.order)
    return JslMorphism(free, q, tuple(q.join_idx(q.index(e) for e in s) for s in free.elements))


def extend_free_jsl(g: MonotoneMap, q: Jsl) -> JslMorphism:
    """The unique morphism ``Dn(P) → Q`` restricting to *g* along ``η``: ``S ↦ ⋁g[S]``."""
    if g.cod != q.order:
        raise CarrierMismatchError("monotone map does not land in the order of q")
    free = free_jsl_object(g.dom)
    images = tuple(q.join_idx(g.images[g.dom.carrier.index(e)] for e in s) for s in free.elements)
    return JslMorphism(free, q, images)


def free_jsl(p: Poset) -> Adjunction:
    """``F_∨ P = (Dn(P), ∪, ∅)``."""
    free = free_jsl_object(p)
    unit = MonotoneMap(p, free.order, _down_unit(p, free))
    eps = counit_jsl(free)
    first = _then(free_jsl_mor(unit).images, eps.images)
    second = _then(_down_unit(free.order, eps.dom), eps.images)
    logger.debug("free join-semilattice on %d elements has %d elements", len(p), len(free))
    return Adjunction("free join-semilattice", p, free, unit, eps, first, second)


# ---------------------------------------------------------------------------
# JSL → DL
# ---------------------------------------------------------------------------

def free_dl_object(q: Jsl) -> Jsl:
    """``Dn(Q)``: a distributive lattice under union and intersection."""
    return free_jsl_object(q.order)


def _complement_up_unit(q: Jsl, free: Jsl) -> Tuple[int, ...]:
    full = q.carrier.full_mask
    return tuple(free.index(q.carrier.subset(full & ~q.up_mask(i))) for i in range(len(q)))


def extend_free_dl(g: JslMorphism, d: Jsl) -> JslMorphism:
    """
    The lattice morphism ``Dn(Q) → D`` restricting to *g* along ``η``.

    ``S ↦ ⋀{ g(u) : u ∉ S }``.
    """
    if g.cod != d:
        raise CarrierMismatchError("morphism does not land in d")
    d.require_distributive()
    q = g.dom
    free = free_dl_object(q)
    images = []
    for s in free.elements:
        images.append(d.meet_idx(g.images[u] for u in range(len(q)) if q[u] not in s))
    return JslMorphism(free, d, tuple(images))


def free_dl_mor(f: JslMorphism) -> JslMorphism:
    """``F_∧ f = extend(η ∘ f)``."""
    tgt = free_dl_object(f.cod)
    unit = JslMorphism(f.cod, tgt, _complement_up_unit(f.cod, tgt))
    return extend_free_dl(compose(f, unit), tgt)


def counit_dl(d: Jsl) -> JslMorphism:
    """``ε_D : Dn(D) → D``, ``S ↦ ⋀(M(D) ∖ S)``."""
    d.require_distributive()
    free = free_dl_object(d)
    images = tuple(d.meet_idx(m for m in d.mi if d[m] not in s) for s in free.elements)
    return JslMorphism(free, d, images)


def free_dl(q: Jsl) -> Adjunction:
    """``F_∧ Q``, the free distributive lattice on a join-semilattice."""
    free = free_dl_object(q)
    unit = JslMorphism(q, free, _complement_up_unit(q, free))
    eps = counit_dl(free)
    first = _then(free_dl_mor(unit).images, eps.images)
    second = _then(_complement_up_unit(free, eps.dom), eps.images)
    logger.debug("free distributive lattice on %d elements has %d elements", len(q), len(free))
    return Adjunction("free distributive lattice", q, free, unit, eps, first, second)


# ---------------------------------------------------------------------------
# DL → BA
# ---------------------------------------------------------------------------

def complement(b: Jsl, x: int) -> int:
    """The boolean complement of ``b[x]``: the join of the atoms not below it."""
    return b.join_idx(j for j in b.ji if not b.leq[j, x])


def _require_boolean(b: Jsl) -> None:
    if not b.is_boolean():
        raise KindMismatchError(f"semilattice of size {len(b)} is not boolean")


def free_ba_object(d: Jsl) -> Jsl:
    """``P(J(D))``; elements are frozensets of join-irreducibles."""
    d.require_distributive()
    guard("power set", len(d.ji), Config.MAX_SUBSET_BITS)
    return powerset(d.ji_set)


def _ji_unit(d: Jsl, free: Jsl) -> Tuple[int, ...]:
    return tuple(free.index(frozenset(d[j] for j in d.ji if d.leq[j, x])) for x in range(len(d)))


def extend_free_ba(g: JslMorphism, b: Jsl) -> JslMorphism:
    """
    The boolean morphism ``P(J(D)) → B`` restricting to *g* along ``η``.

    ``S ↦ ⋁_{j ∈ S} g(j) ∧ ¬g(j_*)`` with ``j_*`` the unique lower cover of ``j``.
    """
    if g.cod != b:
        raise CarrierMismatchError("morphism does not land in b")
    _require_boolean(b)
    d = g.dom
    free = free_ba_object(d)
    piece = {}
    for j in d.ji:
        below = g.images[d.lower_cover(j)]
        piece[d[j]] = int(b.meet_table[g.images[j], complement(b, below)])
    images = tuple(b.join_idx(piece[j] for j in s) for s in free.elements)
    return JslMorphism(free, b, images)


def free_ba_mor(f: JslMorphism) -> JslMorphism:
    """``F_¬ f = extend(η ∘ f)``."""
    tgt = free_ba_object(f.cod)
    unit = JslMorphism(f.cod, tgt, _ji_unit(f.cod, tgt))
    return extend_free_ba(compose(f, unit), tgt)


def counit_ba(b: Jsl) -> JslMorphism:
    """``ε_B : P(At B) → B``, ``S ↦ ⋁S``."""
    _require_boolean(b)
    free = free_ba_object(b)
    return JslMorphism(free, b, tuple(b.join_idx(b.index(a) for a in s) for s in free.elements))


def free_ba(d: Jsl) -> Adjunction:
    """
    ``F_¬ D = P(J(D))``.

    Raises:
        NotDistributiveError: *d* is not distributive.
    """
    free = free_ba_object(d)
    unit = JslMorphism(d, free, _ji_unit(d, free))
    eps = counit_ba(free)
    first = _then(free_ba_mor(unit).images, eps.images)
    second = _then(_ji_unit(free, eps.dom), eps.images)
    logger.debug("free boolean algebra on %d elements has %d elements", len(d), len(free))
    return Adjunction("free boolean algebra", d, free, unit, eps, first, second)


# ---------------------------------------------------------------------------
# lattice morphisms
# ---------------------------------------------------------------------------

def is_lattice_morphism(f: JslMorphism) -> bool:
    """Whether *f* also preserves ⊤ and binary meets."""
    d, e = f.dom, f.cod
    if f.images[d.top_idx] != e.top_idx:
        return False
    arr = f.array
    return bool(np.array_equal(arr[d.meet_table], e.meet_table[arr[:, None], arr[None, :]]))


def lattice_morphisms(d: Jsl, e: Jsl) -> List[JslMorphism]:
    """Bounded-lattice morphisms ``d → e``, filtered from the semilattice hom-set."""
    return [f for f in enumerate_morphisms(d, e) if is_lattice_morphism(f)]
