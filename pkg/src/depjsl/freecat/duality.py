from __future__ import annotations
"""
Birkhoff duality between finite posets and finite distributive lattices,
and its restriction to finite sets and finite boolean algebras.
"""

import logging
from typing import Dict, Hashable

import numpy as np

from depjsl.errors import KindMismatchError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import MonotoneMap, Poset
from depjsl.jsl.morphism import JslMorphism, compose
from depjsl.jsl.semilattice import Jsl, powerset, subset_lattice
from depjsl.utils.config import Config, guard

__all__ = [
    "birkhoff_up",
    "birkhoff_up_mor",
    "birkhoff_ji",
    "birkhoff_ji_mor",
    "birkhoff_alpha",
    "birkhoff_beta",
    "alpha_natural",
    "beta_natural",
    "boolean_atoms",
    "powerset_of_atoms",
    "atoms_of_powerset",
]

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# the two functors
# ---------------------------------------------------------------------------

def birkhoff_up(p: Poset) -> Jsl:
    """``Up(P)``: up-sets under union and intersection; elements are frozensets."""
    guard("up-set enumeration", len(p), Config.MAX_SUBSET_BITS)
    return subset_lattice(p.carrier, p.upset_masks)


def birkhoff_up_mor(f: MonotoneMap) -> JslMorphism:
    """``Up(f) : Up(P') → Up(P)``, ``U ↦ f⁻¹(U)``."""
    src, tgt = birkhoff_up(f.cod), birkhoff_up(f.dom)
    dom = f.dom.carrier
    images = []
    for u in src.elements:
        pre = frozenset(dom[i] for i, y in enumerate(f.images) if f.cod.carrier[y] in u)
        images.append(tgt.index(pre))
    return JslMorphism(src, tgt, tuple(images))


def birkhoff_ji(d: Jsl) -> Poset:
    """``(J(D), ≥)``: the join-irreducibles in reverse order."""
    d.require_distributive()
    ji = list(d.ji)
    return Poset(d.ji_set, d.leq[np.ix_(ji, ji)].T)


def birkhoff_ji_mor(h: JslMorphism) -> MonotoneMap:
    """
    ``J(h) : J(D') → J(D)`` for a lattice morphism ``h : D → D'``.

    ``j' ↦ ⋀ h⁻¹(↑j')``; the preimage is a prime filter, so its meet is
    join-irreducible.
    """
    d, e = h.dom, h.cod
    src, tgt = birkhoff_ji(e), birkhoff_ji(d)
    images = []
    for j in e.ji:
        filt = [x for x in range(len(d)) if e.leq[j, h.images[x]]]
        images.append(tgt.carrier.index(d[d.meet_idx(filt)]))
    return MonotoneMap(src, tgt, tuple(images))


# ---------------------------------------------------------------------------
# the natural isomorphisms
# ---------------------------------------------------------------------------

def birkhoff_alpha(p: Poset) -> MonotoneMap:
    """``α_P : P → J(Up P)``, ``p ↦ ↑p``."""
    jp = birkhoff_ji(birkhoff_up(p))
    return MonotoneMap(p, jp, tuple(jp.carrier.index(p.carrier.subset(p.up_mask(i))) for i in range(len(p))))


def birkhoff_beta(d: Jsl) -> JslMorphism:
    """``β_D : D → Up(J D)``, ``d ↦ J(D) ∩ ↓d``."""
    up = birkhoff_up(birkhoff_ji(d))
    images = tuple(up.index(frozenset(d[j] for j in d.ji if d.leq[j, x])) for x in range(len(d)))
    return JslMorphism(d, up, images)


def alpha_natural(f: MonotoneMap) -> bool:
    """``J(Up f) ∘ α_P = α_{P'} ∘ f``."""
    left = birkhoff_ji_mor(birkhoff_up_mor(f))
    a_src, a_tgt = birkhoff_alpha(f.dom), birkhoff_alpha(f.cod)
    return tuple(left.images[i] for i in a_src.images) == tuple(a_tgt.images[i] for i in f.images)


def beta_natural(h: JslMorphism) -> bool:
    """``Up(J h) ∘ β_D = β_{D'} ∘ h``."""
    left = compose(birkhoff_beta(h.dom), birkhoff_up_mor(birkhoff_ji_mor(h)))
    right = compose(h, birkhoff_beta(h.cod))
    return left == right


# ---------------------------------------------------------------------------
# finite boolean duality
# ---------------------------------------------------------------------------

def boolean_atoms(b: Jsl) -> FinSet:
    """``At(B)``: the elements covering ⊥."""
    if not b.is_boolean():
        raise KindMismatchError(f"semilattice of size {len(b)} is not boolean")
    return b.ji_set


def powerset_of_atoms(b: Jsl) -> JslMorphism:
    """The isomorphism ``B → P(At B)``, ``x ↦`` the atoms below ``x``."""
    atoms = boolean_atoms(b)
    p = powerset(atoms)
    images = tuple(p.index(frozenset(b[a] for a in b.ji if b.leq[a, x])) for x in range(len(b)))
    iso = JslMorphism(b, p, images)
    logger.debug("boolean algebra of size %d has %d atoms", len(b), len(atoms))
    return iso


def atoms_of_powerset(z: FinSet) -> Dict[Hashable, frozenset]:
    """``X ≅ At(P X)``, ``x ↦ {x}``."""
    p = powerset(z)
    atoms = boolean_atoms(p)
    return {x: frozenset((x,)) for x in z if frozenset((x,)) in atoms}
