from __future__ import annotations
"""
The functors Open, Pirr and Nleq between Dep and finite join-semilattices.

``Open G`` is the lattice of open sets of ``G`` (subsets of ``Gt``, kept as
frozensets and never relabeled). ``Pirr Q`` is ``≰`` restricted to
``J(Q) × M(Q)``; ``Nleq Q`` is ``≰`` on the whole carrier.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from depjsl.errors import CarrierMismatchError
from depjsl.finrel.relation import Rel
from depjsl.dep.morphism import DepMorphism, dep_compose, dep_identity
from depjsl.jsl.morphism import JslMorphism, compose, identity
from depjsl.jsl.semilattice import Jsl, subset_lattice

__all__ = [
    "Iso",
    "open_obj",
    "open_mor",
    "open_index",
    "pirr_obj",
    "pirr_mor",
    "nleq_obj",
    "nleq_mor",
    "require_open_domain",
]

Morphism = Union[JslMorphism, DepMorphism]


@dataclass(frozen=True)
class Iso:
    """A pair of mutually inverse morphisms."""

    forward: Morphism
    backward: Morphism

    def verify(self) -> bool:
        if isinstance(self.forward, JslMorphism):
            return (
                compose(self.forward, self.backward) == identity(self.forward.dom)
                and compose(self.backward, self.forward) == identity(self.forward.cod)
            )
        return (
            dep_compose(self.forward, self.backward) == dep_identity(self.forward.dom)
            and dep_compose(self.backward, self.forward) == dep_identity(self.forward.cod)
        )


@lru_cache(maxsize=512)
def open_obj(g: Rel) -> Jsl:
    """``Open G``: the open sets of *g* under inclusion."""
    return subset_lattice(g.target, g.open_masks)


def open_index(g: Rel) -> dict:
    """Mask of each open set → its index in ``open_obj(g)``."""
    return {m: i for i, m in enumerate(g.open_masks)}


def open_mor(r: DepMorphism) -> JslMorphism:
    """``Open R``: ``Y ↦ R₊˘[Y]``."""
    idx = open_index(r.cod)
    images = tuple(idx[r.open_image(y)] for y in r.dom.open_masks)
    return JslMorphism(open_obj(r.dom), open_obj(r.cod), images)


@lru_cache(maxsize=512)
def pirr_obj(q: Jsl) -> Rel:
    """``≰`` restricted to ``J(Q) × M(Q)``."""
    return Rel(q.ji_set, q.mi_set, ~q.leq[np.ix_(q.ji, q.mi)])


def pirr_mor(f: JslMorphism) -> DepMorphism:
    """``Pirr f = { (j, m) : f(j) ≰ m }``."""
    q, r = f.dom, f.cod
    rel = Rel(q.ji_set, r.mi_set, ~r.leq[np.ix_(f.array[list(q.ji)], r.mi)])
    return DepMorphism(pirr_obj(q), pirr_obj(r), rel)


def nleq_obj(q: Jsl) -> Rel:
    return Rel(q.carrier, q.carrier, ~q.leq)


def nleq_mor(f: JslMorphism) -> DepMorphism:
    """``Nleq f = { (x, y) : f(x) ≰ y }``."""
    rel = Rel(f.dom.carrier, f.cod.carrier, ~f.cod.leq[f.array, :])
    return DepMorphism(nleq_obj(f.dom), nleq_obj(f.cod), rel)


def require_open_domain(f: JslMorphism, g: Rel, h: Rel) -> None:
    if f.dom != open_obj(g) or f.cod != open_obj(h):
        raise CarrierMismatchError("morphism is not typed Open g → Open h")
