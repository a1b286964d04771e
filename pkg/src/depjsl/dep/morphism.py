from __future__ import annotations
"""
The category Dep.

Objects are relations ``G ⊆ Gs × Gt``. A morphism ``G → H`` is a relation
``R ⊆ Gs × Ht`` whose rows are open in ``H`` and whose columns are open in
``Ğ``; equivalently ``R = R₋ ; H = G ; R₊˘`` for its components. Composition
is ``R₋ ; S`` and does not depend on the witness chosen.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import List, Optional, Tuple

import numpy as np

from depjsl.errors import CarrierMismatchError, NotDepMorphismError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import Poset
from depjsl.finrel.relation import Rel, bool_product, subset_matrix
from depjsl.jsl.semilattice import Jsl
from depjsl.utils.config import Config, guard

__all__ = [
    "DepMorphism",
    "dep_validate",
    "dep_violation",
    "components",
    "dep_compose",
    "dep_dual",
    "dep_identity",
    "dep_empty",
    "is_dep_mono",
    "is_dep_epi",
    "is_dep_mono_by_open",
    "is_dep_epi_by_open",
    "dep_inverse",
    "dep_hom",
    "dep_hom_jsl",
]

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def _minus(rel: Rel, cod: Rel) -> np.ndarray:
    # minus[g_s, h_s] iff H[h_s] ⊆ R[g_s]
    return subset_matrix(cod.matrix, rel.matrix).T


def _plus(rel: Rel, dom: Rel) -> np.ndarray:
    # plus[h_t, g_t] iff Ğ[g_t] ⊆ Ř[h_t]
    return subset_matrix(dom.matrix.T, rel.matrix.T).T


def _check_types(rel: Rel, dom: Rel, cod: Rel) -> None:
    if rel.source != dom.source:
        raise CarrierMismatchError("relation source differs from the domain's source")
    if rel.target != cod.target:
        raise CarrierMismatchError("relation target differs from the codomain's target")


def dep_violation(rel: Rel, dom: Rel, cod: Rel) -> Optional[Tuple[str, int]]:
    """
    First obstruction to *rel* being a morphism ``dom → cod``.

    ``("row", g_s)`` when the row of ``g_s`` is not open in ``cod``;
    ``("col", h_t)`` when the column of ``h_t`` is not open in ``dom˘``.
    """
    rows_ok = bool_product(_minus(rel, cod), cod.matrix) == rel.matrix
    bad_rows = np.flatnonzero(~rows_ok.all(axis=1))
    if len(bad_rows):
        return "row", int(bad_rows[0])
    cols_ok = bool_product(dom.matrix, _plus(rel, dom).T) == rel.matrix
    bad_cols = np.flatnonzero(~cols_ok.all(axis=0))
    if len(bad_cols):
        return "col", int(bad_cols[0])
    return None


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DepMorphism:
    """
    A Dep-morphism ``dom → cod`` with its maximum witnesses.

    Attributes:
        dom: ``G ⊆ Gs × Gt``
        cod: ``H ⊆ Hs × Ht``
        rel: ``R ⊆ Gs × Ht``
        minus: ``R₋ ⊆ Gs × Hs``
        plus: ``R₊ ⊆ Ht × Gt``
    """

    dom: Rel
    cod: Rel
    rel: Rel
    minus: Rel = field(init=False, repr=False)
    plus: Rel = field(init=False, repr=False)

    def __post_init__(self) -> None:
        _check_types(self.rel, self.dom, self.cod)
        wit = dep_violation(self.rel, self.dom, self.cod)
        if wit is not None:
            kind, i = wit
            if kind == "row":
                x = frozenset({self.dom.source[i]})
                detail = f"row of {self.dom.source[i]!r} is not open in the codomain"
            else:
                x = self.dom.source.subset(self.dom.source.full_mask & ~self.rel.cols[i])
                detail = f"column of {self.cod.target[i]!r} is not open in the converse domain"
            raise NotDepMorphismError(f"not a Dep morphism: {detail}", witness=x)
        object.__setattr__(self, "minus", Rel(self.dom.source, self.cod.source, _minus(self.rel, self.cod)))
        object.__setattr__(self, "plus", Rel(self.cod.target, self.dom.target, _plus(self.rel, self.dom)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DepMorphism):
            return NotImplemented
        return self.rel == other.rel and self.dom == other.dom and self.cod == other.cod

    def __hash__(self) -> int:
        return hash(self.rel)

    def __repr__(self) -> str:
        return f"DepMorphism({self.rel!r})"

    def __len__(self) -> int:
        return len(self.rel)

    @cached_property
    def _plus_converse(self) -> Rel:
        return self.plus.converse()

    def open_image(self, y: int) -> int:
        """``Open R`` on an open set of ``dom``, as a mask over ``cod.target``."""
        return self._plus_converse.up_mask(y)

    def union(self, other: "DepMorphism") -> "DepMorphism":
        return DepMorphism(self.dom, self.cod, self.rel.union(other.rel))

    def issubset(self, other: "DepMorphism") -> bool:
        return self.rel.issubset(other.rel)


def dep_validate(rel: Rel, dom: Rel, cod: Rel) -> DepMorphism:
    return DepMorphism(dom, cod, rel)


def components(rel: Rel, dom: Rel, cod: Rel) -> Tuple[Rel, Rel]:
    """The maximum witnesses ``(R₋, R₊)``."""
    m = DepMorphism(dom, cod, rel)
    return m.minus, m.plus


def dep_identity(g: Rel) -> DepMorphism:
    return DepMorphism(g, g, g)


def dep_empty(g: Rel, h: Rel) -> DepMorphism:
    return DepMorphism(g, h, Rel.empty(g.source, h.target))


def dep_compose(r: DepMorphism, s: DepMorphism) -> DepMorphism:
    """``r`` then ``s``: the relation ``R₋ ; S``."""
    if r.cod != s.dom:
        raise CarrierMismatchError("composite is undefined: codomain and domain differ")
    return DepMorphism(r.dom, s.cod, r.minus.compose(s.rel))


def dep_dual(r: DepMorphism) -> DepMorphism:
    """``Rˇ : H̆ → Ğ``; the components swap."""
    return DepMorphism(r.cod.converse(), r.dom.converse(), r.rel.converse())


def is_dep_mono(r: DepMorphism) -> bool:
    """``cl_R = cl_G``, compared through the closed-set families."""
    return r.rel.closed_masks == r.dom.closed_masks


def is_dep_epi(r: DepMorphism) -> bool:
    """``in_R = in_H``, compared through the open-set families."""
    return r.rel.open_masks == r.cod.open_masks


def is_dep_mono_by_open(r: DepMorphism) -> bool:
    opens = r.dom.open_masks
    return len({r.open_image(y) for y in opens}) == len(opens)


def is_dep_epi_by_open(r: DepMorphism) -> bool:
    return {r.open_image(y) for y in r.dom.open_masks} == set(r.cod.open_masks)


def dep_inverse(r: DepMorphism) -> Optional[DepMorphism]:
    """
    The inverse of *r*, or ``None`` when ``Open r`` is not bijective.

    ``S(h_s, g_t)`` iff ``g_t ∈ (Open r)⁻¹(H[h_s])``.
    """
    g, h = r.dom, r.cod
    forward = {y: r.open_image(y) for y in g.open_masks}
    if len(set(forward.values())) != len(forward) or set(forward.values()) != set(h.open_masks):
        return None
    back = {v: k for k, v in forward.items()}
    s = Rel.from_masks(h.source, g.target, [back[row] for row in h.rows])
    inv = DepMorphism(h, g, s)
    if dep_compose(r, inv).rel != g or dep_compose(inv, r).rel != h:
        return None
    return inv


def dep_hom(g: Rel, h: Rel) -> List[DepMorphism]:
    """
    Every Dep morphism ``g → h``.

    Rows range over the open sets of ``h``; the columns are then checked
    against the open sets of ``ğ``.
    """
    opens = h.open_masks
    guard("Dep hom-set candidates", len(opens) ** len(g.source), Config.MAX_ENUMERATION)
    g_conv_opens = set(g.converse().open_masks)
    out = []
    for rows in product(opens, repeat=len(g.source)):
        rel = Rel.from_masks(g.source, h.target, rows)
        if all(c in g_conv_opens for c in rel.cols):
            out.append(DepMorphism(g, h, rel))
    logger.debug("Dep hom-set of size %d", len(out))
    return out


def dep_hom_jsl(g: Rel, h: Rel) -> Jsl:
    """The hom-set under union and ``∅``; elements are ``DepMorphism`` values."""
    maps = dep_hom(g, h)
    leq = np.array([[a.issubset(b) for b in maps] for a in maps], dtype=bool).reshape(len(maps), len(maps))
    return Jsl(Poset(FinSet(tuple(maps)), leq))
