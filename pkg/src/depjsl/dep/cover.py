from __future__ import annotations
"""
Witness pairs and their closure.

A witness pair ``(L, Rr)`` for ``G → H`` satisfies ``L ; H = G ; Rr˘``; that
common relation is a Dep morphism, and closing the pair yields its
components. Chains of pairs can be composed componentwise and closed once
at the end.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import List, Tuple

import numpy as np

from depjsl.errors import CarrierMismatchError, InvalidWitnessError
from depjsl.finrel.relation import Rel
from depjsl.dep.morphism import DepMorphism
from depjsl.utils.config import Config, guard

__all__ = [
    "WitnessPair",
    "cover_close",
    "cover_compose",
    "witness_options",
    "witness_union",
    "enumerate_witness_pairs",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessPair:
    """``left ⊆ Gs × Hs`` and ``right ⊆ Ht × Gt``."""

    left: Rel
    right: Rel

    def relation(self, dom: Rel, cod: Rel) -> Rel:
        """``left ; cod``, after checking it equals ``dom ; right˘``."""
        if self.left.source != dom.source or self.left.target != cod.source:
            raise CarrierMismatchError("left witness is not typed dom.source × cod.source")
        if self.right.source != cod.target or self.right.target != dom.target:
            raise CarrierMismatchError("right witness is not typed cod.target × dom.target")
        via_left = self.left.compose(cod)
        via_right = dom.compose(self.right.converse())
        if via_left != via_right:
            i, j = (int(v) for v in np.argwhere(via_left.matrix ^ via_right.matrix)[0])
            pair = (dom.source[i], cod.target[j])
            raise InvalidWitnessError(
                f"witnesses disagree at {pair!r}: left ; cod differs from dom ; right˘", witness=pair
            )
        return via_left


def cover_close(w: WitnessPair, dom: Rel, cod: Rel) -> Tuple[Rel, Rel]:
    """The closure of *w*: the components of the Dep morphism it witnesses."""
    m = DepMorphism(dom, cod, w.relation(dom, cod))
    return m.minus, m.plus


def cover_compose(w1: WitnessPair, w2: WitnessPair) -> WitnessPair:
    """``(L₁ ; L₂, R₂ ; R₁)``."""
    return WitnessPair(w1.left.compose(w2.left), w2.right.compose(w1.right))


def witness_options(r: DepMorphism) -> Tuple[List[List[int]], List[List[int]]]:
    """
    Per-row choices of every witness pair of *r*.

    Returns:
        ``(left, right)``: ``left[g_s]`` lists the masks ``L ⊆ Hs`` with
        ``H[L] = R[g_s]``; ``right[h_t]`` lists the masks ``K ⊆ Gt`` with
        ``Ğ[K] = Ř[h_t]``.
    """
    g, h = r.dom, r.cod
    guard("witness subsets", max(len(h.source), len(g.target)), Config.MAX_SUBSET_BITS)
    g_conv = g.converse()
    by_image_left: dict = {}
    for mask in range(1 << len(h.source)):
        by_image_left.setdefault(h.up_mask(mask), []).append(mask)
    by_image_right: dict = {}
    for mask in range(1 << len(g.target)):
        by_image_right.setdefault(g_conv.up_mask(mask), []).append(mask)
    left = [by_image_left.get(row, []) for row in r.rel.rows]
    right = [by_image_right.get(col, []) for col in r.rel.cols]
    return left, right


def witness_union(r: DepMorphism) -> Tuple[Rel, Rel]:
    """The union of every witness pair of *r*, by row-wise enumeration."""
    left, right = witness_options(r)
    lrows = [_or_all(opts) for opts in left]
    rrows = [_or_all(opts) for opts in right]
    return (
        Rel.from_masks(r.dom.source, r.cod.source, lrows),
        Rel.from_masks(r.cod.target, r.dom.target, rrows),
    )


def _or_all(masks: List[int]) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def enumerate_witness_pairs(r: DepMorphism) -> List[WitnessPair]:
    """Every witness pair of *r*; guarded by ``MAX_ENUMERATION``."""
    left, right = witness_options(r)
    total = 1
    for opts in left + right:
        total *= len(opts)
    guard("witness pairs", total, Config.MAX_ENUMERATION)
    g, h = r.dom, r.cod
    lefts = [Rel.from_masks(g.source, h.source, rows) for rows in product(*left)]
    rights = [Rel.from_masks(h.target, g.target, rows) for rows in product(*right)]
    logger.debug("%d witness pairs", len(lefts) * len(rights))
    return [WitnessPair(a, b) for a in lefts for b in rights]
