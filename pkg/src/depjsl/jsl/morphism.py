from __future__ import annotations
"""
Join-semilattice morphisms and their adjoints.

A morphism stores the image index of every domain element. Composition is
diagrammatic: ``compose(f, g)`` applies ``f`` first.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterator, List, Mapping, Optional, Tuple

import numpy as np

from depjsl.errors import CarrierMismatchError, NotAMorphismError
from depjsl.jsl.semilattice import Jsl

__all__ = [
    "JslMorphism",
    "morphism_new",
    "adjoint",
    "compose",
    "identity",
    "constant_bottom",
    "is_mono",
    "is_epi",
    "is_iso",
    "morphism_violation",
    "jsl_isomorphism",
    "jsl_isomorphisms",
]

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def morphism_violation(dom: Jsl, cod: Jsl, images: np.ndarray) -> Optional[Tuple[int, int] | Tuple[int]]:
    """
    First reason *images* is not a morphism, as domain indices.

    ``(i,)`` means the bottom is not preserved; ``(a, b)`` names a pair whose
    join is not preserved. ``None`` when *images* is a morphism.
    """
    if len(dom) and images[dom.bot] != cod.bot:
        return (dom.bot,)
    lhs = images[dom.join_table]
    rhs = cod.join_table[images[:, None], images[None, :]]
    bad = lhs != rhs
    if bad.any():
        a, b = (int(v) for v in np.argwhere(bad)[0])
        return a, b
    return None


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class JslMorphism:
    """
    A ⊥- and ∨-preserving function ``dom → cod``.

    Attributes:
        dom: domain semilattice
        cod: codomain semilattice
        images: ``images[i]`` is the codomain index of ``dom[i]``
    """

    dom: Jsl
    cod: Jsl
    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        im = tuple(int(i) for i in self.images)
        if len(im) != len(self.dom):
            raise CarrierMismatchError("map is not total on its domain")
        object.__setattr__(self, "images", im)
        wit = morphism_violation(self.dom, self.cod, self.array)
        if wit is not None:
            names = tuple(self.dom[i] for i in wit)
            if len(wit) == 1:
                raise NotAMorphismError(f"bottom {names[0]!r} is not sent to bottom", witness=names)
            raise NotAMorphismError(
                f"not a morphism: join of {names[0]!r} and {names[1]!r} is not preserved",
                witness=names,
            )

    @classmethod
    def from_map(cls, dom: Jsl, cod: Jsl, mapping: Mapping[Hashable, Hashable]) -> "JslMorphism":
        return cls(dom, cod, tuple(cod.index(mapping[x]) for x in dom.elements))

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.images, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    # -- protocol -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JslMorphism):
            return NotImplemented
        return self.images == other.images and self.dom == other.dom and self.cod == other.cod

    def __hash__(self) -> int:
        return hash(self.images)

    def __call__(self, x: Hashable) -> Hashable:
        return self.cod[self.images[self.dom.index(x)]]

    def __repr__(self) -> str:
        pairs = ", ".join(f"{self.dom[i]!r}↦{self.cod[j]!r}" for i, j in enumerate(self.images))
        return f"JslMorphism({pairs})"

    def as_dict(self) -> dict:
        return {self.dom[i]: self.cod[j] for i, j in enumerate(self.images)}

    # -- structure ------------------------------------------------------------

    @cached_property
    def _adjoint(self) -> "JslMorphism":
        # f_*(r) = ⋁{ q : f(q) ≤ r }
        below = self.cod.leq[self.array, :]
        images = tuple(self.dom.join_mask(_column_mask(below, r)) for r in range(len(self.cod)))
        return JslMorphism(self.cod.op(), self.dom.op(), images)

    def adjoint(self) -> "JslMorphism":
        """The adjoint ``f_* : cod^op → dom^op``."""
        return self._adjoint

    def leq(self, other: "JslMorphism") -> bool:
        """Pointwise order."""
        return bool(self.cod.leq[self.array, other.array].all())

    def join(self, other: "JslMorphism") -> "JslMorphism":
        """Pointwise join."""
        return JslMorphism(self.dom, self.cod, tuple(self.cod.join_table[self.array, other.array]))

    def image_mask(self) -> int:
        return sum(1 << j for j in set(self.images))

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def is_surjective(self) -> bool:
        return len(set(self.images)) == len(self.cod)

    def inverse(self) -> "JslMorphism":
        if not (self.is_injective() and self.is_surjective()):
            raise NotAMorphismError("morphism is not bijective")
        inv = [0] * len(self.cod)
        for i, j in enumerate(self.images):
            inv[j] = i
        return JslMorphism(self.cod, self.dom, tuple(inv))


def _column_mask(m: np.ndarray, j: int) -> int:
    return sum(1 << int(i) for i in np.flatnonzero(m[:, j]))


def morphism_new(dom: Jsl, cod: Jsl, mapping: Mapping[Hashable, Hashable]) -> JslMorphism:
    return JslMorphism.from_map(dom, cod, mapping)


def adjoint(f: JslMorphism) -> JslMorphism:
    return f.adjoint()


def compose(f: JslMorphism, g: JslMorphism) -> JslMorphism:
    """``g ∘ f``."""
    if f.cod != g.dom:
        raise CarrierMismatchError("composite is undefined: codomain and domain differ")
    return JslMorphism(f.dom, g.cod, tuple(g.array[f.array]))


def identity(q: Jsl) -> JslMorphism:
    return JslMorphism(q, q, tuple(range(len(q))))


def constant_bottom(q: Jsl, r: Jsl) -> JslMorphism:
    return JslMorphism(q, r, (r.bot,) * len(q))


def is_mono(f: JslMorphism) -> bool:
    return f.is_injective()


def is_epi(f: JslMorphism) -> bool:
    """Surjective, decided by ``J(cod) ⊆ f[J(dom)]``."""
    hit = {f.images[j] for j in f.dom.ji}
    return set(f.cod.ji) <= hit


def is_iso(f: JslMorphism) -> bool:
    return f.is_injective() and f.is_surjective()


def jsl_isomorphisms(q: Jsl, r: Jsl) -> Iterator[JslMorphism]:
    """Every order-isomorphism ``q → r`` (backtracking along a linear extension)."""
    n = len(q)
    if n != len(r) or len(q.ji) != len(r.ji) or len(q.mi) != len(r.mi):
        return

    def signature(s: Jsl) -> List[Tuple[int, int, bool, bool]]:
        down = s.leq.sum(axis=0)
        up = s.leq.sum(axis=1)
        ji, mi = set(s.ji), set(s.mi)
        return [(int(down[i]), int(up[i]), i in ji, i in mi) for i in range(len(s))]

    sq, sr = signature(q), signature(r)
    if sorted(sq) != sorted(sr):
        return
    order = q.order.linear_extension()
    images: List[int] = [-1] * n
    used = [False] * n

    def extend(k: int) -> Iterator[Tuple[int, ...]]:
        if k == n:
            yield tuple(images)
            return
        i = order[k]
        for y in range(n):
            if used[y] or sr[y] != sq[i]:
                continue
            if any(
                q.leq[j, i] != r.leq[images[j], y] or q.leq[i, j] != r.leq[y, images[j]]
                for j in order[:k]
            ):
                continue
            images[i] = y
            used[y] = True
            yield from extend(k + 1)
            used[y] = False
        images[i] = -1

    for found in extend(0):
        yield JslMorphism(q, r, found)


def jsl_isomorphism(q: Jsl, r: Jsl) -> Optional[JslMorphism]:
    """An order-isomorphism ``q → r`` if one exists."""
    return next(jsl_isomorphisms(q, r), None)
