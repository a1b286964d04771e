from __future__ import annotations
"""
The tensor product ``Q ⊗ R`` as the semilattice of bi-ideals, with its
universal bimorphism.

Bimorphisms are passed around as a mapping ``(a, b) ↦ s`` over names, or
any callable ``beta(a, b)``.
"""

import logging
from functools import lru_cache
from typing import Callable, Dict, Hashable, Mapping, Optional, Tuple, Union

import numpy as np

from depjsl.errors import CarrierMismatchError, NotBilinearError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import Poset
from depjsl.jsl.morphism import JslMorphism
from depjsl.jsl.semilattice import Jsl, chain
from depjsl.tensor.bi_ideal import BiIdeal, beta, bi_ideal_generated, enumerate_bi_ideals

__all__ = [
    "tensor",
    "tensor_index",
    "canonical_bimorphism",
    "is_bilinear",
    "bilinear_violation",
    "extend_bimorphism",
    "extend_on_irreducibles",
    "bimorphism_of",
    "tensor_mor",
    "tensor_swap",
    "tensor_unit",
]

logger = logging.getLogger(__name__)

Bimorphism = Union[Mapping[Tuple[Hashable, Hashable], Hashable], Callable[[Hashable, Hashable], Hashable]]


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def _table(b: Bimorphism, q: Jsl, r: Jsl, s: Jsl) -> np.ndarray:
    """``T[a, b]`` = index in *s* of ``b(q[a], r[b])``."""
    get = b.__getitem__ if isinstance(b, Mapping) else None
    out = np.zeros((len(q), len(r)), dtype=np.int64)
    for a in range(len(q)):
        for c in range(len(r)):
            v = get((q[a], r[c])) if get is not None else b(q[a], r[c])
            out[a, c] = s.index(v)
    return out


def _linear_violation(t: np.ndarray, q: Jsl, s: Jsl) -> Optional[Tuple[int, ...]]:
    # each column of t must be a morphism q → s
    bad = np.flatnonzero(t[q.bot, :] != s.bot)
    if len(bad):
        return (q.bot, q.bot, int(bad[0]))
    lhs = t[q.join_table]                                # [a1, a2, c]
    rhs = s.join_table[t[:, None, :], t[None, :, :]]
    diff = np.argwhere(lhs != rhs)
    if len(diff):
        return tuple(int(v) for v in diff[0])
    return None


def _tensor_factors(t: Jsl) -> Tuple[Jsl, Jsl]:
    sample = t[0]
    if not isinstance(sample, BiIdeal):
        raise CarrierMismatchError("semilattice is not a tensor product")
    return sample.left, sample.right


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@lru_cache(maxsize=128)
def tensor(q: Jsl, r: Jsl) -> Jsl:
    """
    ``Q ⊗ R``: all bi-ideals of ``q × r`` under inclusion.

    Elements are ``BiIdeal`` values; the join of two of them is the
    bi-ideal generated by their union.
    """
    ideals = enumerate_bi_ideals(q, r)
    flat = np.array([b.matrix.ravel() for b in ideals], dtype=bool).reshape(len(ideals), len(q) * len(r))
    leq = (flat.astype(np.int64) @ (~flat).T.astype(np.int64)) == 0
    return Jsl(Poset(FinSet(tuple(ideals)), leq))


def tensor_index(t: Jsl) -> Dict[BiIdeal, int]:
    return {b: i for i, b in enumerate(t.elements)}


def canonical_bimorphism(q: Jsl, r: Jsl) -> Dict[Tuple[Hashable, Hashable], BiIdeal]:
    """``β_{Q,R}(a, b) = {⊥}×R ∪ Q×{⊥} ∪ ↓a × ↓b``, the bi-ideal generated by ``(a, b)``."""
    return {(a, b): beta(q, r, a, b) for a in q.elements for b in r.elements}


def bilinear_violation(b: Bimorphism, q: Jsl, r: Jsl, s: Jsl) -> Optional[Tuple[str, Tuple[Hashable, ...]]]:
    """
    First failure of bilinearity, or ``None``.

    Returns ``("left", (a1, a2, b))`` when ``a ↦ β(a, b)`` fails on the join
    of ``a1`` and ``a2`` (``a1 = a2 = ⊥`` for the bottom rule), symmetrically
    ``("right", (a, b1, b2))``.
    """
    t = _table(b, q, r, s)
    hit = _linear_violation(t, q, s)
    if hit is not None:
        a1, a2, c = hit
        return "left", (q[a1], q[a2], r[c])
    hit = _linear_violation(t.T.copy(), r, s)
    if hit is not None:
        c1, c2, a = hit
        return "right", (q[a], r[c1], r[c2])
    return None


def is_bilinear(b: Bimorphism, q: Jsl, r: Jsl, s: Jsl) -> bool:
    return bilinear_violation(b, q, r, s) is None


def extend_bimorphism(b: Bimorphism, q: Jsl, r: Jsl, s: Jsl) -> JslMorphism:
    """
    The unique morphism ``f : Q ⊗ R → S`` with ``f ∘ β = b``.

    ``f(B) = ⋁{ b(x, y) : (x, y) ∈ B }``.

    Raises:
        NotBilinearError: *b* is not bilinear; the witness is the failing triple.
    """
    wit = bilinear_violation(b, q, r, s)
    if wit is not None:
        side, names = wit
        raise NotBilinearError(f"not bilinear in the {side} argument at {names!r}", witness=names)
    t = _table(b, q, r, s)
    tq = tensor(q, r)
    images = tuple(s.join_idx(t[ideal.matrix]) for ideal in tq.elements)
    return JslMorphism(tq, s, images)


def extend_on_irreducibles(b: Bimorphism, q: Jsl, r: Jsl, s: Jsl) -> JslMorphism:
    """Same extension read off join-irreducible pairs only: ``⋁{ b(j1, j2) : (j1, j2) ∈ B ∩ J(Q)×J(R) }``."""
    t = _table(b, q, r, s)
    keep = np.zeros((len(q), len(r)), dtype=bool)
    keep[np.ix_(q.ji, r.ji)] = True
    tq = tensor(q, r)
    images = tuple(s.join_idx(t[ideal.matrix & keep]) for ideal in tq.elements)
    return JslMorphism(tq, s, images)


def bimorphism_of(g: JslMorphism) -> Dict[Tuple[Hashable, Hashable], Hashable]:
    """``β_g = g ∘ β`` for a morphism ``g`` out of a tensor product."""
    q, r = _tensor_factors(g.dom)
    return {(a, b): g(beta(q, r, a, b)) for a in q.elements for b in r.elements}


def tensor_mor(f: JslMorphism, g: JslMorphism) -> JslMorphism:
    """``f ⊗ g``: ``B ↦`` the bi-ideal generated by ``{ (f a, g b) : (a, b) ∈ B }``."""
    src, tgt = tensor(f.dom, g.dom), tensor(f.cod, g.cod)
    idx = tensor_index(tgt)
    images = []
    for ideal in src.elements:
        m = np.zeros((len(f.cod), len(g.cod)), dtype=bool)
        for a, c in np.argwhere(ideal.matrix):
            m[f.images[a], g.images[c]] = True
        images.append(idx[bi_ideal_generated(m, f.cod, g.cod)])
    return JslMorphism(src, tgt, tuple(images))


def tensor_swap(q: Jsl, r: Jsl) -> JslMorphism:
    """``Q ⊗ R ≅ R ⊗ Q`` by transposing bi-ideals."""
    src, tgt = tensor(q, r), tensor(r, q)
    idx = tensor_index(tgt)
    return JslMorphism(src, tgt, tuple(idx[b.transpose()] for b in src.elements))


def tensor_unit(q: Jsl) -> JslMorphism:
    """``Q ≅ 𝟚 ⊗ Q``, ``a ↦ β(⊤, a)``."""
    two = chain(2)
    tgt = tensor(two, q)
    idx = tensor_index(tgt)
    return JslMorphism(q, tgt, tuple(idx[beta(two, q, two.top, a)] for a in q.elements))
