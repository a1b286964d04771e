from __future__ import annotations
"""
Self-adjoint tight morphisms ``σ : Q → Q^op`` and symmetric relations on Q.

Such a σ is the join of the special morphisms ``↑^{a,b}`` over a symmetric
relation ``R`` on Q. Over ``Q^op`` a join is a meet in Q, so
``σ(x) = ⋀{ b : R(a, b), x ≰ a }``.
"""

import logging
from typing import Union

import numpy as np

from depjsl.demorgan.algebra import AlgebraKind, UnaryAlgebra
from depjsl.errors import CarrierMismatchError, NotSelfAdjointError, NotSymmetricError, NotTightError
from depjsl.finrel.relation import Rel
from depjsl.jsl.homsets import is_tight
from depjsl.jsl.morphism import JslMorphism
from depjsl.jsl.semilattice import Jsl

__all__ = [
    "self_adjoint_violation",
    "decompose_self_adjoint_tight",
    "build_self_adjoint_tight",
]

logger = logging.getLogger(__name__)


def _as_morphism(sigma: Union[UnaryAlgebra, JslMorphism]) -> JslMorphism:
    if isinstance(sigma, UnaryAlgebra):
        if sigma.kind is AlgebraKind.SAM:
            raise CarrierMismatchError("a SAM operation is typed Q^op → Q, not Q → Q^op")
        return sigma.as_join_morphism()
    if sigma.cod != sigma.dom.op():
        raise CarrierMismatchError("morphism is not typed Q → Q^op")
    return sigma


def self_adjoint_violation(f: JslMorphism):
    """First ``(a, b)`` with ``b ≤ f(a)`` but ``a ≰ f(b)``, or ``None``."""
    q = f.dom
    below = q.leq[:, f.array]                  # [b, a]: b ≤ σa
    bad = np.argwhere(below & ~below.T)
    if len(bad):
        b, a = (int(v) for v in bad[0])
        return q[a], q[b]
    return None


def decompose_self_adjoint_tight(sigma: Union[UnaryAlgebra, JslMorphism]) -> Rel:
    """
    The largest symmetric ``R ⊆ Q × Q`` with ``σ = ⋁{ ↑^{a,b} : R(a, b) }``.

    ``R(a, b)`` holds iff ``↑^{a,b} ≤ σ``, i.e. every ``x`` has ``x ≤ a`` or
    ``σ(x) ≤ b``.

    Raises:
        NotSelfAdjointError: σ differs from its adjoint.
        NotTightError: σ is not a join of special morphisms.
    """
    f = _as_morphism(sigma)
    q = f.dom
    wit = self_adjoint_violation(f)
    if wit is not None:
        raise NotSelfAdjointError(f"{wit[1]!r} ≤ σ({wit[0]!r}) but not conversely", witness=wit)
    ok, _ = is_tight(f)
    if not ok:
        raise NotTightError("σ is not tight", witness=f.as_dict())
    # w[a, b] iff no x has x ≰ a and σx ≰ b
    outside = (~q.leq).astype(np.int64)                        # [x, a]
    miss = (~q.leq[f.array, :]).astype(np.int64)               # [x, b]
    w = (outside.T @ miss) == 0
    assert np.array_equal(w, w.T), "witness relation of a self-adjoint morphism is symmetric"
    logger.debug("self-adjoint tight σ on %d elements: %d witness pairs", len(q), int(w.sum()))
    return Rel(q.carrier, q.carrier, w)


def build_self_adjoint_tight(q: Jsl, r: Rel) -> UnaryAlgebra:
    """
    ``σ = ⋁{ ↑^{a,b} : R(a, b) }`` for symmetric *r*, as a SAJ algebra on *q*.

    Raises:
        NotSymmetricError: *r* is not symmetric.
    """
    if r.source != q.carrier or r.target != q.carrier:
        raise CarrierMismatchError("relation is not on the carrier of q")
    m = r.matrix
    if not np.array_equal(m, m.T):
        a, b = (int(v) for v in np.argwhere(m & ~m.T)[0])
        pair = (q[a], q[b])
        raise NotSymmetricError(f"relation is not symmetric at {pair!r}", witness=pair)
    images = []
    for x in range(len(q)):
        hits = [b for a, b in zip(*np.nonzero(m)) if not q.leq[x, a]]
        images.append(q.meet_idx(int(b) for b in hits))
    return UnaryAlgebra(q, tuple(images), AlgebraKind.SAJ)
