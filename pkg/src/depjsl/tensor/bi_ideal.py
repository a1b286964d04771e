from __future__ import annotations
"""
Bi-ideals of ``Q × R``.

A bi-ideal contains the bottom cross ``{⊥}×R ∪ Q×{⊥}``, is down-closed in
the product order and is closed under lateral joins in each coordinate.
Bi-ideals are stored as boolean ``|Q| × |R|`` matrices.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, List, Optional, Tuple

import numpy as np

from depjsl.errors import AxiomViolationError, CarrierMismatchError
from depjsl.finrel.relation import bool_product
from depjsl.jsl.morphism import JslMorphism
from depjsl.jsl.homsets import enumerate_morphisms
from depjsl.jsl.semilattice import Jsl
from depjsl.utils.config import Config, guard

__all__ = [
    "BiIdeal",
    "is_bi_ideal",
    "bi_ideal_violation",
    "bi_ideal_generated",
    "bottom_bi_ideal",
    "top_bi_ideal",
    "beta",
    "bi_ideal_of_morphism",
    "enumerate_bi_ideals",
]

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def _cross(q: Jsl, r: Jsl) -> np.ndarray:
    m = np.zeros((len(q), len(r)), dtype=bool)
    m[q.bot, :] = True
    m[:, r.bot] = True
    return m


def _down_closure(m: np.ndarray, q: Jsl, r: Jsl) -> np.ndarray:
    # (a', b') ≤ (a, b) ∈ m
    return bool_product(bool_product(q.leq, m), r.leq.T)


def _lateral_joins(m: np.ndarray, q: Jsl, r: Jsl) -> np.ndarray:
    out = m.copy()
    for b in range(len(r)):
        out[q.join_idx(np.flatnonzero(m[:, b])), b] = True
    for a in range(len(q)):
        out[a, r.join_idx(np.flatnonzero(m[a, :]))] = True
    return out


def _pairs_matrix(s: Iterable[Tuple[Hashable, Hashable]], q: Jsl, r: Jsl) -> np.ndarray:
    m = np.zeros((len(q), len(r)), dtype=bool)
    for a, b in s:
        m[q.index(a), r.index(b)] = True
    return m


def _as_matrix(s, q: Jsl, r: Jsl) -> np.ndarray:
    if isinstance(s, BiIdeal):
        return s.matrix
    if isinstance(s, np.ndarray):
        if s.shape != (len(q), len(r)):
            raise CarrierMismatchError(f"matrix shape {s.shape} does not match {len(q)}×{len(r)}")
        return s.astype(bool)
    return _pairs_matrix(s, q, r)


def bi_ideal_violation(m: np.ndarray, q: Jsl, r: Jsl) -> Optional[Tuple[str, Tuple[int, int]]]:
    """
    First rule of a bi-ideal broken by *m*.

    Returns ``("bottom", (a, b))``, ``("down", (a, b))`` or ``("lateral", (a, b))``
    with the index pair that should have been present, else ``None``.
    """
    missing = _cross(q, r) & ~m
    if missing.any():
        return "bottom", tuple(int(v) for v in np.argwhere(missing)[0])
    missing = _down_closure(m, q, r) & ~m
    if missing.any():
        return "down", tuple(int(v) for v in np.argwhere(missing)[0])
    missing = _lateral_joins(m, q, r) & ~m
    if missing.any():
        return "lateral", tuple(int(v) for v in np.argwhere(missing)[0])
    return None


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BiIdeal:
    """
    A bi-ideal of ``left × right``.

    Attributes:
        left: the semilattice ``Q``
        right: the semilattice ``R``
        matrix: ``matrix[a, b]`` iff ``(left[a], right[b])`` is in the bi-ideal
    """

    left: Jsl
    right: Jsl
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = _as_matrix(np.asarray(self.matrix), self.left, self.right).copy()
        wit = bi_ideal_violation(m, self.left, self.right)
        if wit is not None:
            rule, (a, b) = wit
            pair = (self.left[a], self.right[b])
            raise AxiomViolationError(f"not a bi-ideal: {rule} rule needs {pair!r}", witness=pair)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiIdeal):
            return NotImplemented
        return (
            np.array_equal(self.matrix, other.matrix)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.matrix.shape, self.matrix.tobytes()))

    def __len__(self) -> int:
        return int(self.matrix.sum())

    def __contains__(self, pair: object) -> bool:
        try:
            a, b = pair  # type: ignore[misc]
            return bool(self.matrix[self.left.index(a), self.right.index(b)])
        except (TypeError, ValueError):
            return False

    def __repr__(self) -> str:
        return f"BiIdeal({len(self)} pairs)"

    @property
    def pairs(self) -> frozenset:
        return frozenset((self.left[a], self.right[b]) for a, b in np.argwhere(self.matrix))

    def issubset(self, other: "BiIdeal") -> bool:
        return bool((self.matrix <= other.matrix).all())

    def join(self, other: "BiIdeal") -> "BiIdeal":
        """The least bi-ideal containing both."""
        return bi_ideal_generated(self.matrix | other.matrix, self.left, self.right)

    def transpose(self) -> "BiIdeal":
        return BiIdeal(self.right, self.left, self.matrix.T)


def is_bi_ideal(s, q: Jsl, r: Jsl) -> bool:
    """Check *s* (pairs of names, or a boolean matrix) against the three bi-ideal rules."""
    return bi_ideal_violation(_as_matrix(s, q, r), q, r) is None


def bi_ideal_generated(s0, q: Jsl, r: Jsl) -> BiIdeal:
    """
    The least bi-ideal containing *s0*.

    Alternates lateral joins and down-closure on top of the bottom cross
    until nothing changes.
    """
    m = _as_matrix(s0, q, r) | _cross(q, r)
    m = _down_closure(m, q, r)
    rounds = 0
    while True:
        nxt = _down_closure(_lateral_joins(m, q, r), q, r)
        rounds += 1
        if np.array_equal(nxt, m):
            break
        m = nxt
    logger.debug("bi-ideal closure stable after %d rounds", rounds)
    return BiIdeal(q, r, m)


def bottom_bi_ideal(q: Jsl, r: Jsl) -> BiIdeal:
    return BiIdeal(q, r, _cross(q, r))


def top_bi_ideal(q: Jsl, r: Jsl) -> BiIdeal:
    return BiIdeal(q, r, np.ones((len(q), len(r)), dtype=bool))


def beta(q: Jsl, r: Jsl, a: Hashable, b: Hashable) -> BiIdeal:
    """``β(a, b) = {⊥}×R ∪ Q×{⊥} ∪ ↓a × ↓b``."""
    m = _cross(q, r)
    m |= np.outer(q.leq[:, q.index(a)], r.leq[:, r.index(b)])
    return BiIdeal(q, r, m)


def bi_ideal_of_morphism(h: JslMorphism, q: Jsl, r: Jsl) -> BiIdeal:
    """``{ (a, b) : b ≤_R h(a) }`` for a morphism ``h : Q → R^op``."""
    return BiIdeal(q, r, r.leq[:, h.array].T)


def enumerate_bi_ideals(q: Jsl, r: Jsl) -> List[BiIdeal]:
    """
    Every bi-ideal of ``q × r``, from the morphisms ``q → r^op``.

    Sorted by size, so the bottom cross comes first and ``Q × R`` last.
    """
    guard("tensor cells", len(q) * len(r), Config.MAX_TENSOR_CELLS)
    out = [bi_ideal_of_morphism(h, q, r) for h in enumerate_morphisms(q, r.op())]
    out.sort(key=lambda b: (len(b), b.matrix.tobytes()))
    logger.debug("%d bi-ideals of a %d×%d product", len(out), len(q), len(r))
    return out
