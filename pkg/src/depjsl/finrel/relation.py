from __future__ import annotations
"""
Binary relations between finite sets and their operator calculus.

A relation is a dense boolean matrix indexed by the canonical orders of its
source and target. ``up``/``down`` are the image and its right adjoint,
``cl``/``interior`` the induced closure and interior operators, and the open
sets are the images ``R[S]`` closed under union.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

from depjsl.errors import CarrierMismatchError, NotInCarrierError
from depjsl.finrel.finset import FinSet, bits, sorted_masks

__all__ = [
    "Rel",
    "bool_product",
    "subset_matrix",
    "rel_compose",
    "rel_converse",
    "rel_complement",
    "up",
    "down",
    "cl",
    "interior",
    "polarity_up",
    "polarity_down",
    "open_sets",
    "closed_sets",
    "is_reduced",
]


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def bool_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean matrix product over the (∨, ∧) semiring."""
    return (a.astype(np.int64) @ b.astype(np.int64)) > 0


def subset_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``out[i, j]`` iff row ``a[i]`` is contained in row ``b[j]``."""
    return (a.astype(np.int64) @ (~b).T.astype(np.int64)) == 0


def _row_masks(m: np.ndarray) -> Tuple[int, ...]:
    return tuple(sum(1 << int(j) for j in np.flatnonzero(row)) for row in m)


def _union_closure(rows: Iterable[int]) -> list[int]:
    opens = {0}
    for r in set(rows):
        opens |= {o | r for o in opens}
    return sorted_masks(opens)


def _first_unreduced(rows: Sequence[int]) -> Optional[int]:
    """Index of a row that is the union of the other rows it contains."""
    for i, r in enumerate(rows):
        below = 0
        for k, s in enumerate(rows):
            if k != i and s & ~r == 0:
                below |= s
        if below == r:
            return i
    return None


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Rel:
    """
    A relation ``R ⊆ source × target``.

    Attributes:
        source: the domain carrier
        target: the codomain carrier
        matrix: read-only bool matrix, ``matrix[i, j]`` iff ``(source[i], target[j]) ∈ R``
    """

    source: FinSet
    target: FinSet
    matrix: np.ndarray

    def __post_init__(self) -> None:
        shape = (len(self.source), len(self.target))
        m = np.array(self.matrix, dtype=bool)
        if m.size == 0:
            m = np.zeros(shape, dtype=bool)
        if m.shape != shape:
            raise CarrierMismatchError(
                f"matrix shape {m.shape} does not match carriers {shape}", witness=m.shape
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_pairs(cls, source: FinSet, target: FinSet, pairs: Iterable[Tuple[Hashable, Hashable]]) -> "Rel":
        m = np.zeros((len(source), len(target)), dtype=bool)
        for a, b in pairs:
            m[source.index(a), target.index(b)] = True
        return cls(source, target, m)

    @classmethod
    def from_rows(cls, source: FinSet, target: FinSet, rows: Mapping[Hashable, Iterable[Hashable]]) -> "Rel":
        return cls.from_pairs(source, target, ((a, b) for a, bs in rows.items() for b in bs))

    @classmethod
    def from_masks(cls, source: FinSet, target: FinSet, rows: Sequence[int]) -> "Rel":
        m = np.zeros((len(source), len(target)), dtype=bool)
        for i, r in enumerate(rows):
            for j in bits(r):
                m[i, j] = True
        return cls(source, target, m)

    @classmethod
    def identity(cls, x: FinSet) -> "Rel":
        return cls(x, x, np.eye(len(x), dtype=bool))

    @classmethod
    def empty(cls, source: FinSet, target: FinSet) -> "Rel":
        return cls(source, target, np.zeros((len(source), len(target)), dtype=bool))

    @classmethod
    def full(cls, source: FinSet, target: FinSet) -> "Rel":
        return cls(source, target, np.ones((len(source), len(target)), dtype=bool))

    # -- basic protocol -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Rel):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.matrix.tobytes()))

    def __len__(self) -> int:
        return int(self.matrix.sum())

    def __contains__(self, pair: object) -> bool:
        try:
            a, b = pair  # type: ignore[misc]
            return bool(self.matrix[self.source.index(a), self.target.index(b)])
        except (TypeError, ValueError, NotInCarrierError):
            return False

    def __repr__(self) -> str:
        return f"Rel({len(self.source)}x{len(self.target)}, {len(self)} pairs)"

    @property
    def pairs(self) -> frozenset:
        src, tgt = self.source.elements, self.target.elements
        return frozenset((src[i], tgt[j]) for i, j in zip(*np.nonzero(self.matrix)))

    @cached_property
    def rows(self) -> Tuple[int, ...]:
        return _row_masks(self.matrix)

    @cached_property
    def cols(self) -> Tuple[int, ...]:
        return _row_masks(self.matrix.T)

    def image(self, x: Hashable) -> frozenset:
        """``R[x]``."""
        return self.target.subset(self.rows[self.source.index(x)])

    def preimage(self, y: Hashable) -> frozenset:
        """``Ř[y]``."""
        return self.source.subset(self.cols[self.target.index(y)])

    def _same_type(self, other: "Rel") -> None:
        if self.source != other.source or self.target != other.target:
            raise CarrierMismatchError("relations have different carriers")

    # -- algebra ------------------------------------------------------------

    def converse(self) -> "Rel":
        return Rel(self.target, self.source, self.matrix.T)

    def complement(self) -> "Rel":
        return Rel(self.source, self.target, ~self.matrix)

    def compose(self, other: "Rel") -> "Rel":
        """``self ; other`` (first self, then other)."""
        if self.target != other.source:
            raise CarrierMismatchError(
                "composite is undefined: target of the first relation differs from source of the second"
            )
        return Rel(self.source, other.target, bool_product(self.matrix, other.matrix))

    def union(self, other: "Rel") -> "Rel":
        self._same_type(other)
        return Rel(self.source, self.target, self.matrix | other.matrix)

    def intersection(self, other: "Rel") -> "Rel":
        self._same_type(other)
        return Rel(self.source, self.target, self.matrix & other.matrix)

    def issubset(self, other: "Rel") -> bool:
        self._same_type(other)
        return not bool((self.matrix & ~other.matrix).any())

    def restrict(self, src_mask: int, tgt_mask: int) -> "Rel":
        si = list(bits(src_mask))
        ti = list(bits(tgt_mask))
        return Rel(
            self.source.restrict(src_mask),
            self.target.restrict(tgt_mask),
            self.matrix[np.ix_(si, ti)] if si and ti else np.zeros((len(si), len(ti)), dtype=bool),
        )

    # -- operators on bitmasks ----------------------------------------------

    def up_mask(self, x: int) -> int:
        out = 0
        rows = self.rows
        for i in bits(x):
            out |= rows[i]
        return out

    def down_mask(self, y: int) -> int:
        out = 0
        for i, r in enumerate(self.rows):
            if r & ~y == 0:
                out |= 1 << i
        return out

    def cl_mask(self, x: int) -> int:
        return self.down_mask(self.up_mask(x))

    def interior_mask(self, y: int) -> int:
        return self.up_mask(self.down_mask(y))

    def pol_up_mask(self, x: int) -> int:
        out = self.target.full_mask
        rows = self.rows
        for i in bits(x):
            out &= rows[i]
        return out

    def pol_down_mask(self, y: int) -> int:
        out = 0
        for i, r in enumerate(self.rows):
            if y & ~r == 0:
                out |= 1 << i
        return out

    @cached_property
    def open_masks(self) -> Tuple[int, ...]:
        return tuple(_union_closure(self.rows))

    @cached_property
    def closed_masks(self) -> Tuple[int, ...]:
        return tuple(sorted_masks(self.down_mask(o) for o in self.open_masks))

    # -- operators on subsets -----------------------------------------------

    def up(self, x: Iterable[Hashable]) -> frozenset:
        return self.target.subset(self.up_mask(self.source.mask(x)))

    def down(self, y: Iterable[Hashable]) -> frozenset:
        return self.source.subset(self.down_mask(self.target.mask(y)))

    def cl(self, x: Iterable[Hashable]) -> frozenset:
        return self.source.subset(self.cl_mask(self.source.mask(x)))

    def interior(self, y: Iterable[Hashable]) -> frozenset:
        return self.target.subset(self.interior_mask(self.target.mask(y)))

    def polarity_up(self, x: Iterable[Hashable]) -> frozenset:
        return self.target.subset(self.pol_up_mask(self.source.mask(x)))

    def polarity_down(self, y: Iterable[Hashable]) -> frozenset:
        return self.source.subset(self.pol_down_mask(self.target.mask(y)))

    def open_sets(self) -> list[frozenset]:
        return [self.target.subset(m) for m in self.open_masks]

    def closed_sets(self) -> list[frozenset]:
        return [self.source.subset(m) for m in self.closed_masks]

    # -- shape predicates ---------------------------------------------------

    def unreduced_witness(self) -> Optional[Tuple[str, Hashable]]:
        """``("row", x)`` or ``("col", y)`` for an element breaking reducedness."""
        i = _first_unreduced(self.rows)
        if i is not None:
            return "row", self.source[i]
        j = _first_unreduced(self.cols)
        if j is not None:
            return "col", self.target[j]
        return None

    def is_reduced(self) -> bool:
        return self.unreduced_witness() is None

    def is_strict(self) -> bool:
        """No empty row and no empty column."""
        return bool(self.matrix.any(axis=1).all() and self.matrix.any(axis=0).all())

    def is_symmetric(self) -> bool:
        return self.source == self.target and np.array_equal(self.matrix, self.matrix.T)


# ---------------------------------------------------------------------------
# functional aliases
# ---------------------------------------------------------------------------

def rel_compose(r: Rel, s: Rel) -> Rel:
    return r.compose(s)


def rel_converse(r: Rel) -> Rel:
    return r.converse()


def rel_complement(r: Rel) -> Rel:
    return r.complement()


def up(r: Rel, x: Iterable[Hashable]) -> frozenset:
    return r.up(x)


def down(r: Rel, y: Iterable[Hashable]) -> frozenset:
    return r.down(y)


def cl(r: Rel, x: Iterable[Hashable]) -> frozenset:
    return r.cl(x)


def interior(r: Rel, y: Iterable[Hashable]) -> frozenset:
    return r.interior(y)


def polarity_up(r: Rel, x: Iterable[Hashable]) -> frozenset:
    return r.polarity_up(x)


def polarity_down(r: Rel, y: Iterable[Hashable]) -> frozenset:
    return r.polarity_down(y)


def open_sets(r: Rel) -> list[frozenset]:
    return r.open_sets()


def closed_sets(r: Rel) -> list[frozenset]:
    return r.closed_sets()


def is_reduced(r: Rel) -> bool:
    return r.is_reduced()
