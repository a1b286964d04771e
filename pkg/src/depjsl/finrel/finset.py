from __future__ import annotations
"""
Finite sets with a fixed canonical order, and int-bitmask subsets.

Subsets are Python ints internally (bit i = the i-th element) and frozensets
of element names at the public surface.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Hashable, Iterable, Iterator, Tuple

from depjsl.errors import DuplicateElementError, NotInCarrierError

__all__ = [
    "FinSet",
    "bits",
    "popcount",
    "shortlex_key",
    "sorted_masks",
]


# ---------------------------------------------------------------------------
# bitmask helpers
# ---------------------------------------------------------------------------

def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of *mask*, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def shortlex_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Size first, then the sorted index tuple."""
    return popcount(mask), tuple(bits(mask))


def sorted_masks(masks: Iterable[int]) -> list[int]:
    return sorted(set(masks), key=shortlex_key)


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FinSet:
    """
    A finite set of opaque, hashable names in a fixed order.

    The order gives the canonical indexing used by every matrix in the
    package. Two FinSets are equal iff they list the same names in the
    same order.
    """

    elements: Tuple[Hashable, ...]
    _index: Dict[Hashable, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        index: Dict[Hashable, int] = {}
        for i, e in enumerate(elems):
            if e in index:
                raise DuplicateElementError(f"duplicate element {e!r}", witness=e)
            index[e] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, *elements: Hashable) -> "FinSet":
        return cls(tuple(elements))

    @classmethod
    def range(cls, n: int) -> "FinSet":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        try:
            return x in self._index
        except TypeError:
            return False

    def __getitem__(self, i: int) -> Hashable:
        return self.elements[i]

    def index(self, x: Hashable) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise NotInCarrierError(f"{x!r} is not an element of the carrier", witness=x) from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def mask(self, subset: Iterable[Hashable]) -> int:
        m = 0
        for x in subset:
            m |= 1 << self.index(x)
        return m

    def subset(self, mask: int) -> frozenset:
        return frozenset(self.elements[i] for i in bits(mask))

    def ordered(self, mask: int) -> Tuple[Hashable, ...]:
        """The elements of *mask* in canonical order."""
        return tuple(self.elements[i] for i in bits(mask))

    def product(self, other: "FinSet") -> "FinSet":
        """Pairs in lexicographic order, matching the Kronecker convention."""
        return FinSet(tuple(product(self.elements, other.elements)))

    def restrict(self, mask: int) -> "FinSet":
        return FinSet(self.ordered(mask))
