from __future__ import annotations
"""Finite posets, covering relations and monotone maps."""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, List, Mapping, Tuple

import numpy as np

from depjsl.errors import CarrierMismatchError, CycleError, NotMonotoneError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.relation import Rel

__all__ = [
    "Poset",
    "MonotoneMap",
    "poset_validate",
    "poset_covers",
    "transitive_closure",
    "chain_poset",
    "discrete_poset",
    "monotone_maps",
]


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def transitive_closure(m: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure (Warshall)."""
    out = np.array(m, dtype=bool) | np.eye(len(m), dtype=bool)
    for k in range(len(out)):
        out |= out[:, k : k + 1] & out[k : k + 1, :]
    return out


def _find_cycle(gen: np.ndarray, a: int, b: int) -> List[int]:
    """A path a → … → b → … → a through the generating pairs."""

    def path(src: int, dst: int) -> List[int]:
        prev = {src: -1}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if u == dst:
                break
            for v in np.flatnonzero(gen[u]):
                v = int(v)
                if v not in prev:
                    prev[v] = u
                    queue.append(v)
        out = [dst]
        while out[-1] != src:
            out.append(prev[out[-1]])
        return out[::-1]

    return path(a, b) + path(b, a)[1:]


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Poset:
    """
    A finite partial order.

    ``leq[i, j]`` iff ``carrier[i] ≤ carrier[j]``. The constructor checks
    reflexivity, transitivity and antisymmetry; use :func:`poset_validate`
    to build one from generating pairs.
    """

    carrier: FinSet
    leq: np.ndarray

    def __post_init__(self) -> None:
        n = len(self.carrier)
        m = np.array(self.leq, dtype=bool)
        if m.size == 0:
            m = np.zeros((n, n), dtype=bool)
        if m.shape != (n, n):
            raise CarrierMismatchError(f"order matrix shape {m.shape} does not match carrier size {n}")
        if not np.diag(m).all():
            i = int(np.flatnonzero(~np.diag(m))[0])
            raise CycleError(f"order is not reflexive at {self.carrier[i]!r}", witness=[self.carrier[i]])
        if not np.array_equal(transitive_closure(m), m):
            raise CycleError("order is not transitive")
        both = m & m.T & ~np.eye(n, dtype=bool)
        if both.any():
            a, b = (int(v) for v in np.argwhere(both)[0])
            cyc = _find_cycle(m, a, b)
            raise CycleError(
                "antisymmetry violated: " + " ≤ ".join(repr(self.carrier[i]) for i in cyc),
                witness=[self.carrier[i] for i in cyc],
            )
        m.setflags(write=False)
        object.__setattr__(self, "leq", m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.carrier == other.carrier and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash((self.carrier, self.leq.tobytes()))

    def __len__(self) -> int:
        return len(self.carrier)

    def __repr__(self) -> str:
        return f"Poset({list(self.carrier.elements)!r})"

    @cached_property
    def relation(self) -> Rel:
        return Rel(self.carrier, self.carrier, self.leq)

    @cached_property
    def lt(self) -> np.ndarray:
        return self.leq & ~np.eye(len(self.carrier), dtype=bool)

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        lt = self.lt
        two_step = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        return lt & ~two_step

    def le(self, a: Hashable, b: Hashable) -> bool:
        return bool(self.leq[self.carrier.index(a), self.carrier.index(b)])

    def op(self) -> "Poset":
        return Poset(self.carrier, self.leq.T)

    def down_mask(self, i: int) -> int:
        return self.relation.cols[i]

    def up_mask(self, i: int) -> int:
        return self.relation.rows[i]

    def is_down_closed(self, mask: int) -> bool:
        return all(self.down_mask(i) & ~mask == 0 for i in range(len(self)) if mask >> i & 1)

    def is_up_closed(self, mask: int) -> bool:
        return all(self.up_mask(i) & ~mask == 0 for i in range(len(self)) if mask >> i & 1)

    @cached_property
    def downset_masks(self) -> Tuple[int, ...]:
        # downsets are the unions of principal downsets: the open sets of x ↦ ↓x
        return Rel(self.carrier, self.carrier, self.leq.T).open_masks

    @cached_property
    def upset_masks(self) -> Tuple[int, ...]:
        return self.relation.open_masks

    def downsets(self) -> list[frozenset]:
        return [self.carrier.subset(m) for m in self.downset_masks]

    def upsets(self) -> list[frozenset]:
        return [self.carrier.subset(m) for m in self.upset_masks]

    def linear_extension(self) -> List[int]:
        """Indices sorted so that every element precedes the elements above it."""
        below = self.leq.sum(axis=0)
        return sorted(range(len(self)), key=lambda i: (int(below[i]), i))

    def is_chain(self) -> bool:
        return bool((self.leq | self.leq.T).all())


def poset_validate(carrier: FinSet, pairs: Iterable[Tuple[Hashable, Hashable]]) -> Poset:
    """Reflexive-transitive closure of *pairs*; raises ``CycleError`` on a cycle."""
    n = len(carrier)
    gen = np.zeros((n, n), dtype=bool)
    for a, b in pairs:
        gen[carrier.index(a), carrier.index(b)] = True
    closed = transitive_closure(gen)
    both = closed & closed.T & ~np.eye(n, dtype=bool)
    if both.any():
        a, b = (int(v) for v in np.argwhere(both)[0])
        cyc = _find_cycle(gen | np.eye(n, dtype=bool), a, b)
        raise CycleError(
            "cycle in order: " + " ≤ ".join(repr(carrier[i]) for i in cyc),
            witness=[carrier[i] for i in cyc],
        )
    return Poset(carrier, closed)


def poset_covers(p: Poset) -> Rel:
    """The covering relation ``≺_P``."""
    return Rel(p.carrier, p.carrier, p.cover_matrix)


def chain_poset(n: int) -> Poset:
    idx = np.arange(n)
    return Poset(FinSet.range(n), idx[:, None] <= idx[None, :])


def discrete_poset(x: FinSet) -> Poset:
    return Poset(x, np.eye(len(x), dtype=bool))


@dataclass(frozen=True, eq=False)
class MonotoneMap:
    """An order-preserving function between posets, as a tuple of codomain indices."""

    dom: Poset
    cod: Poset
    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        im = tuple(int(i) for i in self.images)
        if len(im) != len(self.dom):
            raise CarrierMismatchError("map is not total on its domain")
        object.__setattr__(self, "images", im)
        arr = np.array(im, dtype=np.int64)
        if len(arr):
            bad = self.dom.leq & ~self.cod.leq[np.ix_(arr, arr)]
            if bad.any():
                a, b = (int(v) for v in np.argwhere(bad)[0])
                raise NotMonotoneError(
                    f"not monotone: {self.dom.carrier[a]!r} ≤ {self.dom.carrier[b]!r} "
                    "but their images are not ordered",
                    witness=(self.dom.carrier[a], self.dom.carrier[b]),
                )

    @classmethod
    def from_map(cls, dom: Poset, cod: Poset, mapping: Mapping[Hashable, Hashable]) -> "MonotoneMap":
        return cls(dom, cod, tuple(cod.carrier.index(mapping[x]) for x in dom.carrier))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonotoneMap):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __call__(self, x: Hashable) -> Hashable:
        return self.cod.carrier[self.images[self.dom.carrier.index(x)]]

    def is_order_embedding(self) -> bool:
        arr = np.array(self.images, dtype=np.int64)
        if not len(arr):
            return True
        return bool(np.array_equal(self.dom.leq, self.cod.leq[np.ix_(arr, arr)]))

    def is_bijective(self) -> bool:
        return len(set(self.images)) == len(self.images) == len(self.cod)


def monotone_maps(p: Poset, q: Poset) -> List[MonotoneMap]:
    """Every monotone map ``p → q`` by backtracking along a linear extension."""
    order = p.linear_extension()
    images: List[int] = [0] * len(p)
    out: List[MonotoneMap] = []

    def extend(k: int) -> None:
        if k == len(order):
            out.append(MonotoneMap(p, q, tuple(images)))
            return
        i = order[k]
        for y in range(len(q)):
            if all(q.leq[images[j], y] for j in order[:k] if p.leq[j, i]) and all(
                q.leq[y, images[j]] for j in order[:k] if p.leq[i, j]
            ):
                images[i] = y
                extend(k + 1)

    extend(0)
    return out

