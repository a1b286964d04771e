from __future__ import annotations
"""
Finite join-semilattices.

A ``Jsl`` is a finite poset with a bottom and all binary joins; the join and
meet tables are built eagerly at construction. Elements are arbitrary
hashable names; most algorithms work on indices into the carrier.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Hashable, Iterable, Tuple

import numpy as np

from depjsl.errors import NoBottomError, NoJoinError, NotDistributiveError
from depjsl.finrel.finset import FinSet, bits, sorted_masks
from depjsl.finrel.poset import Poset, poset_validate

__all__ = [
    "Jsl",
    "jsl_from_poset",
    "join_irreducibles",
    "meet_irreducibles",
    "is_distributive",
    "tau",
    "tau_inverse",
    "chain",
    "powerset",
    "m_n",
    "n_5",
    "powerset_base",
    "jsl_product",
    "subset_lattice",
]

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def _least_bounds(leq: np.ndarray) -> Tuple[np.ndarray, Tuple[int, int] | None]:
    """Join table of the order ``leq``, or the first pair with no least upper bound."""
    n = len(leq)
    below = leq.sum(axis=0)
    table = np.zeros((n, n), dtype=np.int64)
    big = n + 1
    for a in range(n):
        ub = leq[a][None, :] & leq
        cand = np.where(ub, below[None, :], big).argmin(axis=1)
        ok = ub[np.arange(n), cand] & ~(ub & ~leq[cand]).any(axis=1)
        if not ok.all():
            return table, (a, int(np.flatnonzero(~ok)[0]))
        table[a] = cand
    return table, None


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Jsl:
    """
    A finite join-semilattice.

    Attributes:
        order: the underlying poset
        bot, top: indices of ⊥ and ⊤
        join_table, meet_table: ``n × n`` index tables
    """

    order: Poset
    bot: int = field(init=False)
    top_idx: int = field(init=False)
    join_table: np.ndarray = field(init=False, repr=False)
    meet_table: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        leq = self.order.leq
        n = len(leq)
        bottoms = np.flatnonzero(leq.all(axis=1)) if n else np.array([], dtype=np.int64)
        if not len(bottoms):
            raise NoBottomError("no bottom element")
        join, bad = _least_bounds(leq)
        if bad is not None:
            a, b = (self.order.carrier[i] for i in bad)
            raise NoJoinError(f"no join for ({a!r}, {b!r})", witness=(a, b))
        # a finite join-semilattice with ⊥ is a lattice
        meet, _ = _least_bounds(leq.T)
        join.setflags(write=False)
        meet.setflags(write=False)
        object.__setattr__(self, "bot", int(bottoms[0]))
        object.__setattr__(self, "top_idx", int(np.flatnonzero(leq.all(axis=0))[0]))
        object.__setattr__(self, "join_table", join)
        object.__setattr__(self, "meet_table", meet)

    # -- protocol -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Jsl):
            return NotImplemented
        return self is other or self.order == other.order

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash(self.order)

    def __len__(self) -> int:
        return len(self.order.carrier)

    def __iter__(self):
        return iter(self.order.carrier)

    def __contains__(self, x: object) -> bool:
        return x in self.order.carrier

    def __repr__(self) -> str:
        return f"Jsl({len(self)} elements)"

    @property
    def carrier(self) -> FinSet:
        return self.order.carrier

    @property
    def leq(self) -> np.ndarray:
        return self.order.leq

    @property
    def elements(self) -> Tuple[Hashable, ...]:
        return self.order.carrier.elements

    def index(self, x: Hashable) -> int:
        return self.order.carrier.index(x)

    def __getitem__(self, i: int) -> Hashable:
        return self.order.carrier[i]

    # -- lattice operations ---------------------------------------------------

    @property
    def bottom(self) -> Hashable:
        return self.carrier[self.bot]

    @property
    def top(self) -> Hashable:
        return self.carrier[self.top_idx]

    def le(self, a: Hashable, b: Hashable) -> bool:
        return bool(self.leq[self.index(a), self.index(b)])

    def join(self, a: Hashable, b: Hashable) -> Hashable:
        return self.carrier[int(self.join_table[self.index(a), self.index(b)])]

    def meet(self, a: Hashable, b: Hashable) -> Hashable:
        return self.carrier[int(self.meet_table[self.index(a), self.index(b)])]

    def join_idx(self, idxs: Iterable[int]) -> int:
        out = self.bot
        for i in idxs:
            out = int(self.join_table[out, i])
        return out

    def meet_idx(self, idxs: Iterable[int]) -> int:
        out = self.top_idx
        for i in idxs:
            out = int(self.meet_table[out, i])
        return out

    def join_mask(self, mask: int) -> int:
        return self.join_idx(bits(mask))

    def meet_mask(self, mask: int) -> int:
        return self.meet_idx(bits(mask))

    def join_all(self, xs: Iterable[Hashable]) -> Hashable:
        return self.carrier[self.join_idx(self.index(x) for x in xs)]

    def meet_all(self, xs: Iterable[Hashable]) -> Hashable:
        return self.carrier[self.meet_idx(self.index(x) for x in xs)]

    def down_mask(self, i: int) -> int:
        return self.order.down_mask(i)

    def up_mask(self, i: int) -> int:
        return self.order.up_mask(i)

    # -- irreducibles ---------------------------------------------------------

    @cached_property
    def ji(self) -> Tuple[int, ...]:
        """Indices of the join-irreducibles: elements covering exactly one element."""
        lower_covers = self.order.cover_matrix.sum(axis=0)
        return tuple(int(i) for i in np.flatnonzero(lower_covers == 1))

    @cached_property
    def mi(self) -> Tuple[int, ...]:
        upper_covers = self.order.cover_matrix.sum(axis=1)
        return tuple(int(i) for i in np.flatnonzero(upper_covers == 1))

    @cached_property
    def ji_mask(self) -> int:
        return sum(1 << i for i in self.ji)

    @cached_property
    def mi_mask(self) -> int:
        return sum(1 << i for i in self.mi)

    def join_irreducibles(self) -> Tuple[Hashable, ...]:
        return tuple(self.carrier[i] for i in self.ji)

    def meet_irreducibles(self) -> Tuple[Hashable, ...]:
        return tuple(self.carrier[i] for i in self.mi)

    @cached_property
    def ji_set(self) -> FinSet:
        """J(Q) as a FinSet in carrier order."""
        return FinSet(self.join_irreducibles())

    @cached_property
    def mi_set(self) -> FinSet:
        return FinSet(self.meet_irreducibles())

    def lower_cover(self, j: int) -> int:
        """The unique element covered by the join-irreducible *j*."""
        return int(np.flatnonzero(self.order.cover_matrix[:, j])[0])

    # -- duality and shape ----------------------------------------------------

    @cached_property
    def _op(self) -> "Jsl":
        return Jsl(self.order.op())

    def op(self) -> "Jsl":
        """The order dual ``Q^op`` (joins and meets swap)."""
        return self._op

    @cached_property
    def distributive_witness(self) -> Tuple[int, int, int] | None:
        """``(j, a, b)`` with ``j ≤ a ∨ b`` but ``j ≰ a`` and ``j ≰ b``, if any."""
        leq = self.leq
        for j in self.ji:
            below_join = leq[j][self.join_table]
            split = leq[j][:, None] | leq[j][None, :]
            bad = below_join & ~split
            if bad.any():
                a, b = (int(v) for v in np.argwhere(bad)[0])
                return j, a, b
        return None

    def is_distributive(self) -> bool:
        return self.distributive_witness is None

    def is_boolean(self) -> bool:
        """Distributive with every join-irreducible an atom."""
        atoms = {i for i in range(len(self)) if self.order.cover_matrix[self.bot, i]}
        return self.is_distributive() and set(self.ji) == atoms

    def require_distributive(self) -> None:
        wit = self.distributive_witness
        if wit is not None:
            j, a, b = (self.carrier[i] for i in wit)
            raise NotDistributiveError(
                f"{j!r} ≤ {a!r} ∨ {b!r} but {j!r} is below neither", witness=(j, a, b)
            )


def jsl_from_poset(p: Poset) -> Jsl:
    return Jsl(p)


def join_irreducibles(q: Jsl) -> frozenset:
    return frozenset(q.join_irreducibles())


def meet_irreducibles(q: Jsl) -> frozenset:
    return frozenset(q.meet_irreducibles())


def is_distributive(q: Jsl) -> bool:
    return q.is_distributive()


def tau(q: Jsl) -> Dict[Hashable, Hashable]:
    """τ(j) = ⋁{d : j ≰ d}, a bijection J(Q) → M(Q) on distributive Q."""
    q.require_distributive()
    out = {}
    for j in q.ji:
        mask = sum(1 << d for d in range(len(q)) if not q.leq[j, d])
        out[q.carrier[j]] = q.carrier[q.join_mask(mask)]
    return out


def tau_inverse(q: Jsl) -> Dict[Hashable, Hashable]:
    """τ⁻¹(m) = ⋀(Q \\ ↓m)."""
    q.require_distributive()
    out = {}
    for m in q.mi:
        mask = q.carrier.full_mask & ~q.down_mask(m)
        out[q.carrier[m]] = q.carrier[q.meet_mask(mask)]
    return out


# ---------------------------------------------------------------------------
# standard semilattices
# ---------------------------------------------------------------------------

def chain(n: int) -> Jsl:
    """The chain ``0 < 1 < … < n-1``."""
    idx = np.arange(n)
    return Jsl(Poset(FinSet.range(n), idx[:, None] <= idx[None, :]))


def subset_lattice(base: FinSet, masks: Iterable[int]) -> Jsl:
    """A family of subsets of *base* ordered by inclusion; elements are frozensets."""
    ms = sorted_masks(masks)
    leq = np.array([[a & ~b == 0 for b in ms] for a in ms], dtype=bool).reshape(len(ms), len(ms))
    return Jsl(Poset(FinSet(tuple(base.subset(m) for m in ms)), leq))


def powerset(z: FinSet | Iterable[Hashable]) -> Jsl:
    """``P Z`` ordered by inclusion; subsets are frozensets listed in shortlex order."""
    base = z if isinstance(z, FinSet) else FinSet(tuple(z))
    return subset_lattice(base, range(1 << len(base)))


def powerset_base(p: Jsl) -> FinSet:
    """Recover Z from ``powerset(Z)``: the atoms in carrier order."""
    return FinSet(tuple(next(iter(p.carrier[j])) for j in p.ji))


def jsl_product(q: Jsl, r: Jsl) -> Jsl:
    """``Q × R`` ordered componentwise; carrier pairs in lexicographic order."""
    return Jsl(Poset(q.carrier.product(r.carrier), np.kron(q.leq, r.leq)))


def m_n(n: int) -> Jsl:
    """``M_n``: bottom ``"0"``, atoms ``"a1" … "an"``, top ``"1"``."""
    names = ("0",) + tuple(f"a{i}" for i in range(1, n + 1)) + ("1",)
    size = len(names)
    leq = np.eye(size, dtype=bool)
    leq[0, :] = True
    leq[:, -1] = True
    return Jsl(Poset(FinSet(names), leq))


def n_5() -> Jsl:
    """The pentagon ``0 < a < b < 1``, ``0 < c < 1``."""
    carrier = FinSet(("0", "a", "b", "c", "1"))
    pairs = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
    return Jsl(poset_validate(carrier, pairs))
