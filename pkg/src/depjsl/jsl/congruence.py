from __future__ import annotations
"""
Congruences and subalgebras of a finite join-semilattice.

Congruences of ``Q`` correspond to subalgebras of ``Q^op`` through the class
maxima: ``cong_to_sub`` and ``sub_to_cong`` are mutually inverse and
order-reversing.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, List, Tuple

import numpy as np

from depjsl.errors import AxiomViolationError, InvalidSubalgebraError
from depjsl.finrel.finset import FinSet, bits, popcount, sorted_masks
from depjsl.finrel.poset import Poset, transitive_closure
from depjsl.jsl.morphism import JslMorphism
from depjsl.jsl.semilattice import Jsl
from depjsl.utils.config import Config, guard

__all__ = [
    "Congruence",
    "Subalgebra",
    "principal_congruence",
    "congruences",
    "congruence_lattice",
    "subalgebras",
    "subalgebra_generated",
    "subalgebra_lattice",
    "quotient",
    "cong_to_sub",
    "sub_to_cong",
]

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def _compatible_closure(q: Jsl, eq: np.ndarray) -> np.ndarray:
    """Least congruence containing the relation *eq*."""
    cur = transitive_closure(eq | eq.T)
    while True:
        nxt = cur.copy()
        for a, b in np.argwhere(cur):
            nxt[q.join_table[a], q.join_table[b]] = True
        nxt = transitive_closure(nxt | nxt.T)
        if np.array_equal(nxt, cur):
            return cur
        cur = nxt


def _join_closure(q: Jsl, mask: int) -> int:
    out = mask | (1 << q.bot)
    frontier = list(bits(out))
    while frontier:
        a = frontier.pop()
        for b in list(bits(out)):
            c = int(q.join_table[a, b])
            if not out >> c & 1:
                out |= 1 << c
                frontier.append(c)
    return out


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Congruence:
    """
    An equivalence on ``base`` compatible with joins.

    ``matrix[a, b]`` iff ``a θ b``.
    """

    base: Jsl
    matrix: np.ndarray

    def __post_init__(self) -> None:
        n = len(self.base)
        m = np.array(self.matrix, dtype=bool).reshape(n, n)
        if not np.diag(m).all() or not np.array_equal(m, m.T) or not np.array_equal(transitive_closure(m), m):
            raise AxiomViolationError("relation is not an equivalence")
        for a, b in np.argwhere(m):
            row_a, row_b = self.base.join_table[a], self.base.join_table[b]
            bad = ~m[row_a, row_b]
            if bad.any():
                c = int(np.flatnonzero(bad)[0])
                names = tuple(self.base[i] for i in (a, b, c))
                raise AxiomViolationError(
                    f"{names[0]!r} θ {names[1]!r} but their joins with {names[2]!r} are not related",
                    witness=names,
                )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.base == other.base and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(self.matrix.tobytes())

    def __len__(self) -> int:
        return int(self.matrix.sum())

    def __repr__(self) -> str:
        return "Congruence(" + " | ".join(
            ",".join(repr(x) for x in cls) for cls in self.classes()
        ) + ")"

    @cached_property
    def class_masks(self) -> Tuple[int, ...]:
        seen = []
        for row in self.matrix:
            m = sum(1 << int(j) for j in np.flatnonzero(row))
            if m not in seen:
                seen.append(m)
        return tuple(seen)

    def classes(self) -> List[Tuple[Hashable, ...]]:
        return [self.base.carrier.ordered(m) for m in self.class_masks]

    def related(self, a: Hashable, b: Hashable) -> bool:
        return bool(self.matrix[self.base.index(a), self.base.index(b)])

    def issubset(self, other: "Congruence") -> bool:
        return not bool((self.matrix & ~other.matrix).any())

    def join(self, other: "Congruence") -> "Congruence":
        return Congruence(self.base, transitive_closure(self.matrix | other.matrix))

    def meet(self, other: "Congruence") -> "Congruence":
        return Congruence(self.base, self.matrix & other.matrix)

    def class_max(self, i: int) -> int:
        """Index of the largest element of the class of ``base[i]``."""
        return self.base.join_mask(sum(1 << int(j) for j in np.flatnonzero(self.matrix[i])))

    @classmethod
    def diagonal(cls, q: Jsl) -> "Congruence":
        return cls(q, np.eye(len(q), dtype=bool))

    @classmethod
    def total(cls, q: Jsl) -> "Congruence":
        return cls(q, np.ones((len(q), len(q)), dtype=bool))


@dataclass(frozen=True, eq=False)
class Subalgebra:
    """A subset of ``base`` containing ⊥ and closed under binary joins."""

    base: Jsl
    mask: int

    def __post_init__(self) -> None:
        q = self.base
        if not self.mask >> q.bot & 1:
            raise InvalidSubalgebraError("subalgebra must contain the bottom", witness=q.bottom)
        members = list(bits(self.mask))
        for a in members:
            for b in members:
                c = int(q.join_table[a, b])
                if not self.mask >> c & 1:
                    raise InvalidSubalgebraError(
                        f"join of {q[a]!r} and {q[b]!r} is missing", witness=(q[a], q[b])
                    )

    @classmethod
    def of(cls, base: Jsl, elements: Iterable[Hashable]) -> "Subalgebra":
        return cls(base, base.carrier.mask(elements))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subalgebra):
            return NotImplemented
        return self.mask == other.mask and self.base == other.base

    def __hash__(self) -> int:
        return hash(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __repr__(self) -> str:
        return f"Subalgebra({list(self.elements)!r})"

    @property
    def elements(self) -> Tuple[Hashable, ...]:
        return self.base.carrier.ordered(self.mask)

    def as_jsl(self) -> Jsl:
        idx = list(bits(self.mask))
        return Jsl(Poset(self.base.carrier.restrict(self.mask), self.base.leq[np.ix_(idx, idx)]))


def principal_congruence(q: Jsl, a: Hashable, b: Hashable) -> Congruence:
    """Least congruence identifying *a* and *b*."""
    n = len(q)
    eq = np.eye(n, dtype=bool)
    eq[q.index(a), q.index(b)] = True
    return Congruence(q, _compatible_closure(q, eq))


def congruences(q: Jsl) -> List[Congruence]:
    """All congruences: principal ones closed under joins, sorted by size."""
    guard("congruence enumeration", len(q), Config.MAX_CONGRUENCE_SIZE)
    n = len(q)
    found = {Congruence.diagonal(q)}
    for a in range(n):
        for b in range(a + 1, n):
            found.add(principal_congruence(q, q[a], q[b]))
    frontier = list(found)
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(found):
                z = x.join(y)
                if z not in found:
                    found.add(z)
                    nxt.append(z)
        frontier = nxt
    out = sorted(found, key=lambda c: (len(c), c.matrix.tobytes()))
    logger.debug("%d congruences on a semilattice of size %d", len(out), n)
    return out


def congruence_lattice(q: Jsl) -> Jsl:
    """``Con Q`` ordered by inclusion; elements are ``Congruence`` values."""
    cons = congruences(q)
    leq = np.array([[a.issubset(b) for b in cons] for a in cons], dtype=bool)
    return Jsl(Poset(FinSet(tuple(cons)), leq))


def subalgebra_generated(q: Jsl, xs: Iterable[Hashable]) -> Subalgebra:
    return Subalgebra(q, _join_closure(q, q.carrier.mask(xs)))


def subalgebras(q: Jsl) -> List[Subalgebra]:
    """All subalgebras, in shortlex order of their element masks."""
    guard("subalgebra enumeration", len(q), Config.MAX_SUBSET_BITS)
    start = 1 << q.bot if len(q) else 0
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for x in range(len(q)):
                if not m >> x & 1:
                    c = _join_closure(q, m | 1 << x)
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
        frontier = nxt
    return [Subalgebra(q, m) for m in sorted_masks(seen)]


def subalgebra_lattice(q: Jsl) -> Jsl:
    subs = subalgebras(q)
    leq = np.array([[a.mask & ~b.mask == 0 for b in subs] for a in subs], dtype=bool)
    return Jsl(Poset(FinSet(tuple(subs)), leq))


def quotient(theta: Congruence) -> Tuple[Jsl, JslMorphism]:
    """
    ``Q/θ`` with its quotient morphism.

    Each class is represented by its largest element; the quotient carries
    the order of ``Q`` restricted to those representatives.
    """
    q = theta.base
    maxima = sorted({theta.class_max(i) for i in range(len(q))})
    mask = sum(1 << i for i in maxima)
    quo = Jsl(Poset(q.carrier.restrict(mask), q.leq[np.ix_(maxima, maxima)]))
    pos = {m: k for k, m in enumerate(maxima)}
    images = tuple(pos[theta.class_max(i)] for i in range(len(q)))
    return quo, JslMorphism(q, quo, images)


def cong_to_sub(theta: Congruence) -> Subalgebra:
    """The class maxima ``{ ⋁[q]_θ : q ∈ Q }``, a subalgebra of ``Q^op``."""
    q = theta.base
    mask = 0
    for i in range(len(q)):
        mask |= 1 << theta.class_max(i)
    return Subalgebra(q.op(), mask)


def sub_to_cong(s: Subalgebra) -> Congruence:
    """``{ (a, b) : ∀ x ∈ S. a ≤ x ⟺ b ≤ x }`` for a subalgebra ``S`` of ``Q^op``."""
    q = s.base.op()
    idx = list(bits(s.mask))
    sig = q.leq[:, idx]
    eq = (sig[:, None, :] == sig[None, :, :]).all(axis=2)
    return Congruence(q, eq)
