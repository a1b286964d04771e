from __future__ import annotations
"""
Finite algebras of the varieties SAJ, SAM and SAI.

Each is a join-semilattice with an order-reversing ``σ``. SAJ adds
``x ≤ σσx``, SAM adds ``σσx ≤ x`` and SAI (De Morgan algebras) has
``σσx = x``. On finite carriers these are exactly the self-adjoint
morphisms ``Q → Q^op`` (SAJ) and ``Q^op → Q`` (SAM).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Hashable, Iterable, List, Mapping, Optional, Tuple

import numpy as np

from depjsl.errors import AxiomViolationError, CarrierMismatchError, NotSymmetricError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.relation import Rel
from depjsl.jsl.homsets import enumerate_morphisms
from depjsl.jsl.morphism import JslMorphism, jsl_isomorphisms
from depjsl.jsl.semilattice import Jsl, chain, powerset
from depjsl.utils.config import Config, guard

__all__ = [
    "AlgebraKind",
    "UnaryAlgebra",
    "check_unary_algebra",
    "sigma_violation",
    "chain_algebra",
    "boolean_algebra",
    "constant_bottom_algebra",
    "unary_algebras",
    "is_algebra_morphism",
    "algebra_morphisms",
    "algebra_isomorphism",
    "sai_from_involution",
    "saj_from_symmetric",
]

logger = logging.getLogger(__name__)


class AlgebraKind(str, Enum):
    SAJ = "saj"
    SAM = "sam"
    SAI = "sai"


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def sigma_violation(base: Jsl, sigma: np.ndarray, kind: AlgebraKind) -> Optional[Tuple[str, Tuple[int, ...]]]:
    """
    First failed axiom of ``(base, sigma)`` for *kind*, with the offending indices.

    Axioms are checked in order: order-reversal, the kind's ``σσ`` rule, then
    the self-adjointness cross-check.
    """
    leq = base.leq
    ss = sigma[sigma]
    # x ≤ y ⇒ σy ≤ σx
    bad = np.argwhere(leq & ~leq[sigma[None, :], sigma[:, None]])
    if len(bad):
        return "order-reversing", tuple(int(v) for v in bad[0])
    idx = np.arange(len(base))
    if kind in (AlgebraKind.SAJ, AlgebraKind.SAI):
        bad = np.flatnonzero(~leq[idx, ss])
        if len(bad):
            return "x ≤ σσx", (int(bad[0]),)
        # b ≤ σa ⟺ a ≤ σb
        below = leq[:, sigma]                      # [b, a]: b ≤ σa
        bad = np.argwhere(below != below.T)
        if len(bad):
            return "self-adjoint", tuple(int(v) for v in bad[0])
    if kind in (AlgebraKind.SAM, AlgebraKind.SAI):
        bad = np.flatnonzero(~leq[ss, idx])
        if len(bad):
            return "σσx ≤ x", (int(bad[0]),)
        above = leq[sigma, :]                      # [a, b]: σa ≤ b
        bad = np.argwhere(above != above.T)
        if len(bad):
            return "self-adjoint", tuple(int(v) for v in bad[0])
    if kind is AlgebraKind.SAI and not np.array_equal(ss, idx):
        return "σσx = x", (int(np.flatnonzero(ss != idx)[0]),)
    return None


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class UnaryAlgebra:
    """
    A finite SAJ, SAM or SAI algebra.

    Attributes:
        base: the underlying join-semilattice
        sigma: ``sigma[i]`` is the index of ``σ(base[i])``
        kind: which variety the axioms were checked against
    """

    base: Jsl
    sigma: Tuple[int, ...]
    kind: AlgebraKind

    def __post_init__(self) -> None:
        sig = tuple(int(i) for i in self.sigma)
        if len(sig) != len(self.base):
            raise CarrierMismatchError("σ is not total on the carrier")
        kind = AlgebraKind(self.kind)
        object.__setattr__(self, "sigma", sig)
        object.__setattr__(self, "kind", kind)
        wit = sigma_violation(self.base, self.array, kind)
        if wit is not None:
            rule, idx = wit
            names = tuple(self.base[i] for i in idx)
            raise AxiomViolationError(f"{kind.value.upper()} axiom {rule} fails at {names!r}", witness=names)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.sigma, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnaryAlgebra):
            return NotImplemented
        return self.sigma == other.sigma and self.kind == other.kind and self.base == other.base

    def __hash__(self) -> int:
        return hash((self.sigma, self.kind))

    def __len__(self) -> int:
        return len(self.base)

    def __repr__(self) -> str:
        return f"UnaryAlgebra({self.kind.value}, {len(self)} elements)"

    def __call__(self, x: Hashable) -> Hashable:
        return self.base[self.sigma[self.base.index(x)]]

    def as_dict(self) -> dict:
        return {self.base[i]: self.base[j] for i, j in enumerate(self.sigma)}

    def as_join_morphism(self) -> JslMorphism:
        """``σ : Q → Q^op`` (SAJ and SAI)."""
        return JslMorphism(self.base, self.base.op(), self.sigma)

    def as_meet_morphism(self) -> JslMorphism:
        """``σ : Q^op → Q`` (SAM and SAI)."""
        return JslMorphism(self.base.op(), self.base, self.sigma)

    def relabel(self, kind: AlgebraKind) -> "UnaryAlgebra":
        """Re-check the same σ against another variety."""
        return UnaryAlgebra(self.base, self.sigma, kind)


def check_unary_algebra(base: Jsl, sigma: Mapping[Hashable, Hashable], kind: AlgebraKind | str) -> UnaryAlgebra:
    """
    Validate ``(base, σ)`` as an algebra of *kind*.

    Raises:
        AxiomViolationError: an axiom fails; the witness holds the elements involved.
    """
    missing = [x for x in base.elements if x not in sigma]
    if missing:
        raise CarrierMismatchError(f"σ is undefined on {missing[0]!r}", witness=missing[0])
    return UnaryAlgebra(base, tuple(base.index(sigma[x]) for x in base.elements), AlgebraKind(kind))


def chain_algebra(n: int) -> UnaryAlgebra:
    """The chain ``0 < 1 < … < n`` with ``σ(x) = n − x``."""
    return UnaryAlgebra(chain(n + 1), tuple(n - x for x in range(n + 1)), AlgebraKind.SAI)


def boolean_algebra(z: FinSet | Iterable[Hashable]) -> UnaryAlgebra:
    """``P Z`` with relative complement."""
    p = powerset(z)
    full = p.top
    return UnaryAlgebra(p, tuple(p.index(full - x) for x in p.elements), AlgebraKind.SAI)


def constant_bottom_algebra(q: Jsl) -> UnaryAlgebra:
    """``σ(x) = ⊥`` for every ``x``; always a SAM algebra."""
    return UnaryAlgebra(q, (q.bot,) * len(q), AlgebraKind.SAM)


def unary_algebras(q: Jsl, kind: AlgebraKind | str) -> List[UnaryAlgebra]:
    """Every algebra of *kind* on the carrier of *q*."""
    kind = AlgebraKind(kind)
    if kind is AlgebraKind.SAM:
        candidates = enumerate_morphisms(q.op(), q)
    else:
        candidates = enumerate_morphisms(q, q.op())
    out = []
    for f in candidates:
        if sigma_violation(q, f.array, kind) is None:
            out.append(UnaryAlgebra(q, f.images, kind))
    return out


def is_algebra_morphism(f: JslMorphism, a: UnaryAlgebra, b: UnaryAlgebra) -> bool:
    """``f ∘ σ_a = σ_b ∘ f``."""
    if f.dom != a.base or f.cod != b.base:
        raise CarrierMismatchError("morphism is not typed between the algebras' carriers")
    return bool(np.array_equal(f.array[a.array], b.array[f.array]))


def algebra_morphisms(a: UnaryAlgebra, b: UnaryAlgebra) -> List[JslMorphism]:
    """Join-semilattice morphisms commuting with σ."""
    return [f for f in enumerate_morphisms(a.base, b.base) if is_algebra_morphism(f, a, b)]


def algebra_isomorphism(a: UnaryAlgebra, b: UnaryAlgebra) -> Optional[JslMorphism]:
    """A σ-preserving isomorphism ``a → b``, or ``None``."""
    for f in jsl_isomorphisms(a.base, b.base):
        if is_algebra_morphism(f, a, b):
            return f
    return None


def sai_from_involution(z: FinSet | Iterable[Hashable], theta: Mapping[Hashable, Hashable]) -> UnaryAlgebra:
    """``σ = ¬ ∘ θ↑`` on ``P Z`` for an involution ``θ`` of ``Z``."""
    base = z if isinstance(z, FinSet) else FinSet(tuple(z))
    for x in base:
        if theta[theta[x]] != x:
            raise AxiomViolationError(f"θ is not an involution at {x!r}", witness=x)
    r = Rel.from_pairs(base, base, ((x, theta[x]) for x in base))
    return _negated_image(base, r, AlgebraKind.SAI)


def saj_from_symmetric(z: FinSet | Iterable[Hashable], r: Rel) -> UnaryAlgebra:
    """``σ = ¬ ∘ r↑`` on ``P Z`` for a symmetric relation ``r`` on ``Z``."""
    base = z if isinstance(z, FinSet) else FinSet(tuple(z))
    if r.source != base or r.target != base:
        raise CarrierMismatchError("relation is not on Z")
    if not r.is_symmetric():
        bad = next(iter(r.pairs - r.converse().pairs))
        raise NotSymmetricError(f"relation is not symmetric at {bad!r}", witness=bad)
    return _negated_image(base, r, AlgebraKind.SAJ)


def _negated_image(base: FinSet, r: Rel, kind: AlgebraKind) -> UnaryAlgebra:
    guard("power set", len(base), Config.MAX_SUBSET_BITS)
    p = powerset(base)
    full = base.full_mask
    sigma = tuple(p.index(base.subset(full & ~r.up_mask(base.mask(x)))) for x in p.elements)
    return UnaryAlgebra(p, sigma, kind)
