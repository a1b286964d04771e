from __future__ import annotations
"""
Seeded random instances for the check suites.

Every generator takes a seed or a ``numpy.random.Generator``; the same seed
always yields the same instance.
"""

import logging
from typing import Dict, List, Optional, Sequence, TypeVar, Union

import numpy as np

from depjsl.demorgan.algebra import AlgebraKind, UnaryAlgebra, unary_algebras
from depjsl.demorgan.graphs import UGraph
from depjsl.dep.morphism import DepMorphism, dep_hom
from depjsl.errors import GenerationExhaustedError, NoJoinError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import Poset, transitive_closure
from depjsl.finrel.relation import Rel, bool_product
from depjsl.jsl.homsets import enumerate_morphisms
from depjsl.jsl.morphism import JslMorphism, jsl_isomorphism
from depjsl.jsl.semilattice import Jsl
from depjsl.utils.config import Config, guard

__all__ = [
    "Seed",
    "rng_of",
    "gen_rel",
    "gen_poset",
    "gen_jsl",
    "gen_distributive",
    "gen_ug",
    "gen_morphism",
    "gen_dep_morphism",
    "gen_algebra",
    "all_posets",
    "all_lattices",
    "pick",
]

logger = logging.getLogger(__name__)

Seed = Union[int, np.random.Generator, None]
T = TypeVar("T")

_ENUMERATE_BELOW = 4096


def rng_of(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(Config.SEED if seed is None else seed)


def pick(seed: Seed, items: Sequence[T]) -> Optional[T]:
    """A uniformly chosen item, or ``None`` for an empty sequence."""
    if not items:
        return None
    return items[int(rng_of(seed).integers(len(items)))]


def gen_rel(seed: Seed, max_src: int, max_tgt: int, density: float = 0.5) -> Rel:
    """A relation on ``0 … n-1`` × ``0 … m-1`` with ``n ≤ max_src``, ``m ≤ max_tgt``."""
    rng = rng_of(seed)
    n = int(rng.integers(0, max_src + 1))
    m = int(rng.integers(0, max_tgt + 1))
    matrix = rng.random((n, m)) < density
    return Rel(FinSet.range(n), FinSet.range(m), matrix)


def gen_poset(seed: Seed, max_size: int, density: float = 0.4) -> Poset:
    """A random order on ``0 … n-1`` extending the natural order's orientation."""
    rng = rng_of(seed)
    n = int(rng.integers(1, max_size + 1)) if max_size > 0 else 0
    gen = np.triu(rng.random((n, n)) < density, k=1)
    return Poset(FinSet.range(n), transitive_closure(gen | np.eye(n, dtype=bool)))


def gen_jsl(seed: Seed, max_size: int) -> Jsl:
    """
    A random join-semilattice with at most *max_size* elements.

    A random order gets a least and a greatest element; orders without all
    binary joins are redrawn, at most ``Config.GEN_RETRIES`` times.

    Raises:
        GenerationExhaustedError: no lattice was found within the retry budget.
    """
    rng = rng_of(seed)
    if max_size < 1:
        raise GenerationExhaustedError("a join-semilattice needs at least one element")
    for attempt in range(Config.GEN_RETRIES):
        n = int(rng.integers(1, max_size + 1))
        gen = np.triu(rng.random((n, n)) < 0.4, k=1)
        gen[0, :] = True
        gen[:, n - 1] = True
        leq = transitive_closure(gen | np.eye(n, dtype=bool))
        try:
            return Jsl(Poset(FinSet.range(n), leq))
        except NoJoinError:
            logger.debug("attempt %d: order of size %d has a missing join", attempt, n)
    raise GenerationExhaustedError(f"no join-semilattice found in {Config.GEN_RETRIES} attempts")


def all_posets(n: int) -> List[Poset]:
    """
    Every order on ``0 … n-1`` contained in the natural order.

    Each poset with *n* elements appears at least once (through a linear
    extension), isomorphic ones usually several times.
    """
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    guard("poset enumeration", len(pairs), Config.MAX_SUBSET_BITS)
    out: Dict[bytes, Poset] = {}
    for mask in range(1 << len(pairs)):
        gen = np.eye(n, dtype=bool)
        for k, (a, b) in enumerate(pairs):
            gen[a, b] = bool(mask >> k & 1)
        leq = transitive_closure(gen)
        out.setdefault(leq.tobytes(), Poset(FinSet.range(n), leq))
    return list(out.values())


def all_lattices(n: int) -> List[Jsl]:
    """
    Every lattice with exactly *n* elements, one per isomorphism class.

    Orders are built on ``0 … n-1`` with 0 least, ``n-1`` greatest and every
    other pair ``a < b`` either related or not; each lattice has such a
    labelling, so trying all of them and dropping isomorphic repeats is complete.
    """
    if n < 1:
        return []
    inner = [(a, b) for a in range(1, n - 1) for b in range(a + 1, n - 1)]
    guard("lattice enumeration", len(inner), Config.MAX_SUBSET_BITS)
    found: List[Jsl] = []
    for mask in range(1 << len(inner)):
        gen = np.eye(n, dtype=bool)
        gen[0, :] = True
        gen[:, n - 1] = True
        for k, (a, b) in enumerate(inner):
            gen[a, b] = bool(mask >> k & 1)
        try:
            q = Jsl(Poset(FinSet.range(n), transitive_closure(gen)))
        except NoJoinError:
            continue
        if all(jsl_isomorphism(q, r) is None for r in found):
            found.append(q)
    logger.debug("%d lattices with %d elements", len(found), n)
    return found


def gen_distributive(seed: Seed, max_size: int) -> Jsl:
    """A random distributive lattice, redrawn from ``gen_jsl`` under the retry budget."""
    rng = rng_of(seed)
    for _ in range(Config.GEN_RETRIES):
        q = gen_jsl(rng, max_size)
        if q.is_distributive():
            return q
    raise GenerationExhaustedError(f"no distributive lattice found in {Config.GEN_RETRIES} attempts")


def gen_ug(seed: Seed, max_v: int, density: float = 0.5) -> UGraph:
    """A random undirected graph on ``0 … n-1``, self-loops allowed."""
    rng = rng_of(seed)
    n = int(rng.integers(0, max_v + 1))
    upper = np.triu(rng.random((n, n)) < density)
    v = FinSet.range(n)
    return UGraph(v, Rel(v, v, upper | upper.T))


def gen_morphism(seed: Seed, q: Jsl, r: Jsl) -> JslMorphism:
    """A uniformly chosen morphism ``q → r`` (the hom-set is enumerated)."""
    return pick(seed, enumerate_morphisms(q, r))


def gen_dep_morphism(seed: Seed, g: Rel, h: Rel, density: float = 0.5) -> DepMorphism:
    """
    A random Dep morphism ``g → h``.

    Small hom-sets are enumerated and sampled uniformly; above that the
    morphism is ``G ; M ; H`` for a random ``M ⊆ Gt × Hs``.
    """
    rng = rng_of(seed)
    if len(h.open_masks) ** len(g.source) <= _ENUMERATE_BELOW:
        return pick(rng, dep_hom(g, h))
    m = rng.random((len(g.target), len(h.source))) < density
    rel = bool_product(bool_product(g.matrix, m), h.matrix)
    return DepMorphism(g, h, Rel(g.source, h.target, rel))


def gen_algebra(seed: Seed, max_size: int, kind: AlgebraKind | str) -> UnaryAlgebra:
    """
    A random algebra of *kind*: a random carrier, then a uniformly chosen σ.

    Raises:
        GenerationExhaustedError: no carrier admitting such a σ was found.
    """
    rng = rng_of(seed)
    for _ in range(Config.GEN_RETRIES):
        algebras: List[UnaryAlgebra] = unary_algebras(gen_jsl(rng, max_size), kind)
        if algebras:
            return pick(rng, algebras)
    raise GenerationExhaustedError(f"no {AlgebraKind(kind).value} algebra found in {Config.GEN_RETRIES} attempts")
