from __future__ import annotations
"""
Tight morphisms and the tight tensor product ``Q ⊗_t R = Tight[Q^op, R]``.

Tight morphisms are joins of the special morphisms ``↑^{m,j}`` with
``m ∈ M(dom)`` and ``j ∈ J(cod)``, so ``tight_hom`` is built as the join
closure of those generators rather than by filtering the whole hom-set.
"""

import logging
from functools import lru_cache
from typing import Dict, Hashable, List, Tuple

import numpy as np

from depjsl.errors import FactorizationError, NotTightError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import Poset
from depjsl.dep.morphism import DepMorphism, dep_compose
from depjsl.dep.reduction import bipartite_iso
from depjsl.equivalence.functors import Iso, pirr_mor, pirr_obj
from depjsl.jsl.homsets import is_tight, pointwise_order, special_down, special_up
from depjsl.jsl.morphism import JslMorphism, compose
from depjsl.jsl.semilattice import Jsl
from depjsl.tensor.sync import sync_on_morphisms, sync_product
from depjsl.utils.config import Config, guard

__all__ = [
    "tight_hom",
    "tight_tensor",
    "tight_index",
    "tight_bimorphism",
    "tight_tensor_mor",
    "tight_curry",
    "nu",
    "nu_iso",
    "ts_iso",
    "ts_natural",
]

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def _join_closure(gens: List[Tuple[int, ...]], r: Jsl, bottom: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    seen = {bottom}
    frontier = [bottom]
    gen_arrays = [np.array(g, dtype=np.int64) for g in set(gens)]
    while frontier:
        nxt = []
        for f in frontier:
            fa = np.array(f, dtype=np.int64)
            for g in gen_arrays:
                h = tuple(int(v) for v in r.join_table[fa, g])
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        guard("tight morphisms", len(seen), Config.MAX_ENUMERATION)
        frontier = nxt
    return list(seen)


def _height(images: Tuple[int, ...], r: Jsl) -> int:
    sizes = r.leq.sum(axis=0)
    return int(sum(sizes[i] for i in images))


# ---------------------------------------------------------------------------
# tight hom-sets and tensors
# ---------------------------------------------------------------------------

@lru_cache(maxsize=128)
def tight_hom(q: Jsl, r: Jsl) -> Jsl:
    """``Tight[Q, R]``: tight morphisms ``q → r`` under the pointwise order."""
    gens = [special_up(q, r, q[m], r[j]).images for m in q.mi for j in r.ji]
    bottom = (r.bot,) * len(q)
    images = _join_closure(gens, r, bottom)
    images.sort(key=lambda im: (_height(im, r), im))
    maps = [JslMorphism(q, r, im) for im in images]
    logger.debug("%d tight morphisms between sizes %d and %d", len(maps), len(q), len(r))
    return Jsl(Poset(FinSet(tuple(maps)), pointwise_order(maps, r)))


def tight_tensor(q: Jsl, r: Jsl) -> Jsl:
    """``Q ⊗_t R = Tight[Q^op, R]``."""
    return tight_hom(q.op(), r)


def tight_index(t: Jsl) -> Dict[JslMorphism, int]:
    return {f: i for i, f in enumerate(t.elements)}


def tight_bimorphism(q: Jsl, r: Jsl) -> Dict[Tuple[Hashable, Hashable], JslMorphism]:
    """``β^t(a, b) = ↑^{a,b}`` over ``Q^op × R``."""
    qo = q.op()
    return {(a, b): special_up(qo, r, a, b) for a in q.elements for b in r.elements}


def tight_tensor_mor(f: JslMorphism, g: JslMorphism) -> JslMorphism:
    """``f ⊗_t g : h ↦ g ∘ h ∘ f_*``."""
    src, tgt = tight_tensor(f.dom, g.dom), tight_tensor(f.cod, g.cod)
    idx = tight_index(tgt)
    fa = f.adjoint()
    return JslMorphism(src, tgt, tuple(idx[compose(compose(fa, h), g)] for h in src.elements))


def tight_curry(f: JslMorphism, q: Jsl, r: Jsl, s: Jsl) -> JslMorphism:
    """
    ``f ↦ λa.λb. f(β^t(a, b))`` for tight ``f : Q ⊗_t R → S``.

    Returns the tight morphism ``q → tight_hom(r, s)``.
    """
    ok, _ = is_tight(f)
    if not ok:
        raise NotTightError("currying needs a tight morphism", witness=f.as_dict())
    inner = tight_hom(r, s)
    idx = tight_index(inner)
    qo = q.op()
    images = []
    for a in q.elements:
        g = JslMorphism(r, s, tuple(f.images[f.dom.index(special_up(qo, r, a, b))] for b in r.elements))
        images.append(idx[g])
    return JslMorphism(q, inner, tuple(images))


# ---------------------------------------------------------------------------
# self-duality ν
# ---------------------------------------------------------------------------

def nu(f: JslMorphism) -> JslMorphism:
    """
    ``ν(f) : A^op → B^op`` for ``f : A → B``.

    ``ν(f)(x) = ⋁_{B^op}{ j ∈ J(B^op) : f_*(j) ≰_A x }``.
    """
    a = f.dom
    bop = f.cod.op()
    adj = f.adjoint()
    images = []
    for x in range(len(a)):
        images.append(bop.join_idx(j for j in bop.ji if not a.leq[adj.images[j], x]))
    return JslMorphism(a.op(), bop, tuple(images))


def nu_iso(q: Jsl, r: Jsl) -> Iso:
    """``ν : (Q^op ⊗_t R^op)^op → Q ⊗_t R`` with inverse ``ν`` of the dual algebras."""
    src = tight_tensor(q.op(), r.op()).op()
    tgt = tight_tensor(q, r)
    idx_t, idx_s = tight_index(tgt), tight_index(src)
    fwd = tuple(idx_t[nu(f)] for f in src.elements)
    bwd = tuple(idx_s[nu(g)] for g in tgt.elements)
    return Iso(JslMorphism(src, tgt, fwd), JslMorphism(tgt, src, bwd))


# ---------------------------------------------------------------------------
# tight tensor vs synchronous product
# ---------------------------------------------------------------------------

def ts_iso(q: Jsl, r: Jsl) -> Tuple[DepMorphism, Dict[JslMorphism, Tuple], Dict[JslMorphism, Tuple]]:
    """
    ``Pirr(Q ⊗_t R) ≅ Pirr Q ⊙ Pirr R``.

    Returns:
        ``(iso, src, tgt)`` with ``src: ↑^{j1,j2} ↦ (j1, j2)`` and
        ``tgt: ↓^{m1,m2} ↦ (m1, m2)``.
    """
    t = tight_tensor(q, r)
    qo = q.op()
    ups = {special_up(qo, r, j1, j2): (j1, j2) for j1 in q.join_irreducibles() for j2 in r.join_irreducibles()}
    downs = {special_down(qo, r, m1, m2): (m1, m2) for m1 in q.meet_irreducibles() for m2 in r.meet_irreducibles()}
    try:
        src = {t[j]: ups[t[j]] for j in t.ji}
        tgt = {t[m]: downs[t[m]] for m in t.mi}
    except KeyError as exc:
        raise FactorizationError("irreducible of the tight tensor is not a special morphism", witness=exc.args[0]) from None
    iso = bipartite_iso(pirr_obj(t), sync_product(pirr_obj(q), pirr_obj(r)), src, tgt)
    return iso, src, tgt


def ts_natural(f: JslMorphism, g: JslMorphism) -> bool:
    """``Pirr(f ⊗_t g) ; TS = TS ; (Pirr f ⊙ Pirr g)``."""
    left = dep_compose(pirr_mor(tight_tensor_mor(f, g)), ts_iso(f.cod, g.cod)[0])
    right = dep_compose(ts_iso(f.dom, g.dom)[0], sync_on_morphisms(pirr_mor(f), pirr_mor(g)))
    return left == right
