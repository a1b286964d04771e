from __future__ import annotations
"""
Canonical embeddings and quotients, tight extensions and the
degenerate isomorphisms ``≰_S|X×Y ≅ Pirr S``.
"""

from typing import Dict, Hashable, Iterable, Tuple

import numpy as np

from depjsl.errors import CarrierMismatchError
from depjsl.finrel.relation import Rel
from depjsl.dep.morphism import DepMorphism
from depjsl.equivalence.functors import Iso, open_index, open_obj, pirr_obj
from depjsl.jsl.morphism import JslMorphism, compose
from depjsl.jsl.semilattice import Jsl, powerset, powerset_base
from depjsl.utils.config import Config, guard

__all__ = [
    "canonical_embed",
    "canonical_quotient",
    "canonical_factorization",
    "factorization_holds",
    "check_canonical_equalities",
    "tight_extend_left",
    "tight_extend_right",
    "tight_extension_left_holds",
    "tight_extension_right_holds",
    "degenerate_iso",
]


def _element_index(p: Jsl) -> Dict[Hashable, int]:
    return {x: i for i, x in enumerate(p.elements)}


def canonical_embed(q: Jsl) -> JslMorphism:
    """``e_Q : Q ↣ P M(Q)``, ``e(x) = { m : x ≰ m }``."""
    target = powerset(q.mi_set)
    idx = _element_index(target)
    images = tuple(
        idx[frozenset(q[m] for m in q.mi if not q.leq[x, m])] for x in range(len(q))
    )
    return JslMorphism(q, target, images)


def canonical_quotient(q: Jsl) -> JslMorphism:
    """``σ_Q : P J(Q) ↠ Q``, ``σ(S) = ⋁S``."""
    source = powerset(q.ji_set)
    return JslMorphism(source, q, tuple(q.index(q.join_all(s)) for s in source.elements))


def canonical_factorization(g: Rel) -> Tuple[JslMorphism, JslMorphism]:
    """
    The (surjection, inclusion) factorisation of ``G↑``.

    Returns:
        ``(σ_G, ι_G)`` with ``σ_G : P(Gs) ↠ Open G``, ``S ↦ G[S]`` and
        ``ι_G : Open G ↣ P(Gt)`` the inclusion.
    """
    guard("power set of relation carrier", max(len(g.source), len(g.target)), Config.MAX_SUBSET_BITS)
    og = open_obj(g)
    oidx = open_index(g)
    src = powerset(g.source)
    sigma = JslMorphism(src, og, tuple(oidx[g.up_mask(g.source.mask(s))] for s in src.elements))
    tgt = powerset(g.target)
    tidx = _element_index(tgt)
    iota = JslMorphism(og, tgt, tuple(tidx[y] for y in og.elements))
    return sigma, iota


def factorization_holds(g: Rel) -> bool:
    sigma, iota = canonical_factorization(g)
    both = compose(sigma, iota)
    return all(both(s) == g.up(s) for s in sigma.dom.elements)


def check_canonical_equalities(q: Jsl) -> Dict[str, bool]:
    """
    Check the three equalities relating ``e`` and ``σ``.

    ``a``: ``(Pirr Q)↑ = e_Q ∘ σ_Q``;
    ``b``: ``σ_Q(S) = (e_{Q^op})_*(J(Q) \\ S)``;
    ``c``: ``e_Q(x) = M(Q) \\ (σ_{Q^op})_*(x)``.
    """
    p = pirr_obj(q)
    e, s = canonical_embed(q), canonical_quotient(q)
    es = compose(s, e)
    a = all(es(x) == p.up(x) for x in s.dom.elements)

    all_j = frozenset(q.join_irreducibles())
    e_op_adj = canonical_embed(q.op()).adjoint()
    b = all(e_op_adj(all_j - x) == s(x) for x in s.dom.elements)

    all_m = frozenset(q.meet_irreducibles())
    s_op_adj = canonical_quotient(q.op()).adjoint()
    c = all(e(x) == all_m - s_op_adj(x) for x in q.elements)
    return {"a": a, "b": b, "c": c}


def _singleton_images(f: JslMorphism, z) -> list:
    return [f.images[f.dom.index(frozenset({x}))] for x in z]


def tight_extend_left(f: JslMorphism) -> Rel:
    """``Jf = { (z, j) : j ≤ f({z}) }`` for ``f : P Z → Q``."""
    z = powerset_base(f.dom)
    q = f.cod
    cols = _singleton_images(f, z)
    m = q.leq[np.ix_(list(q.ji), cols)].T.reshape(len(z), len(q.ji))
    return Rel(z, q.ji_set, m)


def tight_extend_right(f: JslMorphism) -> Rel:
    """``Mf = { (m, z) : f_*(Z \\ {z}) ≤ m }`` for ``f : Q → P Z``."""
    z = powerset_base(f.cod)
    q = f.dom
    full = frozenset(z.elements)
    adj = f.adjoint()
    coat = [q.index(adj(full - {x})) for x in z]
    m = q.leq[np.ix_(coat, list(q.mi))].T.reshape(len(q.mi), len(z))
    return Rel(q.mi_set, z, m)


def tight_extension_left_holds(f: JslMorphism) -> bool:
    """``σ_Q ∘ (Jf)↑ = f``."""
    jf = tight_extend_left(f)
    return all(f.cod.join_all(jf.up(s)) == f(s) for s in f.dom.elements)


def tight_extension_right_holds(f: JslMorphism) -> bool:
    """``(Mf)↑ ∘ e_Q = f``."""
    mf = tight_extend_right(f)
    e = canonical_embed(f.dom)
    return all(mf.up(e(x)) == f(x) for x in f.dom.elements)


def degenerate_iso(s: Jsl, xs: Iterable[Hashable], ys: Iterable[Hashable]) -> Tuple[Rel, Iso]:
    """
    For ``J(S) ⊆ X`` and ``M(S) ⊆ Y``, the restriction ``≰_S|X×Y`` with its
    Dep-isomorphism from ``Pirr S``.

    The forward morphism is ``{ (j, y) : j ≰ y }``, the backward one
    ``{ (x, m) : x ≰ m }``.
    """
    xmask, ymask = s.carrier.mask(xs), s.carrier.mask(ys)
    if s.ji_mask & ~xmask:
        raise CarrierMismatchError("X must contain every join-irreducible")
    if s.mi_mask & ~ymask:
        raise CarrierMismatchError("Y must contain every meet-irreducible")
    xi = [i for i in range(len(s)) if xmask >> i & 1]
    yi = [i for i in range(len(s)) if ymask >> i & 1]
    x_set, y_set = s.carrier.restrict(xmask), s.carrier.restrict(ymask)
    restricted = Rel(x_set, y_set, ~s.leq[np.ix_(xi, yi)])
    p = pirr_obj(s)
    forward = DepMorphism(p, restricted, Rel(p.source, y_set, ~s.leq[np.ix_(list(s.ji), yi)]))
    backward = DepMorphism(restricted, p, Rel(x_set, p.target, ~s.leq[np.ix_(xi, list(s.mi))]))
    return restricted, Iso(forward, backward)
