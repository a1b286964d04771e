from __future__ import annotations
"""
Property-check suites.

Each suite draws seeded random instances and checks one family of results
against them. Case ``k`` of a run with seed ``s`` always sees the generator
``default_rng([s, k])``, so runs are reproducible case by case.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from depjsl.checks.generators import (
    gen_algebra,
    gen_dep_morphism,
    gen_distributive,
    gen_jsl,
    gen_morphism,
    gen_poset,
    gen_rel,
    gen_ug,
    pick,
)
from depjsl.checks.oracles import bi_ideal_closure_oracle, bilinear_maps
from depjsl.checks.report import CaseResult, SuiteReport
from depjsl.demorgan.algebra import (
    AlgebraKind,
    UnaryAlgebra,
    algebra_isomorphism,
    algebra_morphisms,
    chain_algebra,
    sigma_violation,
)
from depjsl.demorgan.fixtures import GENERATOR, free_extension, free_one_generated
from depjsl.demorgan.functors import gred_iso, grep_iso, open_g, pirr_g
from depjsl.demorgan.graphs import UGraph, chain_graph, graph_isomorphism, reduced_graph_iso
from depjsl.dep.cover import witness_union
from depjsl.dep.morphism import (
    DepMorphism,
    dep_hom,
    is_dep_epi,
    is_dep_epi_by_open,
    is_dep_mono,
    is_dep_mono_by_open,
)
from depjsl.equivalence.canonical import check_canonical_equalities, factorization_holds
from depjsl.equivalence.completion import dm_completion, dm_preserves_bounds
from depjsl.equivalence.natural import (
    e_natural,
    partial_natural,
    red_iso,
    red_naturality_failure,
    rep_iso,
    rep_naturality_failure,
)
from depjsl.errors import DepJslError, GenerationExhaustedError, UnknownSuiteError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import MonotoneMap, Poset, monotone_maps
from depjsl.finrel.relation import Rel
from depjsl.freecat.duality import alpha_natural, beta_natural, birkhoff_alpha, birkhoff_beta
from depjsl.freecat.free import (
    extend_free_ba,
    extend_free_dl,
    extend_free_jsl,
    free_ba,
    free_ba_object,
    free_dl,
    free_dl_object,
    free_jsl,
    free_jsl_object,
    free_poset,
    is_lattice_morphism,
    lattice_morphisms,
)
from depjsl.io.formats import serialize_jsl, serialize_poset, serialize_rel, serialize_ug
from depjsl.jsl.congruence import (
    cong_to_sub,
    congruence_lattice,
    principal_congruence,
    quotient,
    sub_to_cong,
    subalgebras,
)
from depjsl.jsl.homsets import enumerate_morphisms, hom_semilattice
from depjsl.jsl.morphism import JslMorphism, is_epi, jsl_isomorphism
from depjsl.jsl.semilattice import Jsl, powerset
from depjsl.tensor.bi_ideal import bi_ideal_generated
from depjsl.tensor.product import (
    bimorphism_of,
    canonical_bimorphism,
    extend_bimorphism,
    extend_on_irreducibles,
    is_bilinear,
    tensor,
)
from depjsl.tensor.sync import sync_product, tight_dual_iso
from depjsl.tensor.tight import nu_iso, tight_tensor, ts_iso
from depjsl.utils.config import Config

__all__ = ["Suite", "SUITES", "register_suite", "check_suite", "suite_names"]

logger = logging.getLogger(__name__)

# (instance text, failure detail or None)
CaseOutcome = Tuple[str, Optional[str]]
CaseFn = Callable[[np.random.Generator, int], CaseOutcome]


@dataclass(frozen=True)
class Suite:
    """
    A registered check.

    Attributes:
        name: registry key and CLI name
        statement: the result being checked, in words; printed as the report header
        theorem: the name of that result, printed first in the header
        cap: largest instance size the suite accepts; larger requests are clamped
        run: draws one instance from the generator and checks it
    """

    name: str
    statement: str
    cap: int
    run: CaseFn
    theorem: str = ""


SUITES: Dict[str, Suite] = {}


def register_suite(name: str, statement: str, cap: int = 6, theorem: str = "") -> Callable[[CaseFn], CaseFn]:
    def decorator(fn: CaseFn) -> CaseFn:
        SUITES[name] = Suite(name, statement, cap, fn, theorem)
        return fn

    return decorator


def suite_names() -> List[str]:
    return list(SUITES)


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def _render(value: object) -> str:
    if isinstance(value, (Jsl, UnaryAlgebra)):
        return serialize_jsl(value)
    if isinstance(value, Poset):
        return serialize_poset(value)
    if isinstance(value, UGraph):
        return serialize_ug(value)
    if isinstance(value, Rel):
        return serialize_rel(value)
    if isinstance(value, DepMorphism):
        return serialize_rel(value.rel)
    if isinstance(value, (JslMorphism, MonotoneMap)):
        return "# images: " + " ".join(str(i) for i in value.images) + "\n"
    return f"# {value!r}\n"


def _show(**values: object) -> str:
    """Instances in the text formats, one ``# name`` block each."""
    return "".join(f"# {name}\n{_render(v)}" for name, v in values.items() if v is not None)


def _failed(checks: Dict[str, bool]) -> Optional[str]:
    bad = [name for name, ok in checks.items() if not ok]
    return "failed: " + ", ".join(bad) if bad else None


def _size(rng: np.random.Generator, n: int, low: int = 1) -> int:
    return int(rng.integers(low, max(n, low) + 1))


def _masks(rng: np.random.Generator, full: int, count: int = 8) -> List[int]:
    return [int(rng.integers(0, full + 1)) for _ in range(count)]


def _nonempty_rel(rng: np.random.Generator, n: int) -> Rel:
    a, b = _size(rng, n), _size(rng, n)
    return Rel(FinSet.range(a), FinSet.range(b), rng.random((a, b)) < 0.5)


def _reduced_ug(rng: np.random.Generator, n: int) -> UGraph:
    for _ in range(Config.GEN_RETRIES):
        g = gen_ug(rng, n, density=float(rng.uniform(0.3, 0.7)))
        if g.is_reduced():
            return g
    raise GenerationExhaustedError(f"no reduced graph found in {Config.GEN_RETRIES} attempts")


def _relabel(rng: np.random.Generator, g: UGraph) -> UGraph:
    perm = rng.permutation(len(g))
    m = g.edges.matrix[np.ix_(perm, perm)]
    return UGraph(g.vertices, Rel(g.vertices, g.vertices, m))


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

@register_suite(
    "rel-calculus",
    "Up and down along a relation form a Galois connection that composes; "
    "open sets are closed under unions and closed sets under intersections",
    cap=6,
    theorem="Galois connection of a relation",
)
def _rel_calculus(rng: np.random.Generator, n: int) -> CaseOutcome:
    g = gen_rel(rng, n, n)
    k = _size(rng, n, low=0)
    h = Rel(g.target, FinSet.range(k), rng.random((len(g.target), k)) < 0.5)
    gh, gc = g.compose(h), g.converse()
    fs, ft = g.source.full_mask, g.target.full_mask
    xs, ys, zs = _masks(rng, fs), _masks(rng, ft), _masks(rng, h.target.full_mask)
    opens, closed = set(g.open_masks), set(g.closed_masks)
    checks = {
        "up/down adjunction": all(
            (g.up_mask(x) & ~y == 0) == (x & ~g.down_mask(y) == 0) for x in xs for y in ys
        ),
        "up down up": all(g.up_mask(g.down_mask(g.up_mask(x))) == g.up_mask(x) for x in xs),
        "down up down": all(g.down_mask(g.up_mask(g.down_mask(y))) == g.down_mask(y) for y in ys),
        "up of a composite": all(gh.up_mask(x) == h.up_mask(g.up_mask(x)) for x in xs),
        "down of a composite": all(gh.down_mask(z) == g.down_mask(h.down_mask(z)) for z in zs),
        "down is dual to up": all(g.down_mask(y) == fs & ~gc.up_mask(ft & ~y) for y in ys),
        "open sets": 0 in opens and all(a | b in opens for a in opens for b in opens),
        "closed sets": fs in closed and all(a & b in closed for a in closed for b in closed),
        "reduced implies strict": not g.is_reduced() or len(g.source) == 0 or len(g.target) == 0 or g.is_strict(),
    }
    return _show(g=g, h=h), _failed(checks)


@register_suite(
    "jsl-basics",
    "Every element is the join of the join-irreducibles below it and the meet of the "
    "meet-irreducibles above it; a morphism and its adjoint form a Galois connection",
    cap=6,
    theorem="Irreducible representation and adjoint duality",
)
def _jsl_basics(rng: np.random.Generator, n: int) -> CaseOutcome:
    q = gen_jsl(rng, n)
    r = gen_jsl(rng, min(n, 4))
    f = gen_morphism(rng, q, r)
    fa = f.adjoint()
    checks = {
        "join-irreducible decomposition": all(
            q.join_idx(j for j in q.ji if q.leq[j, x]) == x for x in range(len(q))
        ),
        "meet-irreducible decomposition": all(
            q.meet_idx(m for m in q.mi if q.leq[x, m]) == x for x in range(len(q))
        ),
        "adjunction": all(
            r.leq[f.images[a], b] == q.leq[a, fa.images[b]] for a in range(len(q)) for b in range(len(r))
        ),
        "epi iff surjective": is_epi(f) == f.is_surjective(),
        "double adjoint": fa.adjoint() == f,
    }
    return _show(q=q, r=r, f=f), _failed(checks)


@register_suite(
    "dep-components",
    "The components of a Dep morphism are the largest witnesses, and composing "
    "through either witness gives the same relation",
    cap=4,
    theorem="Maximum witness theorem",
)
def _dep_components(rng: np.random.Generator, n: int) -> CaseOutcome:
    g, h, k = gen_rel(rng, n, n), gen_rel(rng, n, n), gen_rel(rng, n, n)
    r = gen_dep_morphism(rng, g, h)
    s = gen_dep_morphism(rng, h, k)
    left, right = witness_union(r)
    checks = {
        "components are the witness union": left == r.minus and right == r.plus,
        "rel = minus ; cod": r.minus.compose(h) == r.rel,
        "rel = dom ; plus converse": g.compose(r.plus.converse()) == r.rel,
        "composition independent of witness": r.minus.compose(s.rel) == r.rel.compose(s.plus.converse()),
        "mono tests agree": is_dep_mono(r) == is_dep_mono_by_open(r),
        "epi tests agree": is_dep_epi(r) == is_dep_epi_by_open(r),
    }
    return _show(g=g, h=h, k=k, r=r, s=s), _failed(checks)


@register_suite(
    "rep-red",
    "Open and Pirr form an equivalence between Dep and finite join-semilattices: "
    "rep and red are natural isomorphisms",
    cap=5,
    theorem="Open/Pirr equivalence theorem",
)
def _rep_red(rng: np.random.Generator, n: int) -> CaseOutcome:
    q = gen_jsl(rng, n)
    r = gen_jsl(rng, min(n, 4))
    g, h = gen_rel(rng, min(n, 3), min(n, 3)), gen_rel(rng, min(n, 3), min(n, 3))
    seed = int(rng.integers(0, 2**31))
    f = gen_morphism(rng, q, r)
    d = pick(rng, dep_hom(g, h))
    checks = {
        "rep is an isomorphism": rep_iso(q).verify(),
        "rep is natural": rep_naturality_failure(q, r, seed) is None,
        "red is an isomorphism": red_iso(g).verify(),
        "red is natural": red_naturality_failure(g, h, seed) is None,
        "Nleq factors through Pirr": e_natural(f),
        "boundary isomorphism is natural": partial_natural(d),
        "canonical factorization": factorization_holds(g),
        "canonical equalities": all(check_canonical_equalities(q).values()),
    }
    return _show(q=q, r=r, g=g, h=h), _failed(checks)


@register_suite(
    "hom-counts",
    "Irreducible counts: the hom-semilattice has |J(Q)|·|M(R)| meet-irreducibles, the tensor "
    "|J(Q)|·|J(R)| join-irreducibles, the tight tensor |J(Q)|·|J(R)| and |M(Q)|·|M(R)|",
    cap=4,
    theorem="Irreducible counting theorem",
)
def _hom_counts(rng: np.random.Generator, n: int) -> CaseOutcome:
    q, r = gen_jsl(rng, n), gen_jsl(rng, n)
    hom, t, tt = hom_semilattice(q, r), tensor(q, r), tight_tensor(q, r)
    checks = {
        "M(hom)": len(hom.mi) == len(q.ji) * len(r.mi),
        "J(tensor)": len(t.ji) == len(q.ji) * len(r.ji),
        "J(tight tensor)": len(tt.ji) == len(q.ji) * len(r.ji),
        "M(tight tensor)": len(tt.mi) == len(q.mi) * len(r.mi),
    }
    return _show(q=q, r=r), _failed(checks)


@register_suite(
    "congruences",
    "Congruences correspond to subalgebras of the dual; Con Q has |Q|-1 meet-irreducibles "
    "and its join-irreducibles are principal",
    cap=6,
    theorem="Congruence/subalgebra duality theorem",
)
def _congruences(rng: np.random.Generator, n: int) -> CaseOutcome:
    q = gen_jsl(rng, n)
    con = congruence_lattice(q)
    size = len(q)
    principal = {principal_congruence(q, q[a], q[b]) for a in range(size) for b in range(a + 1, size)}
    bound = size * (size - 1) // 2
    checks = {
        "M(Con Q)": len(con.mi) == size - 1,
        "J(Con Q) principal": all(con[j] in principal for j in con.ji),
        "J(Con Q) bound": len(con.ji) <= bound and (size > 2 or len(con.ji) == bound),
        "congruence round trip": all(sub_to_cong(cong_to_sub(theta)) == theta for theta in con.elements),
        "subalgebra round trip": all(cong_to_sub(sub_to_cong(s)) == s for s in subalgebras(q.op())),
        "quotient is onto": all(quotient(theta)[1].is_surjective() for theta in con.elements),
    }
    return _show(q=q), _failed(checks)


@register_suite(
    "bi-ideals",
    "The generated bi-ideal is the intersection of all bi-ideals containing the seed, "
    "and the canonical map into the tensor is bilinear",
    cap=3,
    theorem="Bi-ideal closure theorem",
)
def _bi_ideals(rng: np.random.Generator, n: int) -> CaseOutcome:
    q, r = gen_jsl(rng, n), gen_jsl(rng, n)
    s0 = rng.random((len(q), len(r))) < 0.3
    pairs = frozenset((q[a], r[b]) for a, b in zip(*np.nonzero(s0)))
    checks = {
        "closure matches oracle": bi_ideal_generated(s0, q, r) == bi_ideal_closure_oracle(s0, q, r),
        "canonical map is bilinear": is_bilinear(canonical_bimorphism(q, r), q, r, tensor(q, r)),
    }
    return _show(q=q, r=r, pairs=sorted(map(str, pairs))), _failed(checks)


@register_suite(
    "tensor-universal",
    "Morphisms out of the tensor product correspond exactly to bilinear maps",
    cap=3,
    theorem="Universal property of the tensor product",
)
def _tensor_universal(rng: np.random.Generator, n: int) -> CaseOutcome:
    q, r, s = gen_jsl(rng, n), gen_jsl(rng, n), gen_jsl(rng, n)
    maps = enumerate_morphisms(tensor(q, r), s)
    bil = bilinear_maps(q, r, s)
    as_bil = {frozenset(bimorphism_of(f).items()) for f in maps}
    checks = {
        "same count": len(maps) == len(bil),
        "every morphism gives a bilinear map": as_bil == {frozenset(b.items()) for b in bil},
        "extension inverts restriction": all(extend_bimorphism(bimorphism_of(f), q, r, s) == f for f in maps),
        "irreducibles suffice": all(
            extend_on_irreducibles(b, q, r, s) == extend_bimorphism(b, q, r, s) for b in bil
        ),
    }
    return _show(q=q, r=r, s=s), _failed(checks)


@register_suite(
    "tight-ts",
    "Pirr of the tight tensor is the synchronous product of the Pirr relations; "
    "the synchronous product is reduced exactly when both factors are",
    cap=4,
    theorem="Tight tensor/synchronous product theorem",
)
def _tight_ts(rng: np.random.Generator, n: int) -> CaseOutcome:
    q, r = gen_jsl(rng, n), gen_jsl(rng, n)
    g, h = _nonempty_rel(rng, n), _nonempty_rel(rng, n)
    small_g, small_h = _nonempty_rel(rng, min(n, 2)), _nonempty_rel(rng, min(n, 2))
    try:
        ts_iso(q, r)
        ts_ok = True
    except DepJslError as exc:
        logger.debug("tight tensor iso failed: %s", exc)
        ts_ok = False
    checks = {
        "TS isomorphism": ts_ok,
        "self-duality of the tight tensor": nu_iso(q, r).verify(),
        "reducedness of the synchronous product": sync_product(g, h).is_reduced() == (g.is_reduced() and h.is_reduced()),
        "dual isomorphism of tight morphisms": tight_dual_iso(small_g, small_h).verify(),
    }
    return _show(q=q, r=r, g=g, h=h), _failed(checks)


@register_suite(
    "demorgan",
    "Undirected graphs and finite SAI algebras are equivalent: Open and Pirr on graphs "
    "invert each other up to isomorphism",
    cap=5,
    theorem="SAI/undirected graph equivalence theorem",
)
def _demorgan(rng: np.random.Generator, n: int) -> CaseOutcome:
    graph = gen_ug(rng, n)
    alg = open_g(graph)
    sai = gen_algebra(rng, n, AlgebraKind.SAI)
    other = gen_algebra(rng, min(n, 4), AlgebraKind(pick(rng, [AlgebraKind.SAJ, AlgebraKind.SAM])))
    k = int(rng.integers(0, 9))
    sig, ji, mi = sai.sigma, sai.base.ji, sai.base.mi
    checks = {
        "graph round trip": gred_iso(graph).verify(),
        "algebra round trip": grep_iso(alg).verify() and grep_iso(sai).verify(),
        "reduced graphs come back isomorphic": not graph.is_reduced()
        or graph_isomorphism(graph, pirr_g(alg)) is not None,
        "SAI is SAJ and SAM": sigma_violation(sai.base, sai.array, AlgebraKind.SAJ) is None
        and sigma_violation(sai.base, sai.array, AlgebraKind.SAM) is None,
        "σσσ = σ": all(other.sigma[other.sigma[other.sigma[x]]] == other.sigma[x] for x in range(len(other))),
        "σ maps J onto M": sorted(sig[j] for j in ji) == sorted(mi),
        "chain graph": graph_isomorphism(pirr_g(chain_algebra(k)), chain_graph(k)) is not None,
    }
    return _show(graph=graph, sai=sai, other=other, n=k), _failed(checks)


@register_suite(
    "reduced-iso",
    "Reduced graphs are isomorphic exactly when their De Morgan algebras are",
    cap=6,
    theorem="Reduced graph isomorphism theorem",
)
def _reduced_iso(rng: np.random.Generator, n: int) -> CaseOutcome:
    g1 = _reduced_ug(rng, n)
    g2 = _relabel(rng, g1) if rng.random() < 0.5 else _reduced_ug(rng, n)
    as_graphs = reduced_graph_iso(g1, g2) is not None
    as_algebras = algebra_isomorphism(open_g(g1), open_g(g2)) is not None
    return _show(g1=g1, g2=g2), _failed({"graph iso iff algebra iso": as_graphs == as_algebras})


_FIXTURE_SIZES = {AlgebraKind.SAJ: 12, AlgebraKind.SAM: 9, AlgebraKind.SAI: 6}


@register_suite(
    "free-fixtures",
    "The stored one-generated free SAJ, SAM and SAI algebras have 12, 9 and 6 elements "
    "and each generator assignment extends to exactly one homomorphism",
    cap=4,
    theorem="Free one-generated De Morgan algebras",
)
def _free_fixtures(rng: np.random.Generator, n: int) -> CaseOutcome:
    kind = AlgebraKind(pick(rng, list(_FIXTURE_SIZES)))
    free = free_one_generated(kind)
    target = gen_algebra(rng, n, kind)
    homs = algebra_morphisms(free, target)
    x = free.base.index(GENERATOR)
    counts: Dict[Hashable, int] = {v: 0 for v in target.base.elements}
    for f in homs:
        counts[target.base[f.images[x]]] += 1
    checks = {
        "fixture size": len(free) == _FIXTURE_SIZES[kind],
        "one homomorphism per assignment": all(c == 1 for c in counts.values()),
        "extension is a homomorphism": all(free_extension(kind, target, v) in homs for v in target.base.elements),
    }
    return _show(kind=kind.value, target=target), _failed(checks)


@register_suite(
    "adjunctions",
    "Free constructions from sets to posets to join-semilattices to distributive lattices "
    "to boolean algebras satisfy the triangle identities and their universal properties; "
    "Birkhoff duality is a natural isomorphism",
    cap=4,
    theorem="Free construction adjunctions and Birkhoff duality",
)
def _adjunctions(rng: np.random.Generator, n: int) -> CaseOutcome:
    x = FinSet.range(_size(rng, n, low=0))
    p, p2 = gen_poset(rng, min(n, 3)), gen_poset(rng, min(n, 3))
    q = gen_jsl(rng, n)
    d, d2 = gen_distributive(rng, n), gen_distributive(rng, n)
    b = powerset(FinSet.range(_size(rng, min(n, 2), low=0)))

    fj, fd, fb = free_jsl(p), free_dl(q), free_ba(d)
    g_jsl = pick(rng, monotone_maps(p, q.order))
    g_dl = pick(rng, enumerate_morphisms(q, d))
    g_ba = pick(rng, lattice_morphisms(d, b))
    e_jsl = extend_free_jsl(g_jsl, q)
    e_dl = extend_free_dl(g_dl, d)
    mono = pick(rng, monotone_maps(p, p2))
    lat = pick(rng, lattice_morphisms(d, d2))

    checks = {
        "triangles: posets": free_poset(x).triangle_identities() == (True, True),
        "triangles: join-semilattices": fj.triangle_identities() == (True, True),
        "triangles: distributive lattices": fd.triangle_identities() == (True, True),
        "triangles: boolean algebras": fb.triangle_identities() == (True, True),
        "extension along the join-semilattice unit": all(
            e_jsl.images[fj.unit.images[i]] == g_jsl.images[i] for i in range(len(p))
        ),
        "extension along the distributive unit": is_lattice_morphism(e_dl)
        and all(e_dl.images[fd.unit.images[i]] == g_dl.images[i] for i in range(len(q))),
        "hom-set bijection: join-semilattices": len(enumerate_morphisms(free_jsl_object(p), q))
        == len(monotone_maps(p, q.order)),
        "hom-set bijection: distributive lattices": len(lattice_morphisms(free_dl_object(q), d))
        == len(enumerate_morphisms(q, d)),
        "hom-set bijection: boolean algebras": len(lattice_morphisms(free_ba_object(d), b))
        == len(lattice_morphisms(d, b)),
        "birkhoff alpha": birkhoff_alpha(p).is_bijective() and birkhoff_alpha(p).is_order_embedding(),
        "birkhoff beta": birkhoff_beta(d).is_injective() and birkhoff_beta(d).is_surjective(),
        "alpha natural": alpha_natural(mono),
        "beta natural": lat is None or beta_natural(lat),
    }
    if g_ba is not None:
        e_ba = extend_free_ba(g_ba, b)
        checks["extension along the boolean unit"] = all(
            e_ba.images[fb.unit.images[i]] == g_ba.images[i] for i in range(len(d))
        )
    return _show(x=list(x), p=p, p2=p2, q=q, d=d, d2=d2, b=b), _failed(checks)


@register_suite(
    "dm",
    "The Dedekind-MacNeille completion embeds a poset keeping all existing joins and meets, "
    "and completes a lattice to itself",
    cap=6,
    theorem="Dedekind-MacNeille completion theorem",
)
def _dm(rng: np.random.Generator, n: int) -> CaseOutcome:
    p = gen_poset(rng, n)
    q = gen_jsl(rng, n)
    _, e = dm_completion(p)
    checks = {
        "order-embedding": e.is_order_embedding(),
        "existing bounds kept": dm_preserves_bounds(p),
        "lattice completes to itself": jsl_isomorphism(dm_completion(q.order)[0], q) is not None,
    }
    return _show(p=p, q=q), _failed(checks)


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

def check_suite(
    name: str,
    max_size: int,
    cases: int,
    seed: Optional[int] = None,
    progress: bool = False,
) -> SuiteReport:
    """
    Run *cases* instances of a suite, stopping at the first counterexample.

    Args:
        name: registered suite name
        max_size: largest instance size; clamped to the suite's cap
        cases: number of instances
        seed: base seed (``Config.SEED`` when omitted)
        progress: show a tqdm progress bar on stderr

    Returns:
        The report; ``passed`` is False and ``counterexample`` is set on failure.

    Raises:
        UnknownSuiteError: *name* is not registered.
    """
    suite = SUITES.get(name)
    if suite is None:
        raise UnknownSuiteError(f"unknown suite {name!r} (registered: {', '.join(SUITES)})", witness=name)
    seed = Config.SEED if seed is None else seed
    size = min(max_size, suite.cap)
    if size < max_size:
        logger.debug("suite %s caps instance size at %d", name, size)
    report = SuiteReport(
        suite=name, theorem=suite.theorem, statement=suite.statement, seed=seed, max_size=size, cases=cases
    )
    results: List[CaseResult] = []
    for index in tqdm(range(cases), desc=name, disable=not progress):
        rng = np.random.default_rng([seed, index])
        instance, detail = suite.run(rng, size)
        result = CaseResult(index=index, instance=instance, passed=detail is None, detail=detail)
        results.append(result)
        if detail is not None:
            logger.debug("suite %s failed at case %d: %s", name, index, detail)
            report.passed = False
            report.counterexample = result
            break
    report.results = results
    return report
