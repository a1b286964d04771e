import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from depjsl.checks.generators import gen_distributive, gen_jsl, gen_morphism, gen_rel, pick
from depjsl.checks.oracles import bi_ideal_closure_oracle, bilinear_maps
from depjsl.dep.morphism import dep_empty, dep_hom
from depjsl.equivalence.functors import open_mor, open_obj, pirr_obj
from depjsl.errors import NotBilinearError, NotTightError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.relation import Rel
from depjsl.jsl.homsets import enumerate_morphisms, is_tight, special_up
from depjsl.jsl.morphism import identity, is_iso
from depjsl.jsl.semilattice import chain, m_n, powerset
from depjsl.tensor.bi_ideal import (
    bi_ideal_generated,
    bottom_bi_ideal,
    is_bi_ideal,
    top_bi_ideal,
)
from depjsl.tensor.product import (
    bimorphism_of,
    canonical_bimorphism,
    extend_bimorphism,
    extend_on_irreducibles,
    is_bilinear,
    tensor,
    tensor_mor,
    tensor_swap,
    tensor_unit,
)
from depjsl.tensor.sync import (
    basic_biclique,
    basic_independent,
    dep_top,
    is_tight_dep,
    rtup,
    rtup_inverse,
    sync_product,
    tight_dual_iso,
    tight_dep_hom,
)
from depjsl.tensor.tight import nu_iso, tight_curry, tight_hom, tight_tensor, ts_iso, ts_natural
from tests.strategies import jsls, rels

seeds = st.integers(0, 2**32 - 1)


# ---------------------------------------------------------------------------
# bi-ideals
# ---------------------------------------------------------------------------

def test_bottom_and_top_bi_ideals(chain3, m3):
    assert is_bi_ideal(bottom_bi_ideal(chain3, m3).matrix, chain3, m3)
    assert is_bi_ideal(top_bi_ideal(chain3, m3).matrix, chain3, m3)
    assert bi_ideal_generated(set(), chain3, m3) == bottom_bi_ideal(chain3, m3)
    everything = {(a, b) for a in chain3.elements for b in m3.elements}
    assert bi_ideal_generated(everything, chain3, m3) == top_bi_ideal(chain3, m3)


def test_down_closure_alone_is_not_enough(m3):
    two = chain(2)
    # ↓(1, a1) ∪ ↓(1, a2) misses the lateral join (1, 1)
    pairs = {(0, x) for x in m3.elements} | {(a, "0") for a in two.elements}
    pairs |= {(1, "a1"), (1, "a2")}
    assert not is_bi_ideal(pairs, two, m3)
    assert (1, "1") in bi_ideal_generated(pairs, two, m3)


@given(jsls(3), jsls(3), seeds)
@settings(max_examples=30, deadline=None)
def test_generated_bi_ideal_matches_intersection(q, r, seed):
    s0 = np.random.default_rng(seed).random((len(q), len(r))) < 0.3
    assert bi_ideal_generated(s0, q, r) == bi_ideal_closure_oracle(s0, q, r)


# ---------------------------------------------------------------------------
# tensor product
# ---------------------------------------------------------------------------

@given(jsls(4), jsls(4))
@settings(max_examples=25, deadline=None)
def test_tensor_join_irreducibles(q, r):
    assert len(tensor(q, r).ji) == len(q.ji) * len(r.ji)


@given(jsls(4))
@settings(max_examples=20, deadline=None)
def test_tensor_unit_and_swap(q):
    assert is_iso(tensor_unit(q))
    assert is_iso(tensor_swap(q, chain(3)))


@given(seeds)
@settings(max_examples=15, deadline=None)
def test_tensor_of_distributive_is_distributive(seed):
    q, r = gen_distributive(seed, 4), gen_distributive(seed + 1, 4)
    assert tensor(q, r).is_distributive()


def test_canonical_bimorphism_extends_to_identity(chain3, m3):
    b = canonical_bimorphism(chain3, m3)
    t = tensor(chain3, m3)
    assert is_bilinear(b, chain3, m3, t)
    assert extend_bimorphism(b, chain3, m3, t) == identity(t)


def test_non_bilinear_map_rejected(chain3):
    two = chain(2)
    constant_top = {(a, b): 1 for a in two.elements for b in chain3.elements}
    with pytest.raises(NotBilinearError):
        extend_bimorphism(constant_top, two, chain3, two)


@given(jsls(3), jsls(3), jsls(3))
@settings(max_examples=20, deadline=None)
def test_universal_property(q, r, s):
    maps = enumerate_morphisms(tensor(q, r), s)
    bil = bilinear_maps(q, r, s)
    assert len(maps) == len(bil)
    for f in maps:
        b = bimorphism_of(f)
        assert extend_bimorphism(b, q, r, s) == f
        assert extend_on_irreducibles(b, q, r, s) == f


@given(jsls(3), jsls(3))
@settings(max_examples=15, deadline=None)
def test_tensor_of_identities(q, r):
    assert tensor_mor(identity(q), identity(r)) == identity(tensor(q, r))


# ---------------------------------------------------------------------------
# tight tensor
# ---------------------------------------------------------------------------

@given(jsls(4), jsls(4))
@settings(max_examples=25, deadline=None)
def test_tight_tensor_irreducibles(q, r):
    t = tight_tensor(q, r)
    assert len(t.ji) == len(q.ji) * len(r.ji)
    assert len(t.mi) == len(q.mi) * len(r.mi)


@given(jsls(4), seeds)
@settings(max_examples=20, deadline=None)
def test_tight_hom_with_distributive_side(q, seed):
    d = gen_distributive(seed, 4)
    assert len(tight_hom(q, d)) == len(enumerate_morphisms(q, d))
    assert len(tight_hom(d, q)) == len(enumerate_morphisms(d, q))


def test_tight_part_of_m3_endomorphisms(m3):
    tight = tight_hom(m3, m3)
    assert len(tight.ji) == 9
    assert identity(m3) not in tight


@given(jsls(3), jsls(3))
@settings(max_examples=20, deadline=None)
def test_nu_is_an_isomorphism(q, r):
    assert nu_iso(q, r).verify()


def test_ts_on_two_element_chains():
    two = chain(2)
    iso, src, tgt = ts_iso(two, two)
    assert len(iso.dom.source) == len(iso.dom.target) == 1
    assert len(iso.cod.source) == len(iso.cod.target) == 1


@given(jsls(4), jsls(4))
@settings(max_examples=25, deadline=None)
def test_ts_edge_count(q, r):
    iso, _, _ = ts_iso(q, r)
    assert len(iso.dom) == len(pirr_obj(q)) * len(pirr_obj(r))


@given(jsls(3), jsls(3), seeds)
@settings(max_examples=15, deadline=None)
def test_ts_naturality(q, r, seed):
    f = gen_morphism(seed, q, gen_jsl(seed + 1, 3))
    g = gen_morphism(seed + 2, r, gen_jsl(seed + 3, 3))
    assert ts_natural(f, g)


def test_curry_tight_morphism(chain3):
    two = chain(2)
    t = tight_tensor(two, chain3)
    s = powerset(["u"])
    for f in enumerate_morphisms(t, s):
        curried = tight_curry(f, two, chain3, s)
        for a in two.elements:
            for b in chain3.elements:
                assert curried(a)(b) == f(special_up(two.op(), chain3, a, b))


def test_curry_rejects_non_tight(m3):
    two = chain(2)
    t = tight_tensor(m3, two)
    with pytest.raises(NotTightError):
        tight_curry(identity(t), m3, two, t)


# ---------------------------------------------------------------------------
# synchronous product and tight Dep morphisms
# ---------------------------------------------------------------------------

def test_sync_of_identities():
    x, y = FinSet.of("a", "b"), FinSet.of(1, 2, 3)
    assert sync_product(Rel.identity(x), Rel.identity(y)) == Rel.identity(x.product(y))


@given(rels(3, 3), rels(3, 3))
@settings(max_examples=40, deadline=None)
def test_sync_rows_are_products(g, h):
    gh = sync_product(g, h)
    for x in g.source:
        for x2 in h.source:
            expected = {(a, b) for a in g.image(x) for b in h.image(x2)}
            assert gh.image((x, x2)) == expected


@given(rels(3, 3, min_size=1), rels(3, 3, min_size=1))
@settings(max_examples=60, deadline=None)
def test_sync_reducedness(g, h):
    assert sync_product(g, h).is_reduced() == (g.is_reduced() and h.is_reduced())


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_bicliques_and_independents(seed):
    g, h = gen_rel(seed, 3, 3), gen_rel(seed + 1, 3, 3)
    assume(len(g.target) and len(h.source) and len(g.source) and len(h.target))
    og, oh = open_obj(g), open_obj(h)
    gt, hs = g.target[0], h.source[-1]
    b = basic_biclique(g, h, gt, hs)
    assert is_tight_dep(b)
    inside = g.target.subset(g.interior_mask(g.target.full_mask & ~1))
    assert open_mor(b) == special_up(og, oh, inside, h.image(hs))

    r = pick(seed + 2, dep_hom(g, h))
    for x in g.source:
        for y in h.target:
            assert r.issubset(basic_independent(g, h, x, y)) == ((x, y) not in r.rel)
    assert r.issubset(dep_top(g, h))
    assert is_tight_dep(r) == is_tight(open_mor(r))[0]


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_tight_dual_iso(seed):
    g, h = gen_rel(seed, 2, 2), gen_rel(seed + 1, 2, 2)
    assert tight_dual_iso(g, h).verify()


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_rtup_round_trip(seed):
    g, h, i = gen_rel(seed, 2, 2), gen_rel(seed + 1, 2, 2), gen_rel(seed + 2, 2, 2)
    dom = sync_product(g, h)
    for r in tight_dep_hom(dom, i):
        s = rtup(r, g, h)
        assert is_tight_dep(s)
        assert rtup_inverse(s, h, i) == r
    assert rtup(dep_empty(dom, i), g, h) == dep_empty(g, sync_product(h.converse(), i))


def test_rtup_of_basic_biclique(example_rel):
    g = example_rel
    h = Rel.identity(FinSet.of("p", "q"))
    i = Rel.from_rows(FinSet.of("s"), FinSet.of("t1", "t2"), {"s": ["t1"]})
    b = basic_biclique(sync_product(g, h), i, ("y3", "p"), "s")
    cod = sync_product(h.converse(), i)
    assert rtup(b, g, h) == basic_biclique(g, cod, "y3", ("p", "s"))
