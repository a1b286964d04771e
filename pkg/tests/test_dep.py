import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from depjsl.checks.generators import gen_dep_morphism, gen_rel
from depjsl.dep.cover import (
    WitnessPair,
    cover_close,
    cover_compose,
    enumerate_witness_pairs,
    witness_options,
    witness_union,
)
from depjsl.dep.morphism import (
    DepMorphism,
    components,
    dep_compose,
    dep_dual,
    dep_empty,
    dep_identity,
    dep_inverse,
    dep_validate,
    is_dep_epi,
    is_dep_epi_by_open,
    is_dep_mono,
    is_dep_mono_by_open,
)
from depjsl.dep.reduction import bipartite_iso, dep_reduce, dep_reduce_inverse, find_bipartite_iso
from depjsl.equivalence.functors import Iso, open_obj, pirr_obj
from depjsl.errors import CarrierMismatchError, InvalidWitnessError, NotDepMorphismError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import chain_poset
from depjsl.finrel.relation import Rel
from depjsl.jsl.morphism import jsl_isomorphism
from depjsl.jsl.semilattice import chain

seeds = st.integers(0, 2**32 - 1)


def _pair(seed):
    g, h = gen_rel(seed, 3, 3), gen_rel(seed + 1, 3, 3)
    return gen_dep_morphism(seed + 2, g, h)


def _triple(seed):
    g, h, k = gen_rel(seed, 3, 3), gen_rel(seed + 1, 3, 3), gen_rel(seed + 2, 3, 3)
    return gen_dep_morphism(seed + 3, g, h), gen_dep_morphism(seed + 4, h, k)


def test_identity_components_on_order():
    le = chain_poset(3).relation
    minus, plus = components(le, le, le)
    assert minus == le
    assert plus == le.converse()


@pytest.mark.parametrize("images,valid", [((0, 0), True), ((0, 1), True), ((1, 1), True), ((1, 0), False)])
def test_function_then_order_is_dep_iff_monotone(images, valid):
    le = chain_poset(2).relation
    rows = {x: [y for y in (0, 1) if images[x] <= y] for x in (0, 1)}
    rel = Rel.from_rows(le.source, le.target, rows)
    if valid:
        dep_validate(rel, le, le)
    else:
        with pytest.raises(NotDepMorphismError):
            dep_validate(rel, le, le)


def test_carriers_are_checked(example_rel):
    other = Rel.identity(FinSet.range(2))
    with pytest.raises(CarrierMismatchError):
        DepMorphism(example_rel, other, example_rel)


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_empty_morphism_always_valid(seed):
    g, h = gen_rel(seed, 3, 3), gen_rel(seed + 1, 3, 3)
    e = dep_empty(g, h)
    assert len(e) == 0
    isolated = [i for i, row in enumerate(h.rows) if row == 0]
    assert all(e.minus.matrix[:, i].all() for i in isolated)


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_components_are_witness_union(seed):
    r = _pair(seed)
    assert witness_union(r) == (r.minus, r.plus)
    assert r.minus.compose(r.cod) == r.rel
    assert r.dom.compose(r.plus.converse()) == r.rel


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_components_contain_every_witness(seed):
    r = _pair(seed)
    left, right = witness_options(r)
    assume(int(np.prod([len(opts) for opts in left + right])) <= 2000)
    for w in enumerate_witness_pairs(r):
        assert w.left.issubset(r.minus)
        assert w.right.issubset(r.plus)


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_identity_laws(seed):
    r = _pair(seed)
    assert dep_compose(dep_identity(r.dom), r) == r
    assert dep_compose(r, dep_identity(r.cod)) == r


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_up_of_composite(seed):
    r, s = _triple(seed)
    rs = dep_compose(r, s)
    h = r.cod
    for i in range(len(r.dom.source)):
        x = 1 << i
        assert rs.rel.up_mask(x) == s.rel.up_mask(h.down_mask(r.rel.up_mask(x)))


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_associativity(seed):
    r, s = _triple(seed)
    k = s.cod
    t = gen_dep_morphism(seed + 5, k, gen_rel(seed + 6, 3, 3))
    assert dep_compose(dep_compose(r, s), t) == dep_compose(r, dep_compose(s, t))


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_duality(seed):
    r, s = _triple(seed)
    d = dep_dual(r)
    assert dep_dual(d) == r
    assert d.minus == r.plus and d.plus == r.minus
    assert dep_dual(dep_compose(r, s)) == dep_compose(dep_dual(s), dep_dual(r))


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_mono_epi_characterisations(seed):
    r = _pair(seed)
    assert is_dep_mono(r) == is_dep_mono_by_open(r)
    assert is_dep_epi(r) == is_dep_epi_by_open(r)
    assert is_dep_epi(r) == is_dep_mono(dep_dual(r))


def test_identity_is_mono_epi_and_self_inverse(example_rel):
    ident = dep_identity(example_rel)
    assert is_dep_mono(ident) and is_dep_epi(ident)
    assert dep_inverse(ident) == ident


def test_bipartite_iso_with_three_chain():
    g = Rel.from_rows(FinSet.of("x1", "x2"), FinSet.of("y1", "y2"), {"x1": ["y1"], "x2": ["y1", "y2"]})
    p = pirr_obj(chain(3))
    found = find_bipartite_iso(g, p)
    assert found is not None
    iso = bipartite_iso(g, p, *found)
    inv = dep_inverse(iso)
    assert inv is not None
    assert Iso(iso, inv).verify()


def test_bipartite_iso_rejects_bad_bijection(example_rel):
    ident = {x: x for x in example_rel.source}
    tgt = {"y1": "y3", "y2": "y2", "y3": "y1"}
    with pytest.raises(NotDepMorphismError):
        bipartite_iso(example_rel, example_rel, ident, tgt)


def test_non_iso_has_no_inverse(example_rel):
    assert dep_inverse(dep_empty(example_rel, example_rel)) is None


# ---------------------------------------------------------------------------
# witness closure
# ---------------------------------------------------------------------------

def test_close_diagonal_witness(example_rel):
    g = example_rel
    w = WitnessPair(Rel.identity(g.source), Rel.identity(g.target))
    ident = dep_identity(g)
    assert cover_close(w, g, g) == (ident.minus, ident.plus)


def test_invalid_witness(example_rel):
    g = example_rel
    w = WitnessPair(Rel.empty(g.source, g.source), Rel.identity(g.target))
    with pytest.raises(InvalidWitnessError):
        cover_close(w, g, g)


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_closing_maximum_witness_is_fixpoint(seed):
    r = _pair(seed)
    assert cover_close(WitnessPair(r.minus, r.plus), r.dom, r.cod) == (r.minus, r.plus)


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_close_once_after_chain(seed):
    r, s = _triple(seed)
    w = cover_compose(WitnessPair(r.minus, r.plus), WitnessPair(s.minus, s.plus))
    rs = dep_compose(r, s)
    assert cover_close(w, r.dom, s.cod) == (rs.minus, rs.plus)


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------

def test_reduce_complete_bipartite():
    g = Rel.full(FinSet.of("x1", "x2"), FinSet.of("y"))
    reduced, iso = dep_reduce(g)
    assert list(reduced.source) == ["x1"]
    assert reduced.is_reduced()
    assert dep_inverse(iso) is not None


def test_reduce_example(example_rel):
    reduced, _ = dep_reduce(example_rel)
    assert list(reduced.source) == ["x1", "x3"]
    assert list(reduced.target) == ["y1", "y3"]
    assert reduced.pairs == {("x1", "y1"), ("x3", "y3")}


def test_reduce_keeps_reduced_input():
    g = pirr_obj(chain(4))
    reduced, _ = dep_reduce(g)
    assert reduced == g


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_reduce_preserves_open_lattice(seed):
    g = gen_rel(seed, 4, 4)
    reduced, forward = dep_reduce(g)
    assert reduced.is_reduced()
    assert jsl_isomorphism(open_obj(reduced), open_obj(g)) is not None
    assert Iso(forward, dep_reduce_inverse(g)).verify()
