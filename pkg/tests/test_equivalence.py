import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from depjsl.checks.generators import all_lattices, gen_dep_morphism, gen_jsl, gen_morphism, gen_poset, gen_rel
from depjsl.dep.morphism import dep_compose, dep_hom, dep_identity
from depjsl.equivalence.canonical import (
    canonical_embed,
    canonical_quotient,
    check_canonical_equalities,
    degenerate_iso,
    factorization_holds,
    tight_extend_left,
    tight_extension_left_holds,
    tight_extension_right_holds,
)
from depjsl.equivalence.completion import dm_completion, dm_preserves_bounds
from depjsl.equivalence.fullness import full_inverse
from depjsl.equivalence.functors import nleq_mor, nleq_obj, open_mor, open_obj, pirr_mor, pirr_obj
from depjsl.equivalence.natural import (
    e_iso_pair,
    e_natural,
    partial_iso,
    partial_natural,
    red_iso,
    red_natural,
    rep_iso,
    rep_natural,
    rep_naturality_failure,
)
from depjsl.errors import CarrierMismatchError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import chain_poset, discrete_poset
from depjsl.finrel.relation import Rel
from depjsl.jsl.homsets import enumerate_morphisms
from depjsl.jsl.morphism import compose, identity, is_epi, is_mono
from depjsl.jsl.semilattice import chain, powerset
from tests.strategies import jsls

seeds = st.integers(0, 2**32 - 1)

SMALL = [q for n in range(1, 5) for q in all_lattices(n)]
UP_TO_FIVE = SMALL + all_lattices(5)


def test_open_of_identity_is_powerset():
    x = FinSet.of("a", "b", "c")
    assert open_obj(Rel.identity(x)) == powerset(x)


def test_open_of_identity_morphism(example_rel):
    assert open_mor(dep_identity(example_rel)) == identity(open_obj(example_rel))


def test_pirr_examples(chain3, m3):
    assert pirr_obj(chain3).pairs == {(1, 0), (2, 0), (2, 1)}
    atoms = ["a1", "a2", "a3"]
    assert pirr_obj(m3).pairs == {(a, b) for a in atoms for b in atoms if a != b}
    pab = powerset(["a", "b"])
    a, b = frozenset({"a"}), frozenset({"b"})
    assert pirr_obj(pab).pairs == {(a, b), (b, a)}


def test_one_element_semilattice():
    q = chain(1)
    assert len(nleq_obj(q)) == 0
    assert len(pirr_obj(q).source) == 0 and len(pirr_obj(q).target) == 0
    assert e_iso_pair(q).verify()
    assert rep_iso(q).verify()


def test_rep_on_boolean_square():
    q = powerset(["a", "b"])
    rep = rep_iso(q).forward
    assert rep(frozenset({"a"})) == frozenset({frozenset({"b"})})


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_open_is_a_functor(seed):
    g, h, k = gen_rel(seed, 3, 3), gen_rel(seed + 1, 3, 3), gen_rel(seed + 2, 3, 3)
    r, s = gen_dep_morphism(seed + 3, g, h), gen_dep_morphism(seed + 4, h, k)
    assert open_mor(dep_compose(r, s)) == compose(open_mor(r), open_mor(s))


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_hom_sets_correspond(seed):
    g, h = gen_rel(seed, 3, 3), gen_rel(seed + 1, 3, 3)
    assert len(dep_hom(g, h)) == len(enumerate_morphisms(open_obj(g), open_obj(h)))


@pytest.mark.parametrize("q", UP_TO_FIVE)
def test_rep_and_nleq_isos(q):
    assert rep_iso(q).verify()
    assert e_iso_pair(q).verify()
    assert all(check_canonical_equalities(q).values())


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_red_and_partial_isos(seed):
    g = gen_rel(seed, 4, 4)
    assert red_iso(g).verify()
    assert partial_iso(g).verify()
    assert factorization_holds(g)


@given(jsls(4), jsls(4), seeds)
@settings(max_examples=30, deadline=None)
def test_naturality_of_rep_and_nleq(q, r, seed):
    f = gen_morphism(seed, q, r)
    assert rep_natural(f)
    assert e_natural(f)


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_naturality_of_red_and_partial(seed):
    g, h = gen_rel(seed, 3, 3), gen_rel(seed + 1, 3, 3)
    r = gen_dep_morphism(seed + 2, g, h)
    assert red_natural(r)
    assert partial_natural(r)


def test_rep_naturality_over_whole_hom_set(chain3, m3):
    assert rep_naturality_failure(chain3, m3) is None


@pytest.mark.parametrize("q", SMALL)
def test_pirr_and_nleq_keep_identities(q):
    assert pirr_mor(identity(q)) == dep_identity(pirr_obj(q))
    assert nleq_mor(identity(q)) == dep_identity(nleq_obj(q))


@pytest.mark.parametrize("q", SMALL)
@pytest.mark.parametrize("r", SMALL)
def test_pirr_and_nleq_keep_composites(q, r):
    for s in SMALL:
        for f in enumerate_morphisms(q, r):
            for g in enumerate_morphisms(r, s):
                fg = compose(f, g)
                assert pirr_mor(fg) == dep_compose(pirr_mor(f), pirr_mor(g))
                assert nleq_mor(fg) == dep_compose(nleq_mor(f), nleq_mor(g))


@pytest.mark.parametrize("q", SMALL)
@pytest.mark.parametrize("r", SMALL)
def test_open_keeps_composites_on_irreducible_relations(q, r):
    g, h = pirr_obj(q), pirr_obj(r)
    for s in SMALL:
        k = pirr_obj(s)
        for a in dep_hom(g, h):
            for b in dep_hom(h, k):
                assert open_mor(dep_compose(a, b)) == compose(open_mor(a), open_mor(b))


def test_partial_on_identity_is_complement():
    x = FinSet.of("a", "b", "c")
    d = partial_iso(Rel.identity(x)).forward
    for s in powerset(x).elements:
        assert d(s) == frozenset(x) - s


def test_full_inverse_of_identity(example_rel):
    f = identity(open_obj(example_rel))
    assert full_inverse(f, example_rel, example_rel).rel == example_rel


def test_full_inverse_checks_typing(example_rel):
    with pytest.raises(CarrierMismatchError):
        full_inverse(identity(chain(2)), example_rel, example_rel)


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_full_inverse_round_trip(seed):
    g, h = gen_rel(seed, 3, 3), gen_rel(seed + 1, 3, 3)
    f = gen_morphism(seed + 2, open_obj(g), open_obj(h))
    assert open_mor(full_inverse(f, g, h)) == f


def test_boolean_morphisms_count():
    # every relation Z1 × Z2 gives a distinct morphism P Z1 → P Z2
    assert len(enumerate_morphisms(powerset([1, 2]), powerset(["a", "b"]))) == 16


# ---------------------------------------------------------------------------
# canonical maps and tight extensions
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("q", UP_TO_FIVE)
def test_canonical_maps(q):
    assert is_mono(canonical_embed(q))
    assert is_epi(canonical_quotient(q))
    assert tight_extension_left_holds(canonical_quotient(q))
    assert tight_extension_right_holds(canonical_embed(q))


def test_tight_extension_of_quotient(chain3, m3):
    for q in (chain3, m3):
        jf = tight_extend_left(canonical_quotient(q))
        expected = {(j, k) for j in q.join_irreducibles() for k in q.join_irreducibles() if q.le(k, j)}
        assert jf.pairs == expected


@given(jsls(4), seeds)
@settings(max_examples=25, deadline=None)
def test_tight_extension_of_random_maps(q, seed):
    z = powerset(["u", "v"])
    assert tight_extension_left_holds(gen_morphism(seed, z, q))
    assert tight_extension_right_holds(gen_morphism(seed, q, z))


def test_degenerate_iso(n5):
    restricted, iso = degenerate_iso(n5, n5.elements, n5.elements)
    assert restricted == nleq_obj(n5)
    assert iso.verify()
    with pytest.raises(CarrierMismatchError):
        degenerate_iso(n5, ["0"], n5.elements)


# ---------------------------------------------------------------------------
# Dedekind-MacNeille
# ---------------------------------------------------------------------------

def test_dm_of_antichain():
    dm, e = dm_completion(discrete_poset(FinSet.of("a", "b")))
    assert len(dm) == 4
    assert dm.is_boolean()
    assert e.is_order_embedding()


def test_dm_of_single_point():
    dm, _ = dm_completion(chain_poset(1))
    assert len(dm) == 1


@given(jsls(6))
@settings(max_examples=30, deadline=None)
def test_dm_of_lattice_is_bijective(q):
    dm, e = dm_completion(q.order)
    assert len(dm) == len(q)
    assert e.is_bijective() and e.is_order_embedding()


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_dm_keeps_joins_and_meets(seed):
    p = gen_poset(seed, 5)
    _, e = dm_completion(p)
    assert e.is_order_embedding()
    assert dm_preserves_bounds(p)
