import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from depjsl.checks.generators import all_lattices, all_posets, gen_distributive, gen_jsl, gen_poset
from depjsl.errors import KindMismatchError, NotDistributiveError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import MonotoneMap, chain_poset, discrete_poset, monotone_maps
from depjsl.freecat.duality import (
    alpha_natural,
    atoms_of_powerset,
    beta_natural,
    birkhoff_alpha,
    birkhoff_beta,
    birkhoff_ji,
    birkhoff_up,
    boolean_atoms,
    powerset_of_atoms,
)
from depjsl.freecat.free import (
    counit_poset,
    extend_free_ba,
    extend_free_dl,
    extend_free_jsl,
    free_ba,
    free_dl,
    free_jsl,
    free_poset,
    is_lattice_morphism,
    lattice_morphisms,
)
from depjsl.jsl.homsets import enumerate_morphisms
from depjsl.jsl.morphism import is_iso
from depjsl.jsl.semilattice import chain, powerset

seeds = st.integers(0, 2**32 - 1)

LATTICES = [q for n in range(1, 5) for q in all_lattices(n)]
DISTRIBUTIVE = [d for n in range(1, 7) for d in all_lattices(n) if d.is_distributive()]
# Dn of the four-element antichain is too large to take down-sets of again
POSETS = [p for n in range(5) for p in all_posets(n) if n < 4 or p.leq.sum() > n]


# ---------------------------------------------------------------------------
# Set → Poset
# ---------------------------------------------------------------------------

def test_free_poset_on_empty_set():
    adj = free_poset(FinSet.of())
    assert len(adj.free) == 0
    assert adj.triangle_identities() == (True, True)


def test_free_poset_is_discrete():
    adj = free_poset(FinSet.of("a", "b", "c"))
    assert adj.free == discrete_poset(FinSet.of("a", "b", "c"))
    assert adj.unit == {"a": "a", "b": "b", "c": "c"}
    assert adj.triangle_identities() == (True, True)


@pytest.mark.parametrize("n", range(5))
def test_free_poset_triangles(n):
    assert free_poset(FinSet.range(n)).triangle_identities() == (True, True)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_free_poset_hom_bijection(n):
    x = FinSet.range(n)
    for p in (chain_poset(3), discrete_poset(FinSet.of("u", "v")), chain_poset(1)):
        assert len(monotone_maps(discrete_poset(x), p)) == len(p) ** n


def test_counit_on_chain_is_not_an_iso():
    eps = counit_poset(chain_poset(2))
    assert eps.is_bijective()
    assert not eps.is_order_embedding()


# ---------------------------------------------------------------------------
# Poset → JSL
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("p", POSETS)
def test_free_jsl_triangles(p):
    assert free_jsl(p).triangle_identities() == (True, True)


def test_free_jsl_on_antichain_is_boolean():
    free = free_jsl(discrete_poset(FinSet.of("a", "b"))).free
    assert len(free) == 4 and free.is_boolean()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_free_jsl_on_chain(n):
    adj = free_jsl(chain_poset(n))
    assert len(adj.free) == n + 1
    assert adj.free.order.is_chain()
    assert adj.triangle_identities() == (True, True)


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_free_jsl_universal_property(seed):
    p, q = gen_poset(seed, 3), gen_jsl(seed + 1, 4)
    adj = free_jsl(p)
    assert adj.triangle_identities() == (True, True)
    maps = monotone_maps(p, q.order)
    assert len(enumerate_morphisms(adj.free, q)) == len(maps)
    for g in maps:
        ext = extend_free_jsl(g, q)
        assert tuple(ext.images[u] for u in adj.unit.images) == g.images
    for f in enumerate_morphisms(adj.free, q):
        g = MonotoneMap(p, q.order, tuple(f.images[u] for u in adj.unit.images))
        assert extend_free_jsl(g, q) == f


# ---------------------------------------------------------------------------
# JSL → DL
# ---------------------------------------------------------------------------

def test_free_dl_on_two_chain():
    free = free_dl(chain(2)).free
    assert len(free) == 3 and free.order.is_chain()


@pytest.mark.parametrize("q", LATTICES)
def test_free_dl_unit_and_triangles(q):
    adj = free_dl(q)
    assert adj.free.is_distributive()
    assert len(set(adj.unit.images)) == len(q)
    assert adj.triangle_identities() == (True, True)


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_free_dl_universal_property(seed):
    q, d = gen_jsl(seed, 4), gen_distributive(seed + 1, 4)
    adj = free_dl(q)
    homs = enumerate_morphisms(q, d)
    assert len(lattice_morphisms(adj.free, d)) == len(homs)
    for g in homs:
        ext = extend_free_dl(g, d)
        assert is_lattice_morphism(ext)
        assert tuple(ext.images[u] for u in adj.unit.images) == g.images


# ---------------------------------------------------------------------------
# DL → BA
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("d", [d for d in DISTRIBUTIVE if len(d) <= 4])
def test_free_ba_triangles(d):
    assert free_ba(d).triangle_identities() == (True, True)


def test_free_ba_on_three_chain():
    free = free_ba(chain(3)).free
    assert len(free) == 4 and free.is_boolean()


def test_free_ba_rejects_non_distributive(m3):
    with pytest.raises(NotDistributiveError):
        free_ba(m3)


def test_free_ba_on_boolean_input(p3):
    adj = free_ba(p3)
    assert len(adj.free) == len(p3)
    assert is_iso(adj.unit)


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_free_ba_unit_is_lattice_morphism(seed):
    d = gen_distributive(seed, 6)
    adj = free_ba(d)
    assert is_lattice_morphism(adj.unit)
    assert adj.triangle_identities() == (True, True)


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_free_ba_universal_property(seed):
    d = gen_distributive(seed, 4)
    b = powerset(["u", "v"])
    adj = free_ba(d)
    homs = lattice_morphisms(d, b)
    assert len(lattice_morphisms(adj.free, b)) == len(homs)
    for g in homs:
        ext = extend_free_ba(g, b)
        assert is_lattice_morphism(ext)
        assert tuple(ext.images[u] for u in adj.unit.images) == g.images


@pytest.mark.parametrize("n", [0, 1, 2])
def test_set_to_boolean_chain(n):
    x = FinSet.range(n)
    p = free_poset(x).free
    q = free_jsl(p).free
    d = free_dl(q).free
    b = free_ba(d).free
    assert b.is_boolean()
    assert len(b) == 2 ** len(d.ji)


# ---------------------------------------------------------------------------
# Birkhoff and boolean duality
# ---------------------------------------------------------------------------

def test_up_sets_of_antichain():
    up = birkhoff_up(discrete_poset(FinSet.of("a", "b")))
    assert len(up) == 4 and up.is_boolean()


def test_birkhoff_ji_needs_distributive(m3):
    with pytest.raises(NotDistributiveError):
        birkhoff_ji(m3)


@pytest.mark.parametrize("d", DISTRIBUTIVE)
def test_birkhoff_beta_is_iso(d):
    assert is_iso(birkhoff_beta(d))


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_birkhoff_alpha_is_iso(seed):
    p = gen_poset(seed, 4)
    alpha = birkhoff_alpha(p)
    assert alpha.is_bijective() and alpha.is_order_embedding()


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_birkhoff_naturality(seed):
    p1, p2 = gen_poset(seed, 3), gen_poset(seed + 1, 3)
    for f in monotone_maps(p1, p2):
        assert alpha_natural(f)
    d1, d2 = gen_distributive(seed + 2, 4), gen_distributive(seed + 3, 4)
    for h in lattice_morphisms(d1, d2):
        assert beta_natural(h)


def test_boolean_duality(p3, chain3):
    assert len(boolean_atoms(p3)) == 3
    assert is_iso(powerset_of_atoms(p3))
    assert atoms_of_powerset(FinSet.of(1, 2)) == {1: frozenset({1}), 2: frozenset({2})}
    with pytest.raises(KindMismatchError):
        boolean_atoms(chain3)
