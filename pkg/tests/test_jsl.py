import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from depjsl.errors import (
    AxiomViolationError,
    InvalidSubalgebraError,
    NoBottomError,
    NoJoinError,
    NotAMorphismError,
    NotDistributiveError,
)
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import poset_validate
from depjsl.jsl.congruence import (
    Congruence,
    Subalgebra,
    cong_to_sub,
    congruence_lattice,
    congruences,
    principal_congruence,
    quotient,
    sub_to_cong,
    subalgebra_generated,
    subalgebras,
)
from depjsl.jsl.homsets import enumerate_morphisms, hom_semilattice, is_tight, special_down, special_up
from depjsl.jsl.morphism import (
    JslMorphism,
    compose,
    constant_bottom,
    identity,
    is_epi,
    is_iso,
    is_mono,
    jsl_isomorphism,
)
from depjsl.jsl.semilattice import Jsl, chain, m_n, powerset, tau, tau_inverse
from depjsl.checks.generators import all_lattices, gen_morphism
from tests.strategies import jsls


def test_antichain_has_no_bottom():
    with pytest.raises(NoBottomError):
        Jsl(poset_validate(FinSet.of("a", "b"), []))


def test_missing_join_names_pair():
    with pytest.raises(NoJoinError) as info:
        Jsl(poset_validate(FinSet.of("0", "a", "b"), [("0", "a"), ("0", "b")]))
    assert info.value.witness == ("a", "b")


def test_m3_joins_and_irreducibles(m3):
    assert m3.join("a1", "a2") == "1"
    assert m3.meet("a1", "a3") == "0"
    assert set(m3.join_irreducibles()) == {"a1", "a2", "a3"}
    assert set(m3.meet_irreducibles()) == {"a1", "a2", "a3"}
    assert not m3.is_distributive()
    with pytest.raises(NotDistributiveError):
        tau(m3)


def test_powerset_irreducibles(p3):
    assert set(p3.join_irreducibles()) == {frozenset({x}) for x in "abc"}
    assert set(p3.meet_irreducibles()) == {frozenset("abc") - {x} for x in "abc"}
    assert p3.is_boolean()
    assert p3.bottom == frozenset() and p3.top == frozenset("abc")


def test_chain_irreducibles(chain3):
    assert chain3.join_irreducibles() == (1, 2)
    assert chain3.meet_irreducibles() == (0, 1)
    assert chain3.is_distributive()
    assert not chain3.is_boolean()


def test_n5_not_distributive(n5):
    assert not n5.is_distributive()


def test_tau_on_powerset_is_complement(p3):
    assert tau(p3) == {frozenset({x}): frozenset("abc") - {x} for x in "abc"}


def test_tau_on_chain_is_predecessor():
    assert tau(chain(4)) == {1: 0, 2: 1, 3: 2}
    assert tau_inverse(chain(4)) == {0: 1, 1: 2, 2: 3}


@given(jsls(6))
@settings(max_examples=40, deadline=None)
def test_distributivity_matches_triple_check(q):
    m, j = q.meet_table, q.join_table
    law = all(
        m[a, j[b, c]] == j[m[a, b], m[a, c]]
        for a in range(len(q))
        for b in range(len(q))
        for c in range(len(q))
    )
    assert q.is_distributive() == law


@given(jsls(6))
@settings(max_examples=40, deadline=None)
def test_elements_are_joins_of_irreducibles(q):
    for x in range(len(q)):
        assert q.join_idx(j for j in q.ji if q.leq[j, x]) == x
        assert q.meet_idx(m for m in q.mi if q.leq[x, m]) == x


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

def test_bottom_must_be_preserved(chain3):
    with pytest.raises(NotAMorphismError):
        JslMorphism(chain3, chain3, (1, 1, 2))


def test_join_must_be_preserved(m3):
    with pytest.raises(NotAMorphismError) as info:
        JslMorphism.from_map(m3, m3, {"0": "0", "a1": "a1", "a2": "a2", "a3": "0", "1": "1"})
    assert len(info.value.witness) == 2


def test_identity_and_bottom_map(chain3):
    ident = identity(chain3)
    assert is_mono(ident) and is_epi(ident) and is_iso(ident)
    assert ident.adjoint() == identity(chain3.op())
    zero = constant_bottom(chain3, chain3)
    assert not (is_mono(zero) or is_epi(zero) or is_iso(zero))


def test_adjoint_of_image_is_preimage():
    px, py = powerset([1, 2, 3]), powerset(["a", "b"])
    f = {1: "a", 2: "a", 3: "b"}
    image = JslMorphism.from_map(px, py, {s: frozenset(f[x] for x in s) for s in px.elements})
    preimage = {t: frozenset(x for x in (1, 2, 3) if f[x] in t) for t in py.elements}
    assert image.adjoint().as_dict() == preimage


@given(jsls(4), jsls(4), st.integers(0, 2**16))
@settings(max_examples=40, deadline=None)
def test_adjoint_properties(q, r, seed):
    f = gen_morphism(seed, q, r)
    fa = f.adjoint()
    assert fa.adjoint() == f
    for a in range(len(q)):
        for b in range(len(r)):
            assert r.leq[f.images[a], b] == q.leq[a, fa.images[b]]
    assert is_mono(f) == is_epi(fa)
    assert is_epi(f) == f.is_surjective()


def test_compose_order(chain3):
    two = chain(2)
    f = JslMorphism(two, chain3, (0, 2))
    g = JslMorphism(chain3, two, (0, 0, 1))
    assert compose(f, g) == identity(two)


def test_isomorphism_search(m3):
    relabelled = Jsl(poset_validate(
        FinSet.of("z", "p", "q", "r", "t"),
        [("z", "p"), ("z", "q"), ("z", "r"), ("p", "t"), ("q", "t"), ("r", "t")],
    ))
    iso = jsl_isomorphism(m3, relabelled)
    assert iso is not None and is_iso(iso)
    assert jsl_isomorphism(m3, chain(5)) is None


# ---------------------------------------------------------------------------
# hom-semilattices and special morphisms
# ---------------------------------------------------------------------------

@given(jsls(5))
@settings(max_examples=30, deadline=None)
def test_hom_from_two_element_chain(q):
    assert len(enumerate_morphisms(chain(2), q)) == len(q)


@given(jsls(4), jsls(4))
@settings(max_examples=30, deadline=None)
def test_hom_meet_irreducible_count(q, r):
    hom = hom_semilattice(q, r)
    assert len(hom.mi) == len(q.ji) * len(r.mi)


def test_hom_meet_is_not_pointwise(m3):
    hom = hom_semilattice(m3, m3)
    kill1 = special_up(m3, m3, "a1", "1")
    kill3 = special_up(m3, m3, "a3", "1")
    assert kill1("a1") == "0" and kill1("a2") == "1"
    assert hom.meet(kill1, kill3) == constant_bottom(m3, m3)


def test_hom_m3_counts(m3):
    hom = hom_semilattice(m3, m3)
    assert len(hom) == 50
    assert len(hom.ji) == 15 > len(m3.ji) ** 2
    assert len(hom.mi) == 9
    assert not is_tight(identity(m3))[0]


def test_special_morphism_extremes(n5, m3):
    hom = hom_semilattice(n5, m3)
    assert special_up(n5, m3, n5.top, m3.bottom) == constant_bottom(n5, m3)
    assert special_down(n5, m3, n5.top, m3.bottom) == constant_bottom(n5, m3)
    assert special_down(n5, m3, n5.bottom, "a2") == hom.top


@pytest.mark.parametrize("pair", ["chain-m3", "n5-chain"])
def test_special_up_below_special_down(pair, chain3, m3, n5):
    q, r = {"chain-m3": (chain3, m3), "n5-chain": (n5, chain3)}[pair]
    for q0 in q.elements:
        for r0 in r.elements:
            up = special_up(q, r, q0, r0)
            for q1 in q.elements:
                for r1 in r.elements:
                    expected = q.le(q1, q0) or r.le(r0, r1)
                    assert up.leq(special_down(q, r, q1, r1)) == expected


def test_tightness(m3, p3, n5):
    assert not is_tight(identity(m3))[0]
    assert is_tight(identity(p3))[0]
    assert is_tight(identity(chain(3)))[0]
    assert all(is_tight(f)[0] for f in enumerate_morphisms(n5, powerset(["a", "b"])))
    assert all(is_tight(f)[0] for f in enumerate_morphisms(powerset(["a", "b"]), m3))


def test_tight_witnesses_rebuild(chain3):
    tight, pairs = is_tight(identity(chain3))
    assert tight
    assert pairs == {(0, 1), (1, 1), (1, 2)}


@given(jsls(4), jsls(4), st.integers(0, 2**16))
@settings(max_examples=25, deadline=None)
def test_tight_closed_under_composition(q, r, seed):
    f = gen_morphism(seed, q, r)
    g = gen_morphism(seed + 1, r, q)
    if is_tight(f)[0]:
        assert is_tight(compose(f, g))[0]
        assert is_tight(compose(g, f))[0]


# ---------------------------------------------------------------------------
# congruences and subalgebras
# ---------------------------------------------------------------------------

def test_two_chain_congruences():
    assert len(congruences(chain(2))) == 2


def test_three_chain_congruences(chain3):
    con = congruence_lattice(chain3)
    assert len(con) == 4
    assert len(con.ji) == 2
    assert len(con.mi) == 2
    nontrivial = {principal_congruence(chain3, a, b) for a, b in [(0, 1), (1, 2), (0, 2)]}
    assert len(nontrivial) == 3
    assert principal_congruence(chain3, 0, 2) == Congruence.total(chain3)


def test_diagonal_maps_to_everything(n5):
    sub = cong_to_sub(Congruence.diagonal(n5))
    assert sub.base == n5.op()
    assert set(sub.elements) == set(n5.elements)


def test_invalid_subalgebras(m3):
    with pytest.raises(InvalidSubalgebraError):
        Subalgebra.of(m3, ["a1", "a2"])
    with pytest.raises(InvalidSubalgebraError):
        Subalgebra.of(m3, ["0", "a1", "a2"])
    assert set(subalgebra_generated(m3, ["a1", "a2"]).elements) == {"0", "a1", "a2", "1"}


def test_quotient_by_principal(chain3):
    quo, pi = quotient(principal_congruence(chain3, 0, 1))
    assert len(quo) == 2
    assert pi(0) == pi(1) != pi(2)


@pytest.mark.parametrize("q", [q for n in range(1, 6) for q in all_lattices(n)])
def test_congruence_subalgebra_round_trip(q):
    for theta in congruences(q):
        assert sub_to_cong(cong_to_sub(theta)) == theta
    for s in subalgebras(q.op()):
        assert cong_to_sub(sub_to_cong(s)) == s


@pytest.mark.parametrize("q", [q for n in range(1, 6) for q in all_lattices(n)])
def test_congruence_lattice_meet_irreducibles(q):
    con = congruence_lattice(q)
    assert len(con.mi) == len(q) - 1
    principal = {principal_congruence(q, q[a], q[b]) for a in range(len(q)) for b in range(a + 1, len(q))}
    assert all(con[j] in principal for j in con.ji)


def test_congruence_is_validated(chain3):
    eq = np.eye(3, dtype=bool)
    eq[0, 2] = eq[2, 0] = True
    with pytest.raises(AxiomViolationError):
        Congruence(chain3, eq)
