import io
import logging

import pytest

from depjsl.checks.generators import (
    all_lattices,
    all_posets,
    gen_algebra,
    gen_distributive,
    gen_jsl,
    gen_rel,
    gen_ug,
    pick,
)
from depjsl.checks.oracles import ug_factor_oracle
from depjsl.checks.suites import SUITES, check_suite, register_suite, suite_names
from depjsl.demorgan.algebra import AlgebraKind
from depjsl.errors import SizeGuardError, UnknownSuiteError
from depjsl.finrel.poset import chain_poset
from depjsl.finrel.relation import Rel
from depjsl.freecat.free import free_jsl_object
from depjsl.jsl.morphism import jsl_isomorphism
from depjsl.utils.config import Config, guard
from depjsl.utils.logging_setup import init_logger

EXPECTED_SUITES = {
    "rel-calculus",
    "jsl-basics",
    "dep-components",
    "rep-red",
    "hom-counts",
    "congruences",
    "bi-ideals",
    "tensor-universal",
    "tight-ts",
    "demorgan",
    "reduced-iso",
    "free-fixtures",
    "adjunctions",
    "dm",
}


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

def test_default_config_is_valid():
    assert Config.validate() == []


def test_invalid_config_reported(monkeypatch):
    monkeypatch.setattr(Config, "SEED", -1)
    monkeypatch.setattr(Config, "MAX_ENUMERATION", 0)
    issues = Config.validate()
    assert "SEED must be non-negative" in issues
    assert "MAX_ENUMERATION must be positive" in issues


def test_guard(monkeypatch):
    guard("things", 3, 3)
    with pytest.raises(SizeGuardError) as err:
        guard("things", 4, 3)
    assert err.value.witness == 4
    monkeypatch.setattr(Config, "MAX_SUBSET_BITS", 2)
    with pytest.raises(SizeGuardError):
        free_jsl_object(chain_poset(3))


# ---------------------------------------------------------------------------
# generators and oracles
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("seed", range(10))
def test_generators_are_seeded(seed):
    assert gen_rel(seed, 3, 4) == gen_rel(seed, 3, 4)
    assert gen_jsl(seed, 5) == gen_jsl(seed, 5)
    r = gen_rel(seed, 3, 4)
    assert len(r.source) <= 3 and len(r.target) <= 4
    assert len(gen_jsl(seed, 5)) <= 5
    assert gen_distributive(seed, 5).is_distributive()
    assert len(gen_ug(seed, 4)) <= 4
    assert gen_algebra(seed, 4, "sai").kind is AlgebraKind.SAI


def test_pick():
    assert pick(0, []) is None
    assert pick(0, ["only"]) == "only"


def test_lattice_counts():
    counts = [len(all_lattices(n)) for n in range(7)]
    assert counts == [0, 1, 1, 1, 2, 5, 15]
    assert sum(q.is_distributive() for q in all_lattices(5)) == 3
    assert sum(q.is_distributive() for q in all_lattices(6)) == 5


def test_lattices_are_pairwise_non_isomorphic():
    lattices = all_lattices(5)
    for i, q in enumerate(lattices):
        assert all(jsl_isomorphism(q, r) is None for r in lattices[i + 1 :])


def test_poset_enumeration():
    assert [len(all_posets(n)) for n in range(4)] == [1, 1, 2, 7]
    assert all(p.leq.shape == (4, 4) for p in all_posets(4))


def test_every_relation_factors_through_identity(example_rel):
    x = example_rel.source
    e = Rel.from_pairs(x, x, [("x1", "x2"), ("x2", "x1"), ("x3", "x3")])
    assert ug_factor_oracle(Rel.identity(x), e, "j")
    assert ug_factor_oracle(Rel.identity(x), e, "m")


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def test_registered_suites():
    assert set(suite_names()) == EXPECTED_SUITES
    for name in suite_names():
        assert SUITES[name].statement


@pytest.mark.parametrize("name", sorted(EXPECTED_SUITES))
def test_report_header_names_the_result(name):
    theorem = SUITES[name].theorem
    assert theorem
    header = check_suite(name, max_size=3, cases=1, seed=0).to_text().splitlines()[0]
    assert header == f"[{name}] {theorem}: {SUITES[name].statement}"


@pytest.mark.parametrize("name", sorted(EXPECTED_SUITES))
def test_suite_passes_on_small_instances(name):
    report = check_suite(name, max_size=3, cases=3, seed=0)
    assert report.passed, report.to_text()
    assert len(report.results) == 3
    assert report.counterexample is None


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError) as err:
        check_suite("no-such-suite", 3, 1)
    assert err.value.witness == "no-such-suite"


def test_runs_are_reproducible():
    first = check_suite("rel-calculus", 3, 5, seed=7)
    second = check_suite("rel-calculus", 3, 5, seed=7)
    assert first.model_dump() == second.model_dump()
    assert check_suite("rel-calculus", 3, 2).seed == Config.SEED


def test_failing_suite_reports_counterexample(scratch_suites):
    @register_suite("always-fails", "Nothing holds")
    def _always_fails(rng, n):
        return f"# size\n{n}\n", "failed: everything"

    report = check_suite("always-fails", max_size=3, cases=10, seed=1)
    assert not report.passed
    assert report.counterexample.index == 0
    assert len(report.results) == 1
    text = report.to_text()
    assert text.startswith("[always-fails] Nothing holds")
    assert "FAIL at case 0: failed: everything" in text


def test_suite_size_is_capped(scratch_suites):
    seen = []

    @register_suite("records-size", "Sizes are clamped", cap=2)
    def _records(rng, n):
        seen.append(n)
        return "", None

    report = check_suite("records-size", max_size=5, cases=3, seed=0)
    assert report.passed
    assert report.max_size == 2
    assert seen == [2, 2, 2]


def test_init_logger_attaches_one_handler(capsys):
    logger = init_logger(level=logging.DEBUG)
    init_logger(level=logging.WARNING)
    assert len(logger.handlers) == 1
    assert logger.level == logging.WARNING
    logger.warning("guard hit")
    assert "WARNING | depjsl | guard hit" in capsys.readouterr().err


def test_log_handler_ignores_stream_rebinding(capsys):
    logger = init_logger(level=logging.INFO)
    (handler,) = logger.handlers
    handler.setStream(io.StringIO())
    logger.info("still on stderr")
    assert "still on stderr" in capsys.readouterr().err
