import pytest

from depjsl.demorgan.algebra import AlgebraKind, UnaryAlgebra, boolean_algebra
from depjsl.demorgan.graphs import self_loops, ugraph
from depjsl.errors import CycleError, DuplicateElementError, NoBottomError, ParseError
from depjsl.finrel.finset import FinSet
from depjsl.io.dot import bipartite, dot_export, graph_dot, hasse
from depjsl.io.formats import (
    element_tokens,
    load,
    parse_algebra,
    parse_jsl,
    parse_poset,
    parse_rel,
    parse_ug,
    serialize_jsl,
    serialize_rel,
    serialize_ug,
)
from depjsl.jsl.semilattice import Jsl

EXAMPLE_REL = """\
# the running example
source: x1 x2 x3
target: y1 y2 y3
pair: x1 y1
pair: x1 y2
pair: x2 y1   # trailing comment
pair: x2 y2

pair: x3 y3
"""

CHAIN_ALGEBRA = """\
elements: 0 1 2
leq: 0 1
leq: 1 2
kind: sai
sigma: 0 2
sigma: 1 1
sigma: 2 0
"""


def test_parse_rel(example_rel):
    assert parse_rel(EXAMPLE_REL) == example_rel


def test_unknown_element_names_line():
    text = "source: a\ntarget: b\npair: a c\n"
    with pytest.raises(ParseError) as err:
        parse_rel(text)
    assert err.value.line == 3
    assert str(err.value).startswith("line 3:")
    assert err.value.witness == "c"


@pytest.mark.parametrize(
    "text",
    [
        "source: a\n",                          # no target
        "source: a\ntarget: b\nsource: c\n",    # declared twice
        "source: a\ntarget: b\nedge: a b\n",    # wrong key
        "source: a\ntarget: b\npair: a\n",      # one token
        "just some words\n",
    ],
)
def test_malformed_relations(text):
    with pytest.raises(ParseError):
        parse_rel(text)


def test_duplicate_carrier_element():
    with pytest.raises(DuplicateElementError):
        parse_rel("source: a a\ntarget: b\n")


def test_parse_poset_closes_generators():
    p = parse_poset("elements: a b c\nleq: a b\nleq: b c\n")
    assert p.le("a", "c")
    with pytest.raises(CycleError):
        parse_poset("elements: a b\nleq: a b\nleq: b a\n")


def test_parse_jsl(n5):
    q = parse_jsl(serialize_jsl(n5))
    assert isinstance(q, Jsl)
    assert q == n5
    with pytest.raises(NoBottomError):
        parse_jsl("elements: a b\n")


def test_parse_algebra():
    alg = parse_algebra(CHAIN_ALGEBRA)
    assert alg.kind is AlgebraKind.SAI
    assert alg("0") == "2"
    with pytest.raises(ParseError):
        parse_algebra("elements: 0 1\nleq: 0 1\n")
    with pytest.raises(ParseError):
        parse_jsl("elements: 0 1\nleq: 0 1\nsigma: 0 1\nsigma: 1 0\n")
    with pytest.raises(ParseError):
        parse_jsl("elements: 0 1\nleq: 0 1\nkind: boolean\nsigma: 0 1\nsigma: 1 0\n")


def test_serialize_algebra_keeps_sigma():
    alg = boolean_algebra(["a", "b"])
    text = serialize_jsl(alg)
    assert "kind: sai" in text
    again = parse_algebra(text)
    assert isinstance(again, UnaryAlgebra)
    assert again.sigma == alg.sigma


def test_relation_and_graph_text(example_rel):
    assert parse_rel(serialize_rel(example_rel)) == example_rel
    g = ugraph(["p", "q", "r"], [("p", "q"), ("r", "r")])
    text = serialize_ug(g)
    assert "edge: r r" in text
    assert parse_ug(text) == g


def test_element_tokens():
    assert element_tokens(FinSet.of("a", "b")) == ["a", "b"]
    assert element_tokens(FinSet.of(frozenset(), frozenset({"b", "a"}))) == ["{}", "{a,b}"]
    assert element_tokens(FinSet.of(("x", 1), ("y", 2))) == ["(x,1)", "(y,2)"]
    assert element_tokens(FinSet.of("a b", "c")) == ["e0", "e1"]


def test_load(tmp_path):
    rel = tmp_path / "example.rel"
    rel.write_text(EXAMPLE_REL, encoding="utf-8")
    assert len(load(rel)) == 5
    alg = tmp_path / "chain.jsl"
    alg.write_text(CHAIN_ALGEBRA, encoding="utf-8")
    assert isinstance(load(str(alg)), UnaryAlgebra)
    other = tmp_path / "notes.txt"
    other.write_text("", encoding="utf-8")
    with pytest.raises(ParseError):
        load(other)


def test_hasse(chain3):
    text = hasse(chain3)
    assert text.startswith("digraph hasse {")
    assert '"0" -> "1";' in text
    assert '"1" -> "2";' in text
    assert '"0" -> "2";' not in text


def test_bipartite_and_graph(example_rel):
    text = bipartite(example_rel)
    assert '"s:x1" -> "t:y1";' in text
    assert '"s:x3" -> "t:y1";' not in text
    assert '"0" -- "0";' in graph_dot(self_loops(1))


def test_dot_export_dispatch(chain3, example_rel):
    assert dot_export(chain3) == hasse(chain3)
    assert dot_export(example_rel) == bipartite(example_rel)
    assert dot_export(boolean_algebra(["z"])).startswith("digraph")
    with pytest.raises(TypeError):
        dot_export(42)
