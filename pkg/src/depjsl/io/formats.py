from __future__ import annotations
"""
Plain-text formats for relations, posets, semilattices and graphs.

Every format is UTF-8, one ``key: value`` declaration per line, ``#`` starts a
comment and tokens are whitespace-free:

* ``.rel``   ``source:``/``target:`` carriers, then ``pair: a b`` lines
* ``.poset`` ``elements:`` then generating ``leq: a b`` lines
* ``.jsl``   as ``.poset``; optional ``sigma: a b`` lines with ``kind: saj|sam|sai``
* ``.ug``    ``vertices:`` then ``edge: a b`` lines (``edge: v v`` is a self-loop)
"""

import logging
import re
from pathlib import Path
from typing import Dict, Hashable, List, Sequence, Tuple, Union

from depjsl.demorgan.algebra import AlgebraKind, UnaryAlgebra, check_unary_algebra
from depjsl.demorgan.graphs import UGraph, ugraph
from depjsl.errors import ParseError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import Poset, poset_validate
from depjsl.finrel.relation import Rel
from depjsl.jsl.morphism import JslMorphism
from depjsl.jsl.semilattice import Jsl

__all__ = [
    "parse_rel",
    "parse_poset",
    "parse_jsl",
    "parse_algebra",
    "parse_ug",
    "serialize_rel",
    "serialize_poset",
    "serialize_jsl",
    "serialize_ug",
    "element_tokens",
    "load",
]

logger = logging.getLogger(__name__)

_DECL = re.compile(r"^\s*([a-z]+)\s*:\s*(.*?)\s*$")
_BAD_TOKEN = re.compile(r"[\s#]")

Line = Tuple[int, str, List[str]]


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

def _declarations(text: str, allowed: Sequence[str]) -> List[Line]:
    """``(line number, key, tokens)`` for every non-blank line."""
    out: List[Line] = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        m = _DECL.match(body)
        if m is None:
            raise ParseError(f"expected 'key: value', got {raw.strip()!r}", line=no)
        key, value = m.group(1), m.group(2)
        if key not in allowed:
            raise ParseError(f"unknown key {key!r} (expected one of {', '.join(allowed)})", line=no)
        out.append((no, key, value.split()))
    return out


def _single(decls: List[Line], key: str) -> Tuple[int, List[str]]:
    hits = [(no, toks) for no, k, toks in decls if k == key]
    if not hits:
        raise ParseError(f"missing '{key}:' declaration")
    if len(hits) > 1:
        raise ParseError(f"'{key}:' declared twice", line=hits[1][0])
    return hits[0]


def _pairs(decls: List[Line], key: str, carriers: Tuple[FinSet, FinSet]) -> List[Tuple[Hashable, Hashable]]:
    out = []
    for no, k, toks in decls:
        if k != key:
            continue
        if len(toks) != 2:
            raise ParseError(f"'{key}:' takes exactly two tokens, got {len(toks)}", line=no, witness=toks)
        a, b = toks
        for tok, carrier in ((a, carriers[0]), (b, carriers[1])):
            if tok not in carrier:
                raise ParseError(f"unknown element {tok!r}", line=no, witness=tok)
        out.append((a, b))
    return out


def _token(x: Hashable) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, frozenset):
        return "{" + ",".join(sorted(_token(e) for e in x)) + "}"
    if isinstance(x, tuple):
        return "(" + ",".join(_token(e) for e in x) + ")"
    if isinstance(x, JslMorphism):
        return "[" + ",".join(_token(x.cod[i]) for i in x.images) + "]"
    return str(x)


def element_tokens(carrier: FinSet) -> List[str]:
    """
    Whitespace-free names for *carrier*, one per element.

    Strings are kept; sets, tuples and morphisms are spelled out. Falls back
    to ``e0 e1 …`` when the spelled names collide or are not valid tokens.
    """
    toks = [_token(x) for x in carrier]
    if len(set(toks)) != len(toks) or any(not t or _BAD_TOKEN.search(t) for t in toks):
        logger.debug("element names are not usable as tokens; numbering them")
        return [f"e{i}" for i in range(len(carrier))]
    return toks


def _order_lines(p: Poset, names: List[str]) -> List[str]:
    covers = p.cover_matrix
    return [f"leq: {names[a]} {names[b]}" for a in range(len(p)) for b in range(len(p)) if covers[a, b]]


# ---------------------------------------------------------------------------
# parsers
# ---------------------------------------------------------------------------

def parse_rel(text: str) -> Rel:
    decls = _declarations(text, ("source", "target", "pair"))
    _, src = _single(decls, "source")
    _, tgt = _single(decls, "target")
    s, t = FinSet(tuple(src)), FinSet(tuple(tgt))
    return Rel.from_pairs(s, t, _pairs(decls, "pair", (s, t)))


def parse_poset(text: str) -> Poset:
    decls = _declarations(text, ("elements", "leq"))
    _, elems = _single(decls, "elements")
    carrier = FinSet(tuple(elems))
    return poset_validate(carrier, _pairs(decls, "leq", (carrier, carrier)))


def parse_jsl(text: str) -> Union[Jsl, UnaryAlgebra]:
    """A ``Jsl``, or a ``UnaryAlgebra`` when ``sigma:`` lines are present."""
    decls = _declarations(text, ("elements", "leq", "sigma", "kind"))
    _, elems = _single(decls, "elements")
    carrier = FinSet(tuple(elems))
    base = Jsl(poset_validate(carrier, _pairs(decls, "leq", (carrier, carrier))))
    sigma = _pairs(decls, "sigma", (carrier, carrier))
    kinds = [(no, toks) for no, k, toks in decls if k == "kind"]
    if not sigma and not kinds:
        return base
    if not kinds:
        raise ParseError("'sigma:' lines need a 'kind:' declaration")
    no, toks = _single(decls, "kind")
    if len(toks) != 1 or toks[0] not in {k.value for k in AlgebraKind}:
        raise ParseError(f"kind must be one of saj, sam, sai; got {' '.join(toks)!r}", line=no)
    table: Dict[Hashable, Hashable] = {}
    for a, b in sigma:
        if a in table and table[a] != b:
            raise ParseError(f"σ({a}) declared twice", witness=a)
        table[a] = b
    return check_unary_algebra(base, table, AlgebraKind(toks[0]))


def parse_algebra(text: str) -> UnaryAlgebra:
    parsed = parse_jsl(text)
    if not isinstance(parsed, UnaryAlgebra):
        raise ParseError("expected 'sigma:' and 'kind:' declarations")
    return parsed


def parse_ug(text: str) -> UGraph:
    decls = _declarations(text, ("vertices", "edge"))
    _, verts = _single(decls, "vertices")
    v = FinSet(tuple(verts))
    return ugraph(v, _pairs(decls, "edge", (v, v)))


# ---------------------------------------------------------------------------
# serializers
# ---------------------------------------------------------------------------

def serialize_rel(r: Rel) -> str:
    src, tgt = element_tokens(r.source), element_tokens(r.target)
    lines = [f"source: {' '.join(src)}".rstrip(), f"target: {' '.join(tgt)}".rstrip()]
    for a in range(len(r.source)):
        for b in range(len(r.target)):
            if r.matrix[a, b]:
                lines.append(f"pair: {src[a]} {tgt[b]}")
    return "\n".join(lines) + "\n"


def serialize_poset(p: Poset) -> str:
    names = element_tokens(p.carrier)
    lines = [f"elements: {' '.join(names)}".rstrip()] + _order_lines(p, names)
    return "\n".join(lines) + "\n"


def serialize_jsl(q: Union[Jsl, UnaryAlgebra]) -> str:
    alg = q if isinstance(q, UnaryAlgebra) else None
    base = alg.base if alg is not None else q
    names = element_tokens(base.carrier)
    lines = [f"elements: {' '.join(names)}"] + _order_lines(base.order, names)
    if alg is not None:
        lines.append(f"kind: {alg.kind.value}")
        lines += [f"sigma: {names[i]} {names[j]}" for i, j in enumerate(alg.sigma)]
    return "\n".join(lines) + "\n"


def serialize_ug(g: UGraph) -> str:
    names = element_tokens(g.vertices)
    idx = {v: names[i] for i, v in enumerate(g.vertices)}
    lines = [f"vertices: {' '.join(names)}".rstrip()]
    lines += [f"edge: {idx[a]} {idx[b]}" for a, b in g.edge_list()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# files
# ---------------------------------------------------------------------------

_PARSERS = {
    ".rel": parse_rel,
    ".poset": parse_poset,
    ".jsl": parse_jsl,
    ".ug": parse_ug,
}


def load(path: Union[str, Path]) -> Union[Rel, Poset, Jsl, UnaryAlgebra, UGraph]:
    """Parse a file, choosing the format from its suffix."""
    path = Path(path)
    parser = _PARSERS.get(path.suffix)
    if parser is None:
        raise ParseError(f"unknown file type {path.suffix!r} (expected .rel, .poset, .jsl or .ug)")
    logger.debug("loading %s", path)
    return parser(path.read_text(encoding="utf-8"))
