from __future__ import annotations
"""DOT text for Hasse diagrams, bipartite relations and undirected graphs."""

from typing import List, Union

from depjsl.demorgan.algebra import UnaryAlgebra
from depjsl.demorgan.graphs import UGraph
from depjsl.finrel.poset import Poset
from depjsl.finrel.relation import Rel
from depjsl.io.formats import element_tokens
from depjsl.jsl.semilattice import Jsl

__all__ = ["hasse", "bipartite", "graph_dot", "dot_export"]


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse(p: Union[Poset, Jsl], name: str = "hasse") -> str:
    """Covering edges only, drawn bottom to top."""
    order = p.order if isinstance(p, Jsl) else p
    names = element_tokens(order.carrier)
    covers = order.cover_matrix
    lines: List[str] = [f"digraph {name} {{", "    rankdir=BT;"]
    lines += [f"    {_quote(n)};" for n in names]
    for a in range(len(order)):
        for b in range(len(order)):
            if covers[a, b]:
                lines.append(f"    {_quote(names[a])} -> {_quote(names[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bipartite(r: Rel, name: str = "relation") -> str:
    """Sources on the left, targets on the right; node ids are prefixed ``s:``/``t:``."""
    src, tgt = element_tokens(r.source), element_tokens(r.target)
    lines: List[str] = [f"digraph {name} {{", "    rankdir=LR;"]
    lines += [f"    {_quote('s:' + n)} [label={_quote(n)}];" for n in src]
    lines += [f"    {_quote('t:' + n)} [label={_quote(n)}];" for n in tgt]
    for a in range(len(src)):
        for b in range(len(tgt)):
            if r.matrix[a, b]:
                lines.append(f"    {_quote('s:' + src[a])} -> {_quote('t:' + tgt[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_dot(g: UGraph, name: str = "graph") -> str:
    names = element_tokens(g.vertices)
    idx = {v: names[i] for i, v in enumerate(g.vertices)}
    lines: List[str] = [f"graph {name} {{"]
    lines += [f"    {_quote(n)};" for n in names]
    lines += [f"    {_quote(idx[a])} -- {_quote(idx[b])};" for a, b in g.edge_list()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_export(value: Union[Poset, Jsl, UnaryAlgebra, Rel, UGraph]) -> str:
    """Hasse diagram for orders, bipartite drawing for relations, plain graph for ``UGraph``."""
    if isinstance(value, UnaryAlgebra):
        return hasse(value.base)
    if isinstance(value, (Poset, Jsl)):
        return hasse(value)
    if isinstance(value, Rel):
        return bipartite(value)
    if isinstance(value, UGraph):
        return graph_dot(value)
    raise TypeError(f"no DOT rendering for {type(value).__name__}")
