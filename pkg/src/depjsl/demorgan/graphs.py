from __future__ import annotations
"""Undirected graphs (self-loops allowed) and classical graph isomorphism."""

import logging
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

import numpy as np

from depjsl.errors import NotReducedError, NotSymmetricError
from depjsl.finrel.finset import FinSet
from depjsl.finrel.relation import Rel

__all__ = [
    "UGraph",
    "ugraph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "self_loops",
    "chain_graph",
    "complete_bipartite",
    "reflexive_graph",
    "graph_isomorphism",
    "reduced_graph_iso",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UGraph:
    """
    An undirected graph ``(V, E)`` with ``E ⊆ V × V`` symmetric.

    Attributes:
        vertices: the vertex set
        edges: the symmetric edge relation; ``(v, v)`` is a self-loop
    """

    vertices: FinSet
    edges: Rel

    def __post_init__(self) -> None:
        if self.edges.source != self.vertices or self.edges.target != self.vertices:
            raise NotSymmetricError("edge relation is not on the vertex set")
        asym = self.edges.matrix & ~self.edges.matrix.T
        if asym.any():
            a, b = (int(v) for v in np.argwhere(asym)[0])
            pair = (self.vertices[a], self.vertices[b])
            raise NotSymmetricError(f"edge {pair!r} has no reverse", witness=pair)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def adjacency(self) -> np.ndarray:
        return self.edges.matrix

    def degrees(self) -> np.ndarray:
        return self.edges.matrix.sum(axis=1)

    def loops(self) -> np.ndarray:
        return np.diag(self.edges.matrix).copy()

    def neighbours(self, v: Hashable) -> frozenset:
        return self.edges.image(v)

    def edge_list(self) -> List[Tuple[Hashable, Hashable]]:
        """Each undirected edge once, as ``(a, b)`` with ``a`` not after ``b``."""
        m = self.edges.matrix
        return [(self.vertices[a], self.vertices[b]) for a, b in np.argwhere(np.triu(m))]

    def is_reduced(self) -> bool:
        return self.edges.is_reduced()


def ugraph(vertices: Iterable[Hashable], edges: Iterable[Tuple[Hashable, Hashable]]) -> UGraph:
    """Build a graph from unordered edges; each edge is added in both directions."""
    v = vertices if isinstance(vertices, FinSet) else FinSet(tuple(vertices))
    both = []
    for a, b in edges:
        both.append((a, b))
        both.append((b, a))
    return UGraph(v, Rel.from_pairs(v, v, both))


def _from_matrix(n: int, m: np.ndarray, start: int = 0) -> UGraph:
    v = FinSet(tuple(range(start, start + n)))
    return UGraph(v, Rel(v, v, m))


def complete_graph(n: int) -> UGraph:
    """``K_n``: every pair of distinct vertices, no loops."""
    return _from_matrix(n, ~np.eye(n, dtype=bool))


def cycle_graph(n: int) -> UGraph:
    idx = np.arange(n)
    m = np.zeros((n, n), dtype=bool)
    m[idx, (idx + 1) % n] = True
    return _from_matrix(n, m | m.T)


def path_graph(n: int) -> UGraph:
    m = np.eye(n, k=1, dtype=bool)
    return _from_matrix(n, m | m.T)


def self_loops(n: int) -> UGraph:
    return _from_matrix(n, np.eye(n, dtype=bool))


def chain_graph(n: int) -> UGraph:
    """Vertices ``1 … n`` with ``x — y`` iff ``x + y > n``."""
    idx = np.arange(1, n + 1)
    return _from_matrix(n, idx[:, None] + idx[None, :] > n, start=1)


def complete_bipartite(x: int, y: int) -> UGraph:
    """``K_{x,y}`` on vertices ``0 … x+y-1``, the first *x* forming one side."""
    side = np.arange(x + y) < x
    return _from_matrix(x + y, side[:, None] != side[None, :])


def reflexive_graph(n: int) -> UGraph:
    """Every pair of vertices adjacent, loops included."""
    return _from_matrix(n, np.ones((n, n), dtype=bool))


def graph_isomorphism(g1: UGraph, g2: UGraph) -> Optional[Dict[Hashable, Hashable]]:
    """
    A vertex bijection carrying the edges of *g1* onto those of *g2*, or ``None``.

    Plain backtracking; candidates must agree on degree, self-loop and the
    sorted degrees of their neighbours.
    """
    if len(g1) != len(g2):
        return None
    a, b = g1.adjacency, g2.adjacency
    if a.sum() != b.sum():
        return None
    d1, d2 = g1.degrees(), g2.degrees()

    def signature(m: np.ndarray, deg: np.ndarray, v: int) -> Tuple:
        return int(deg[v]), bool(m[v, v]), tuple(sorted(int(deg[u]) for u in np.flatnonzero(m[v])))

    s1 = [signature(a, d1, v) for v in range(len(g1))]
    s2 = [signature(b, d2, v) for v in range(len(g2))]
    if sorted(s1) != sorted(s2):
        return None
    order = sorted(range(len(g1)), key=lambda v: -int(d1[v]))
    assign: Dict[int, int] = {}
    used = [False] * len(g2)

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in range(len(g2)):
            if used[w] or s1[v] != s2[w]:
                continue
            if all(a[v, u] == b[w, x] for u, x in assign.items()) and a[v, v] == b[w, w]:
                assign[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                del assign[v]
                used[w] = False
        return False

    if not extend(0):
        return None
    return {g1.vertices[v]: g2.vertices[w] for v, w in assign.items()}


def reduced_graph_iso(g1: UGraph, g2: UGraph) -> Optional[Dict[Hashable, Hashable]]:
    """
    Graph isomorphism between reduced graphs.

    For reduced graphs this exists exactly when they are UG-isomorphic, and
    exactly when their De Morgan algebras are isomorphic.

    Raises:
        NotReducedError: either graph is not reduced.
    """
    for g in (g1, g2):
        wit = g.edges.unreduced_witness()
        if wit is not None:
            raise NotReducedError(f"graph is not reduced: {wit[0]} {wit[1]!r}", witness=wit)
    return graph_isomorphism(g1, g2)
