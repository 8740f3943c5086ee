"""Clutters built from graphs: connected-subgraph clutters and path clutters.

``connected_graph_clutter(G, k)`` has as edges the ``k``-subsets of vertices
inducing a connected subgraph of ``G``.  For ``k = 2`` this is just the edge
set of ``G``.  Closed forms for paths and cycles live in :func:`closed_forms`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .clutter import Clutter, Graph, VertexSet, graph_from_edges, members, vset
from .errors import BadK, BadSpec, NotUniform, TooLarge, UnknownVertex

MAX_REALIZABILITY_VERTICES = 7


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.kind not in ("path", "cycle"):
            raise BadSpec(f"kind must be 'path' or 'cycle', got {self.kind!r}")
        if self.n < (3 if self.kind == "cycle" else 1):
            raise BadSpec(f"{self.kind} needs more vertices than {self.n}")
        if not 2 <= self.k <= self.n:
            raise BadSpec(f"k={self.k} outside 2..{self.n}")


@dataclass(frozen=True)
class ClosedForms:
    i_formula: int
    eps_formula: int
    pd_formula: int


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def standard_graph(spec: FamilySpec) -> Graph:
    """Path 1-2-...-n or cycle 1-2-...-n-1, labeled ``"1".."n"``."""
    pairs = [(v, v + 1) for v in range(spec.n - 1)]
    if spec.kind == "cycle":
        pairs.append((spec.n - 1, 0))
    return graph_from_edges(spec.n, pairs)


def is_connected_within(G: Graph, A: VertexSet) -> bool:
    """Whether the induced subgraph on ``A`` is connected (the empty graph is not)."""
    if A == 0:
        return False
    seen = A & -A
    frontier = seen
    while frontier:
        grown = 0
        for v in members(frontier):
            grown |= G.adjacency[v]
        frontier = grown & A & ~seen
        seen |= frontier
    return seen == A


def _check_k(G: Graph, k: int) -> None:
    if not 2 <= k <= G.n:
        raise BadK(f"k={k} outside 2..{G.n}")


def connected_graph_clutter(G: Graph, k: int) -> Clutter:
    _check_k(G, k)
    edges = tuple(
        A for A in (vset(c) for c in combinations(range(G.n), k)) if is_connected_within(G, A)
    )
    return Clutter(G.ground, edges)


def _traceable(G: Graph, A: VertexSet) -> bool:
    """Whether the vertices of ``A`` can be ordered so consecutive ones are adjacent."""
    verts = members(A)
    # ends[S] = mask of vertices that can end a path visiting exactly S.
    ends = {1 << v: 1 << v for v in verts}
    for _ in range(len(verts) - 1):
        nxt: dict[int, int] = {}
        for S, tails in ends.items():
            reach = 0
            for t in members(tails):
                reach |= G.adjacency[t]
            for v in members(reach & A & ~S):
                T = S | 1 << v
                nxt[T] = nxt.get(T, 0) | 1 << v
        ends = nxt
    return A in ends


def path_clutter_undirected(G: Graph, k: int) -> Clutter:
    """``k``-subsets that can be traversed as a path in ``G`` (not necessarily induced)."""
    _check_k(G, k)
    edges = tuple(A for A in (vset(c) for c in combinations(range(G.n), k)) if _traceable(G, A))
    return Clutter(G.ground, edges)


def is_simplicial_graph(G: Graph, v: int) -> bool:
    if not 0 <= v < G.n:
        raise UnknownVertex(f"vertex index {v} out of range")
    nb = G.adjacency[v]
    return all(nb & ~(1 << u) & ~G.adjacency[u] == 0 for u in members(nb))


def is_simplicial_clutter(C: Clutter, v: int) -> bool:
    """Any two edges through ``v`` have a third edge inside their union minus ``v``."""
    C.require_proper()
    if not 0 <= v < C.n:
        raise UnknownVertex(f"vertex index {v} out of range")
    bit = 1 << v
    through = [e for e in C.edges if e & bit]
    for a, b in combinations(through, 2):
        room = (a | b) & ~bit
        if not any(g & ~room == 0 for g in C.edges):
            return False
    return True


def simplicial_vertices(C: Clutter) -> VertexSet:
    return vset(v for v in range(C.n) if is_simplicial_clutter(C, v))


def closed_forms(spec: FamilySpec) -> ClosedForms:
    n, k = spec.n, spec.k
    eps = _ceil_div(n, 3 * k - 2)
    if spec.kind == "cycle":
        return ClosedForms(
            i_formula=_ceil_div((k - 1) * n, k + 1),
            eps_formula=eps,
            pd_formula=n // (k + 1) + _ceil_div(n, k + 1),
        )
    return ClosedForms(
        i_formula=_ceil_div(k * n, k + 1) - (n + 1) // (k + 1),
        eps_formula=eps,
        pd_formula=n // (k + 1) + (n + 1) // (k + 1),
    )


def family_clutter(spec: FamilySpec) -> Clutter:
    return connected_graph_clutter(standard_graph(spec), spec.k)


def all_graphs(n: int, names: tuple[str, ...] | None = None) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices.

    Graph number ``code`` has the pair ``(u, v)`` (in lexicographic pair
    order) exactly when bit ``j`` of ``code`` is set for that pair's position.
    """
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        chosen = [p for j, p in enumerate(pairs) if code >> j & 1]
        yield graph_from_edges(n, chosen, names)


def realizability_search(C: Clutter, k: int) -> Graph | None:
    """First graph ``G`` (in code order) with ``connected_graph_clutter(G, k) == C``, if any."""
    C.require_proper()
    if any(e.bit_count() != k for e in C.edges):
        raise NotUniform(f"clutter is not {k}-uniform")
    if C.n > MAX_REALIZABILITY_VERTICES:
        raise TooLarge(f"search limited to {MAX_REALIZABILITY_VERTICES} vertices")
    if not 2 <= k <= C.n:
        raise BadK(f"k={k} outside 2..{C.n}")
    target = set(C.edges)
    for G in all_graphs(C.n, C.ground):
        candidate = connected_graph_clutter(G, k)
        if set(candidate.edges) == target:
            return G
    return None


def path_counterexample_search(max_n: int = 6) -> Graph | None:
    """Smallest graph whose simplicial vertices are all but one, yet whose 3-path clutter has none.

    Every vertex except one central vertex must be simplicial in the graph
    sense, while ``path_clutter_undirected(G, 3)`` has no simplicial vertex
    at all.  Returns None when no such graph exists up to ``max_n``.  Graphs are scanned by vertex count, then code order.
    """
    for n in range(3, max_n + 1):
        for G in all_graphs(n):
            simp = [is_simplicial_graph(G, v) for v in range(n)]
            if simp.count(False) != 1:
                continue
            if any(G.adjacency[v] == 0 for v in range(n)):
                continue
            P = path_clutter_undirected(G, 3)
            if not P.edges:
                continue
            if not any(is_simplicial_clutter(P, v) for v in range(n)):
                return G
    return None

