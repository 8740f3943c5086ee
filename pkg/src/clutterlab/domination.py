"""Exact domination parameters of clutters.

* ``epsilon``: fewest edges forming an edgewise-dominant family.
* ``independent_domination``: smallest inclusion-maximal independent set.
* ``big_height``: largest minimal vertex cover, ``|V| - independent_domination``.
* ``edge_cover_number``: fewest edges whose union is every vertex.

All solvers are exact and deterministic.  Ties between optimal witnesses are
broken by the canonical edge order (for edge families) or by vertex index (for
independent sets), never by search timing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .clutter import Clutter, VertexSet, members, neighbor_table
from .errors import IsolatedVertex, NoEdges, NotAnEdge


def _greedy_cover(universe: VertexSet, sets: Sequence[VertexSet]) -> int | None:
    uncovered = universe
    used = 0
    while uncovered:
        best = max(sets, key=lambda s: (s & uncovered).bit_count(), default=0)
        if best & uncovered == 0:
            return None
        uncovered &= ~best
        used += 1
    return used


def min_cover(universe: VertexSet, sets: Sequence[VertexSet]) -> tuple[int, ...] | None:
    """Indices of a smallest subfamily of ``sets`` whose union contains ``universe``.

    Iterative deepening on the family size, bounded above by the greedy cover.
    Each level branches on the uncovered element with the fewest covering
    sets.  Returns ``None`` when no cover exists.
    """
    upper = _greedy_cover(universe, sets)
    if upper is None:
        return None
    useful = [i for i, s in enumerate(sets) if s & universe]
    coverers = {
        v: tuple(i for i in useful if sets[i] >> v & 1) for v in members(universe)
    }
    widest = max(((sets[i] & universe).bit_count() for i in useful), default=0)

    def search(uncovered: VertexSet, budget: int, chosen: list[int]) -> list[int] | None:
        if not uncovered:
            return chosen
        if budget == 0 or budget * widest < uncovered.bit_count():
            return None
        pivot = min(members(uncovered), key=lambda v: (len(coverers[v]), v))
        for i in coverers[pivot]:
            found = search(uncovered & ~sets[i], budget - 1, chosen + [i])
            if found is not None:
                return found
        return None

    for size in range(upper + 1):
        found = search(universe, size, [])
        if found is not None:
            return tuple(sorted(found))
    raise AssertionError("greedy bound not attained")  # pragma: no cover


def dominated_by(C: Clutter) -> tuple[VertexSet, ...]:
    """For each edge ``e``, the vertices lying in ``e`` or with a neighbor in ``e``."""
    nbrs = neighbor_table(C)
    out = []
    for e in C.edges:
        reach = e
        for u in members(e):
            reach |= nbrs[u]
        out.append(reach)
    return tuple(out)


def _must_dominate(C: Clutter) -> VertexSet:
    return C.support & ~C.trivial_vertices


def is_edgewise_dominant(C: Clutter, F: Sequence[VertexSet]) -> bool:
    """Check that every non-isolated vertex outside a trivial edge is in, or next to, an edge of F."""
    C.require_proper()
    edge_set = set(C.edges)
    for f in F:
        if f not in edge_set:
            raise NotAnEdge(f"{members(f)} is not an edge of the clutter")
    reach = 0
    for f, r in zip(C.edges, dominated_by(C)):
        if f in F:
            reach |= r
    return _must_dominate(C) & ~reach == 0


def epsilon(C: Clutter) -> tuple[int, tuple[VertexSet, ...]]:
    """Edgewise domination number with an optimal family as witness."""
    C.require_proper()
    idx = min_cover(_must_dominate(C), dominated_by(C))
    assert idx is not None, "every edge dominates its own vertices"
    return len(idx), tuple(C.edges[i] for i in idx)


def independent_domination(C: Clutter) -> tuple[int, VertexSet]:
    """Smallest maximal independent set, found by depth-first search with pruning.

    Vertices are decided in index order, exclusion first.  An excluded vertex
    stays viable only while some edge through it avoids every other excluded
    vertex, which is exactly what maximality demands once all vertices are
    decided.
    """
    C.require_proper()
    n = C.n
    incident = [tuple(e for e in C.edges if e >> v & 1) for v in range(n)]
    best: list = [n + 1, 0]

    def blockable(v: int, excluded: VertexSet) -> bool:
        others = excluded & ~(1 << v)
        return any(e & others == 0 for e in incident[v])

    def search(v: int, chosen: VertexSet, excluded: VertexSet) -> None:
        size = chosen.bit_count()
        if size >= best[0]:
            return
        if v == n:
            best[0], best[1] = size, chosen
            return
        bit = 1 << v
        out = excluded | bit
        if all(blockable(u, out) for u in members(out)):
            search(v + 1, chosen, out)
        grown = chosen | bit
        if not any(e & ~grown == 0 for e in incident[v]):
            search(v + 1, grown, excluded)

    search(0, 0, 0)
    return best[0], best[1]


def big_height(C: Clutter) -> int:
    """Largest cardinality of a minimal vertex cover."""
    C.require_proper()
    if not C.edges:
        raise NoEdges("big height needs at least one edge")
    return C.n - independent_domination(C)[0]


def edge_cover_number(C: Clutter) -> int:
    return len(edge_cover(C))


def edge_cover(C: Clutter) -> tuple[VertexSet, ...]:
    """A smallest family of edges whose union is the whole vertex set."""
    C.require_proper()
    if C.isolated:
        raise IsolatedVertex("an isolated vertex cannot be covered by edges")
    idx = min_cover(C.vertex_mask, C.edges)
    assert idx is not None
    return tuple(C.edges[i] for i in idx)


@dataclass(frozen=True)
class DominationReport:
    epsilon: int
    i_dom: int
    big_height: int
    alpha: int
    witness_F: tuple[VertexSet, ...]
    witness_I: VertexSet


def domination_report(C: Clutter) -> DominationReport:
    """All domination parameters at once.

    ``alpha`` is taken on the clutter with isolated vertices removed, since no
    edge family can cover an isolated vertex.
    """
    eps, fam = epsilon(C)
    i_dom, ind = independent_domination(C)
    support = C.support
    alpha = len(min_cover(support, C.edges) or ())
    return DominationReport(
        epsilon=eps,
        i_dom=i_dom,
        big_height=C.n - i_dom,
        alpha=alpha,
        witness_F=fam,
        witness_I=ind,
    )
