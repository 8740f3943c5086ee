"""Clutters (antichains of vertex sets) and the two ideal-level operations on them.

A vertex set is a plain ``int`` bitmask over vertex indices; bit ``i`` set means
vertex ``i`` of the ground set is a member.  Clutters keep a name table so that
reports can be printed with the caller's vertex labels, while all arithmetic
happens on indices.

The canonical edge order is by size, then lexicographically by the sorted list
of member indices.  Every constructor sorts into this order, so two equal
clutters compare (and hash) equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ClutterError,
    DuplicateEdge,
    EmptyEdge,
    EmptySet,
    ImproperClutter,
    IsolatedVertex,
    NonAntichain,
    UnknownVertex,
)

MAX_VERTICES = 64

VertexSet = int


def vset(indices: Iterable[int]) -> VertexSet:
    mask = 0
    for i in indices:
        if i < 0:
            raise UnknownVertex(f"negative vertex index {i}")
        mask |= 1 << i
    return mask


def members(mask: VertexSet) -> tuple[int, ...]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def canonical_key(mask: VertexSet) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), members(mask))


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


def minimalize(sets: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Inclusion-minimal members of ``sets``, deduplicated, in canonical order."""
    kept: list[VertexSet] = []
    # Sorting by size first means a set can only be contained in a later one.
    for s in sorted(set(sets), key=canonical_key):
        if not any(k & ~s == 0 for k in kept):
            kept.append(s)
    return tuple(kept)


def compress(mask: VertexSet, keep: VertexSet) -> VertexSet:
    """Re-index ``mask`` onto the positions of ``keep`` (dropping other bits)."""
    out = 0
    for pos, i in enumerate(members(keep)):
        if mask >> i & 1:
            out |= 1 << pos
    return out


@dataclass(frozen=True)
class Clutter:
    """A ground set of named vertices with an antichain of edges.

    ``improper`` marks the unit ideal, whose single generator is the empty
    monomial; it only ever comes out of :func:`colon`.
    """

    ground: tuple[str, ...]
    edges: tuple[VertexSet, ...]
    improper: bool = False

    def __post_init__(self) -> None:
        ground = tuple(self.ground)
        if len(ground) > MAX_VERTICES:
            raise ClutterError(f"ground set larger than {MAX_VERTICES} vertices")
        if len(set(ground)) != len(ground):
            raise ClutterError("duplicate vertex names in ground set")
        full = (1 << len(ground)) - 1
        edges = tuple(sorted(set(self.edges), key=canonical_key))
        if len(edges) != len(self.edges):
            raise DuplicateEdge("duplicate edge")
        for e in edges:
            if e & ~full:
                raise UnknownVertex(f"edge {members(e)} leaves the ground set")
        if self.improper:
            if edges != (0,):
                raise ClutterError("improper clutter must have exactly the empty edge")
        else:
            if 0 in edges:
                raise EmptyEdge("edges must be nonempty")
            for j, e in enumerate(edges):
                for f in edges[j + 1:]:
                    if e & ~f == 0:
                        raise NonAntichain(f"edge {members(e)} is contained in {members(f)}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "edges", edges)

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << len(self.ground)) - 1

    @property
    def support(self) -> VertexSet:
        out = 0
        for e in self.edges:
            out |= e
        return out

    @property
    def isolated(self) -> VertexSet:
        return self.vertex_mask & ~self.support

    @property
    def trivial_vertices(self) -> VertexSet:
        out = 0
        for e in self.edges:
            if e.bit_count() == 1:
                out |= e
        return out

    def index(self, name: object) -> int:
        try:
            return self.ground.index(str(name))
        except ValueError:
            raise UnknownVertex(f"unknown vertex {name!r}") from None

    def mask(self, names: Iterable[object]) -> VertexSet:
        return vset(self.index(x) for x in names)

    def names(self, mask: VertexSet) -> tuple[str, ...]:
        return tuple(self.ground[i] for i in members(mask))

    def edge_names(self) -> list[list[str]]:
        return [list(self.names(e)) for e in self.edges]

    def require_proper(self) -> None:
        if self.improper:
            raise ImproperClutter("operation undefined on the unit-ideal clutter")

    def __repr__(self) -> str:
        if self.improper:
            return f"Clutter(ground={list(self.ground)}, improper)"
        body = ", ".join("{" + ",".join(self.names(e)) + "}" for e in self.edges)
        return f"Clutter(ground={list(self.ground)}, edges=[{body}])"


def make_clutter(ground: Iterable[object], edges: Iterable[Iterable[object]]) -> Clutter:
    """Build a proper clutter from vertex names and edges given as name collections."""
    names = tuple(str(x) for x in ground)
    if len(set(names)) != len(names):
        raise ClutterError("duplicate vertex names in ground set")
    lookup = {name: i for i, name in enumerate(names)}
    masks: list[VertexSet] = []
    for edge in edges:
        mask = 0
        for x in edge:
            try:
                mask |= 1 << lookup[str(x)]
            except KeyError:
                raise UnknownVertex(f"unknown vertex {x!r}") from None
        if mask == 0:
            raise EmptyEdge("edges must be nonempty")
        if mask in masks:
            raise DuplicateEdge(f"duplicate edge {sorted(map(str, edge))}")
        masks.append(mask)
    return Clutter(names, tuple(masks))


def _check_within(C: Clutter, A: VertexSet) -> None:
    if A < 0 or A & ~C.vertex_mask:
        raise UnknownVertex("vertex set leaves the ground set")


def add_set(C: Clutter, A: VertexSet) -> Clutter:
    """The clutter of ``(I(C), x^A)``: minimal sets of ``E(C) + {A}``."""
    C.require_proper()
    if A == 0:
        raise EmptySet("cannot add the empty set")
    _check_within(C, A)
    return Clutter(C.ground, minimalize(C.edges + (A,)))


def colon(C: Clutter, A: VertexSet) -> Clutter:
    """The clutter of ``I(C) : x^A`` on the ground set with ``A`` removed.

    If some edge lies inside ``A`` the quotient is the unit ideal and the
    improper clutter is returned.
    """
    C.require_proper()
    _check_within(C, A)
    keep = C.vertex_mask & ~A
    ground = C.names(keep)
    if any(e & ~A == 0 for e in C.edges):
        return Clutter(ground, (0,), improper=True)
    residual = minimalize(e & ~A for e in C.edges)
    return Clutter(ground, tuple(compress(e, keep) for e in residual))


def restrict(C: Clutter, keep: VertexSet) -> Clutter:
    """Sub-clutter on ``keep`` made of the edges lying entirely inside it."""
    C.require_proper()
    return Clutter(C.names(keep), tuple(compress(e, keep) for e in C.edges if e & ~keep == 0))


def strip_isolated(C: Clutter) -> tuple[Clutter, VertexSet]:
    """Return the clutter without isolated vertices, and the isolated set itself."""
    C.require_proper()
    iso = C.isolated
    return restrict(C, C.vertex_mask & ~iso), iso


def neighbors(C: Clutter, v: int) -> VertexSet:
    C.require_proper()
    if not 0 <= v < C.n:
        raise UnknownVertex(f"vertex index {v} out of range")
    bit = 1 << v
    out = 0
    for e in C.edges:
        if e & bit:
            out |= e
    return out & ~bit


def neighbor_table(C: Clutter) -> tuple[VertexSet, ...]:
    return tuple(neighbors(C, v) for v in range(C.n))


def is_independent(C: Clutter, A: VertexSet) -> bool:
    C.require_proper()
    return not any(e & ~A == 0 for e in C.edges)


def minimal_transversals(edges: Sequence[VertexSet]) -> tuple[VertexSet, ...]:
    """Minimal sets meeting every edge, by Berge's incremental construction."""
    trans: tuple[VertexSet, ...] = (0,)
    for e in edges:
        grown = []
        for t in trans:
            if t & e:
                grown.append(t)
            else:
                grown.extend(t | (1 << v) for v in members(e))
        trans = minimalize(grown)
    return trans


def alexander_dual(C: Clutter) -> Clutter:
    """Clutter of minimal vertex covers; an involution on clutters without isolated vertices."""
    C.require_proper()
    if C.isolated:
        raise IsolatedVertex(f"isolated vertices {list(C.names(C.isolated))}; strip them first")
    covers = minimal_transversals(C.edges)
    if covers == (0,):
        return Clutter(C.ground, (0,), improper=True)
    return Clutter(C.ground, covers)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adjacency[v]`` is the neighbor mask of ``v``."""

    ground: tuple[str, ...]
    adjacency: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        ground = tuple(self.ground)
        adj = tuple(self.adjacency)
        if len(set(ground)) != len(ground):
            raise ClutterError("duplicate vertex names in ground set")
        if len(ground) > MAX_VERTICES:
            raise ClutterError(f"ground set larger than {MAX_VERTICES} vertices")
        if len(adj) != len(ground):
            raise ClutterError("adjacency table does not match ground set")
        full = (1 << len(ground)) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise UnknownVertex(f"neighbor of {ground[v]} leaves the ground set")
            if nb >> v & 1:
                raise ClutterError(f"loop at vertex {ground[v]}")
            for u in members(nb):
                if not adj[u] >> v & 1:
                    raise ClutterError("adjacency is not symmetric")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "adjacency", adj)

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << len(self.ground)) - 1

    def edge_list(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adjacency[u]) if u < v]

    def index(self, name: object) -> int:
        try:
            return self.ground.index(str(name))
        except ValueError:
            raise UnknownVertex(f"unknown vertex {name!r}") from None

    def __repr__(self) -> str:
        pairs = ", ".join(f"{self.ground[u]}-{self.ground[v]}" for u, v in self.edge_list())
        return f"Graph(ground={list(self.ground)}, edges=[{pairs}])"


def make_graph(ground: Iterable[object], pairs: Iterable[Sequence[object]]) -> Graph:
    names = tuple(str(x) for x in ground)
    lookup = {name: i for i, name in enumerate(names)}
    if len(lookup) != len(names):
        raise ClutterError("duplicate vertex names in ground set")
    adj = [0] * len(names)
    seen: set[frozenset[int]] = set()
    for pair in pairs:
        if len(pair) != 2:
            raise ClutterError(f"graph edge {pair!r} does not have two endpoints")
        try:
            u, v = lookup[str(pair[0])], lookup[str(pair[1])]
        except KeyError as exc:
            raise UnknownVertex(f"unknown vertex {exc.args[0]!r}") from None
        if u == v:
            raise ClutterError(f"loop at vertex {names[u]}")
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateEdge(f"duplicate graph edge {pair!r}")
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(names, tuple(adj))


def graph_from_edges(n: int, pairs: Iterable[tuple[int, int]], names: Sequence[str] | None = None) -> Graph:
    """Index-based graph constructor; names default to ``"1".."n"``."""
    adj = [0] * n
    for u, v in pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    ground = tuple(names) if names is not None else tuple(str(i + 1) for i in range(n))
    return Graph(ground, tuple(adj))
