"""Stanley-Reisner complexes and their reduced homology over a field.

The faces of the complex of a clutter are its independent sets.  Homology is
that of the augmented chain complex, so the complex ``{empty face}`` has one
class in degree -1 and any complex with a vertex has none there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .clutter import Clutter, VertexSet, canonical_key, members
from .errors import ClutterError, TooLarge, UnknownVertex
from .linalg import rank_mod_p, rank_rational

MAX_FACE_VERTICES = 22


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``p == 0`` means the rationals, otherwise GF(p)."""

    p: int = 0

    def __post_init__(self) -> None:
        if self.p and (self.p >= 2**31 or not _is_prime(self.p)):
            raise ClutterError(f"{self.p} is not a prime below 2^31")

    @property
    def kind(self) -> str:
        return "rationals" if self.p == 0 else "prime_field"

    @property
    def name(self) -> str:
        if self.p == 0:
            return "q"
        return "gf2" if self.p == 2 else f"gf:{self.p}"

    def rank(self, rows: Iterable[Mapping[int, int]]) -> int:
        if self.p == 0:
            return rank_rational(rows)
        return rank_mod_p(rows, self.p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Accepts ``q``, ``gf2`` or ``gf:<p>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t == "gf2":
            return cls(2)
        if t.startswith("gf:"):
            try:
                return cls(int(t[3:]))
            except ValueError:
                pass
        raise ClutterError(f"unrecognized field {text!r}; use q, gf2 or gf:<p>")


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)


def prime_field(p: int) -> FieldSpec:
    if p == 0:
        raise ClutterError("0 is not a prime")
    return FieldSpec(p)


@dataclass(frozen=True)
class FaceTable:
    """Faces of a simplicial complex grouped by dimension.

    ``faces_by_dim[d + 1]`` lists the ``d``-dimensional faces in canonical order;
    ``faces_by_dim[0]`` is always ``(0,)``, the empty face.
    """

    vertices: VertexSet
    faces_by_dim: tuple[tuple[VertexSet, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 2

    def faces(self, d: int) -> tuple[VertexSet, ...]:
        if -1 <= d <= self.dim:
            return self.faces_by_dim[d + 1]
        return ()

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.faces_by_dim)

    def __iter__(self):
        for level in self.faces_by_dim:
            yield from level

    @classmethod
    def from_faces(cls, faces: Iterable[VertexSet]) -> FaceTable:
        """Build from an arbitrary face family; it must be closed under subsets."""
        family = set(faces) | {0}
        for f in family:
            for v in members(f):
                if f & ~(1 << v) not in family:
                    raise ClutterError(f"face family not downward closed at {members(f)}")
        top = max(f.bit_count() for f in family)
        levels = [[] for _ in range(top + 1)]
        for f in family:
            levels[f.bit_count()].append(f)
        support = 0
        for f in family:
            support |= f
        return cls(support, tuple(tuple(sorted(lv, key=canonical_key)) for lv in levels))


def induced_complex(C: Clutter, A: VertexSet) -> FaceTable:
    """Independent subsets of ``A``: the complex of ``C`` restricted to ``A``."""
    C.require_proper()
    if A & ~C.vertex_mask:
        raise UnknownVertex("vertex set leaves the ground set")
    if A.bit_count() > MAX_FACE_VERTICES:
        raise TooLarge(f"refusing to enumerate faces on more than {MAX_FACE_VERTICES} vertices")
    verts = members(A)
    inner = [e for e in C.edges if e & ~A == 0]
    through = {v: [e for e in inner if e >> v & 1] for v in verts}
    # Extending a face only by larger vertices keeps every level lexicographic.
    levels: list[tuple[VertexSet, ...]] = [(0,)]
    while True:
        grown = []
        for f in levels[-1]:
            top = f.bit_length()
            for v in verts:
                if v < top:
                    continue
                g = f | 1 << v
                if not any(e & ~g == 0 for e in through[v]):
                    grown.append(g)
        if not grown:
            break
        levels.append(tuple(grown))
    return FaceTable(A, tuple(levels))


def boundary(faces: FaceTable, d: int) -> list[dict[int, int]]:
    """Rows of the boundary map from ``d``-faces to ``(d-1)``-faces.

    Row ``j`` is the boundary of the ``j``-th ``d``-face, keyed by the index of
    each ``(d-1)``-face; removing the vertex in sorted position ``t`` carries
    sign ``(-1)^t``.
    """
    if d < 0 or d > faces.dim:
        return []
    lower = {f: j for j, f in enumerate(faces.faces(d - 1))}
    rows = []
    for f in faces.faces(d):
        row = {}
        for t, v in enumerate(members(f)):
            row[lower[f & ~(1 << v)]] = -1 if t & 1 else 1
        rows.append(row)
    return rows


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers; ``by_degree[d + 1]`` is ``dim H~_d``."""

    by_degree: tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        if -1 <= d < len(self.by_degree) - 1:
            return self.by_degree[d + 1]
        return 0

    @property
    def dims(self) -> dict[int, int]:
        return {d - 1: h for d, h in enumerate(self.by_degree)}

    def nonzero(self) -> dict[int, int]:
        return {d: h for d, h in self.dims.items() if h}

    def is_acyclic(self) -> bool:
        return not any(self.by_degree)


def boundary_ranks(faces: FaceTable, field: FieldSpec) -> list[int]:
    """``ranks[d]`` is the rank of the boundary out of dimension ``d``; index ``dim+1`` is 0."""
    return [field.rank(boundary(faces, d)) for d in range(faces.dim + 1)] + [0]


def homology_dims(faces: FaceTable, field: FieldSpec) -> HomologyProfile:
    ranks = boundary_ranks(faces, field)
    out = []
    for d in range(-1, faces.dim + 1):
        cycles = len(faces.faces(d)) - (ranks[d] if d >= 0 else 0)
        out.append(cycles - ranks[d + 1])
    return HomologyProfile(tuple(out))


def reduced_euler_characteristic(faces: FaceTable) -> int:
    return sum((-1) ** d * len(faces.faces(d)) for d in range(-1, faces.dim + 1))


def has_cone_vertex(C: Clutter, A: VertexSet) -> bool:
    """True when some vertex of ``A`` lies in no edge inside ``A``.

    Such a vertex can be added to every face, so the induced complex is a cone
    and has no reduced homology.
    """
    covered = 0
    for e in C.edges:
        if e & ~A == 0:
            covered |= e
    return A & ~covered != 0
