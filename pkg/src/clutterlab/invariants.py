"""Multigraded Betti numbers by Hochster's formula, with pd and regularity.

Everything is stated for the quotient ``S/I(C)``:

    beta_{i,A}(S/I) = dim H~_{|A|-i-1}(complex of C restricted to A),  i >= 1.

This is the ideal-level formula shifted by one homological degree, so
``pd(S/I) = pd(I) + 1``.  Regularity is reported for the ideal,
``reg(I) = max(|A| - i) + 1`` over nonzero ``beta_{i,A}(S/I)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .clutter import Clutter, VertexSet, alexander_dual, canonical_key, strip_isolated, vset
from .domination import epsilon
from .errors import IsolatedVertex, TooLarge
from .homology import FieldSpec, HomologyProfile, has_cone_vertex, homology_dims, induced_complex

MAX_BETTI_VERTICES = 12


@dataclass(frozen=True)
class BettiTable:
    """Nonzero ``beta_{i,A}(S/I(C))`` keyed by homological index and support."""

    ground: tuple[str, ...]
    entries: tuple[tuple[int, VertexSet, int], ...]

    def __getitem__(self, key: tuple[int, VertexSet]) -> int:
        i, A = key
        for j, B, b in self.entries:
            if j == i and B == A:
                return b
        return 0

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def pd(self) -> int:
        return max((i for i, _, _ in self.entries), default=0)

    @property
    def reg(self) -> int:
        return max((A.bit_count() - i + 1 for i, A, _ in self.entries), default=0)

    def graded(self) -> dict[tuple[int, int], int]:
        """Coarsen to the standard ``(i, degree) -> beta`` table."""
        out: dict[tuple[int, int], int] = {}
        for i, A, b in self.entries:
            key = (i, A.bit_count())
            out[key] = out.get(key, 0) + b
        return dict(sorted(out.items()))


def _check_betti_input(C: Clutter, max_n: int) -> None:
    C.require_proper()
    if C.isolated:
        raise IsolatedVertex("Hochster enumeration expects no isolated vertices")
    if C.n > max_n:
        raise TooLarge(f"{C.n} vertices exceeds the Betti guard of {max_n}")


@lru_cache(maxsize=4096)
def _entries(C: Clutter, field: FieldSpec) -> tuple[tuple[int, VertexSet, int], ...]:
    out = []
    for size in range(1, C.n + 1):
        for idx in combinations(range(C.n), size):
            A = vset(idx)
            if has_cone_vertex(C, A):
                continue
            h = homology_dims(induced_complex(C, A), field)
            for d, dim in h.nonzero().items():
                out.append((size - d - 1, A, dim))
    out.sort(key=lambda t: (t[0], canonical_key(t[1])))
    return tuple(out)


def betti_table(C: Clutter, field: FieldSpec, max_n: int = MAX_BETTI_VERTICES) -> BettiTable:
    _check_betti_input(C, max_n)
    return BettiTable(C.ground, _entries(C, field))


def _stripped(C: Clutter, max_n: int) -> Clutter:
    C.require_proper()
    bare, _ = strip_isolated(C)
    if bare.n > max_n:
        raise TooLarge(f"{bare.n} non-isolated vertices exceeds the Betti guard of {max_n}")
    return bare


def pd_quotient(C: Clutter, field: FieldSpec, max_n: int = MAX_BETTI_VERTICES) -> int:
    """Projective dimension of ``S/I(C)``; isolated vertices are ignored."""
    bare = _stripped(C, max_n)
    if not bare.edges:
        return 0
    return betti_table(bare, field, max_n).pd


def reg_ideal(C: Clutter, field: FieldSpec, max_n: int = MAX_BETTI_VERTICES) -> int:
    """Regularity of ``I(C)``; the zero ideal is given regularity 0."""
    bare = _stripped(C, max_n)
    if not bare.edges:
        return 0
    return betti_table(bare, field, max_n).reg


def pd_via_terai(C: Clutter, field: FieldSpec, max_n: int = MAX_BETTI_VERTICES) -> int:
    """``reg`` of the Alexander dual, which equals ``pd(S/I(C))``."""
    C.require_proper()
    if C.isolated:
        raise IsolatedVertex("Alexander dual needs a clutter without isolated vertices")
    dual = alexander_dual(C)
    if dual.improper:
        return 0
    return reg_ideal(dual, field, max_n)


@dataclass(frozen=True)
class VanishingReport:
    homology: HomologyProfile
    pd: int
    epsilon: int
    vertices: int
    pd_threshold: int
    eps_threshold: int
    pd_corollary_holds: bool
    eps_corollary_holds: bool

    @property
    def holds(self) -> bool:
        return self.pd_corollary_holds and self.eps_corollary_holds


def homology_vanishing_report(
    C: Clutter, field: FieldSpec, max_n: int = MAX_BETTI_VERTICES
) -> VanishingReport:
    """Check that the full complex has no homology below ``|V| - pd - 1`` nor below ``eps - 1``.

    The complex lives on the non-isolated vertices; with an isolated vertex it
    would be a cone and trivially acyclic.
    """
    bare = _stripped(C, max_n)
    h = homology_dims(induced_complex(bare, bare.vertex_mask), field)
    pd = pd_quotient(bare, field, max_n)
    eps, _ = epsilon(bare)
    pd_cut = bare.n - pd - 1
    eps_cut = eps - 1
    return VanishingReport(
        homology=h,
        pd=pd,
        epsilon=eps,
        vertices=bare.n,
        pd_threshold=pd_cut,
        eps_threshold=eps_cut,
        pd_corollary_holds=all(h[k] == 0 for k in range(-1, pd_cut)),
        eps_corollary_holds=all(h[k] == 0 for k in range(-1, eps_cut)),
    )
