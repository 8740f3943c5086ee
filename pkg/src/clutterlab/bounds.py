"""Upper bounds on projective dimension and regularity, and how they compare.

``n`` below always means the full number of vertices, isolated ones included.
All arithmetic is on integers; the ratio test ``eps >= i / (n - i)`` is
evaluated cross-multiplied.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .clutter import Clutter, VertexSet, add_set, colon, members, strip_isolated
from .domination import edge_cover_number, epsilon, independent_domination
from .errors import ImproperColon, InvariantViolation, IsolatedVertex, NoEdges, TooManyEdges
from .homology import FieldSpec
from .invariants import MAX_BETTI_VERTICES, pd_quotient, reg_ideal

MAX_TAYLOR_EDGES = 20


def edgewise_bound(C: Clutter) -> int:
    C.require_proper()
    return C.n - epsilon(C)[0]


def _faltings(n: int, bh: int) -> int:
    return n - (n - 1) // bh


def faltings_bound(C: Clutter) -> int:
    """``n - floor((n - 1) / bh)`` with ``bh`` the big height."""
    C.require_proper()
    if not C.edges:
        raise NoEdges("Faltings' bound needs a nonzero ideal")
    i_dom, _ = independent_domination(C)
    return _faltings(C.n, C.n - i_dom)


def alpha_reg_bound(C: Clutter) -> int:
    C.require_proper()
    if C.isolated:
        raise IsolatedVertex("edge cover number undefined with isolated vertices")
    return C.n - edge_cover_number(C) + 1


def taylor_reg_bound(C: Clutter) -> int:
    """``max(|union of A| - |A|) + 1`` over nonempty generator subsets ``A``.

    Depth-first over generators in canonical order.  A branch is cut when even
    absorbing every remaining vertex for the cost of one more generator cannot
    beat the best value so far.
    """
    C.require_proper()
    edges = C.edges
    if len(edges) > MAX_TAYLOR_EDGES:
        raise TooManyEdges(f"{len(edges)} generators exceeds the Taylor guard of {MAX_TAYLOR_EDGES}")
    if not edges:
        return 0
    m = len(edges)
    tail_union = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        tail_union[j] = tail_union[j + 1] | edges[j]
    best = [-1]

    def search(j: int, union: VertexSet, count: int) -> None:
        if count and union.bit_count() - count > best[0]:
            best[0] = union.bit_count() - count
        if j == m:
            return
        if (union | tail_union[j]).bit_count() - count - 1 <= best[0]:
            return
        search(j + 1, union | edges[j], count + 1)
        search(j + 1, union, count)

    search(0, 0, 0)
    return best[0] + 1


def comparison_predicate(C: Clutter) -> bool:
    """Whether ``eps * (n - i) >= i``, the condition under which the edgewise bound beats Faltings'."""
    C.require_proper()
    if not C.edges:
        raise NoEdges("comparison needs at least one edge")
    eps, _ = epsilon(C)
    i_dom, _ = independent_domination(C)
    return eps * (C.n - i_dom) >= i_dom


@dataclass(frozen=True)
class ExactSequenceCheck:
    pd: int
    pd_plus: int
    pd_colon: int

    @property
    def holds(self) -> bool:
        return self.pd <= max(self.pd_plus, self.pd_colon)


def verify_exact_sequence(
    C: Clutter, A: VertexSet, field: FieldSpec, max_n: int = MAX_BETTI_VERTICES
) -> ExactSequenceCheck:
    """Projective dimensions of ``C``, ``C + A`` and ``C : A``."""
    C.require_proper()
    if A == 0:
        raise ImproperColon("A must be nonempty")
    quotient = colon(C, A)
    if quotient.improper:
        raise ImproperColon(f"{members(A)} contains an edge, so C : A is the unit ideal")
    return ExactSequenceCheck(
        pd=pd_quotient(C, field, max_n),
        pd_plus=pd_quotient(add_set(C, A), field, max_n),
        pd_colon=pd_quotient(quotient, field, max_n),
    )


@dataclass(frozen=True)
class BoundsReport:
    n: int
    pd: int
    reg_of_ideal: int
    epsilon: int
    i_dom: int
    big_height: int
    alpha: int
    edgewise_bound: int
    faltings_bound: int
    alpha_reg_bound: int
    taylor_reg_bound: int
    comparison_predicate: bool
    tight_edgewise: bool
    tight_faltings: bool
    field: str
    witness_F: tuple[VertexSet, ...] = ()
    witness_I: VertexSet = 0

    def violations(self) -> list[str]:
        """Human-readable list of every proven inequality that fails here."""
        out = []
        if self.n - self.i_dom > self.pd:
            out.append(f"lower bound: n - i = {self.n - self.i_dom} > pd = {self.pd}")
        if self.pd > self.edgewise_bound:
            out.append(f"edgewise: pd = {self.pd} > {self.edgewise_bound}")
        if self.pd > self.faltings_bound:
            out.append(f"faltings: pd = {self.pd} > {self.faltings_bound}")
        if self.reg_of_ideal > self.taylor_reg_bound:
            out.append(f"taylor: reg = {self.reg_of_ideal} > {self.taylor_reg_bound}")
        if self.reg_of_ideal > self.alpha_reg_bound:
            out.append(f"alpha: reg = {self.reg_of_ideal} > {self.alpha_reg_bound}")
        if self.comparison_predicate and self.edgewise_bound > self.faltings_bound:
            out.append(
                f"comparison: predicate holds but edgewise {self.edgewise_bound}"
                f" > faltings {self.faltings_bound}"
            )
        return out

    def as_dict(self) -> dict:
        return asdict(self)


def bounds_report(C: Clutter, field: FieldSpec, max_n: int = MAX_BETTI_VERTICES) -> BoundsReport:
    """Every invariant and bound for ``C``; raises :class:`InvariantViolation` on any failure.

    With no edges, Faltings' bound is reported as ``n`` (the trivial bound) and
    the comparison predicate as false.  The alpha bound is taken on the clutter
    with isolated vertices removed, which does not change regularity.
    """
    C.require_proper()
    bare, _ = strip_isolated(C)
    pd = pd_quotient(C, field, max_n)
    reg = reg_ideal(C, field, max_n)
    eps, fam = epsilon(C)
    i_dom, ind = independent_domination(C)
    bh = C.n - i_dom
    alpha = edge_cover_number(bare)
    edgewise = C.n - eps
    if C.edges:
        faltings = _faltings(C.n, bh)
        predicate = eps * (C.n - i_dom) >= i_dom
    else:
        faltings = C.n
        predicate = False
    report = BoundsReport(
        n=C.n,
        pd=pd,
        reg_of_ideal=reg,
        epsilon=eps,
        i_dom=i_dom,
        big_height=bh,
        alpha=alpha,
        edgewise_bound=edgewise,
        faltings_bound=faltings,
        alpha_reg_bound=bare.n - alpha + 1,
        taylor_reg_bound=taylor_reg_bound(C),
        comparison_predicate=predicate,
        tight_edgewise=pd == edgewise,
        tight_faltings=pd == faltings,
        field=field.name,
        witness_F=fam,
        witness_I=ind,
    )
    problems = report.violations()
    if problems:
        raise InvariantViolation(
            "; ".join(problems),
            {"ground": list(C.ground), "edges": C.edge_names(), "report": report.as_dict()},
        )
    return report
