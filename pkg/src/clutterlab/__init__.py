"""Exact invariants, domination parameters and bounds for clutters."""

from .bounds import (
    BoundsReport,
    alpha_reg_bound,
    bounds_report,
    comparison_predicate,
    edgewise_bound,
    faltings_bound,
    taylor_reg_bound,
    verify_exact_sequence,
)
from .clutter import (
    Clutter,
    Graph,
    add_set,
    alexander_dual,
    colon,
    is_independent,
    make_clutter,
    make_graph,
    minimalize,
    neighbors,
    strip_isolated,
)
from .domination import (
    big_height,
    domination_report,
    edge_cover_number,
    epsilon,
    independent_domination,
    is_edgewise_dominant,
)
from .families import (
    FamilySpec,
    closed_forms,
    connected_graph_clutter,
    is_simplicial_clutter,
    is_simplicial_graph,
    path_clutter_undirected,
    realizability_search,
    standard_graph,
)
from .homology import GF2, RATIONALS, FieldSpec, homology_dims, induced_complex, prime_field
from .invariants import betti_table, homology_vanishing_report, pd_quotient, pd_via_terai, reg_ideal

__version__ = "0.1.0"
