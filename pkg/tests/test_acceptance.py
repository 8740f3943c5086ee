"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s -v``; the lines are also
repeated in the terminal summary.  Random corpora are seeded, so every run
checks exactly the same clutters.
"""

import random
import time
from itertools import combinations

import pytest

from clutterlab.bounds import alpha_reg_bound, taylor_reg_bound, verify_exact_sequence
from clutterlab.clutter import alexander_dual, make_clutter, strip_isolated
from clutterlab.corpus import dense_corpus, exhaustive_corpus, random_colon_pairs, random_corpus
from clutterlab.domination import epsilon, independent_domination
from clutterlab.families import (
    FamilySpec,
    all_graphs,
    closed_forms,
    connected_graph_clutter,
    family_clutter,
    is_connected_within,
    is_simplicial_clutter,
    is_simplicial_graph,
    realizability_search,
)
from clutterlab.homology import (
    GF2,
    RATIONALS,
    boundary,
    has_cone_vertex,
    homology_dims,
    induced_complex,
    prime_field,
    reduced_euler_characteristic,
)
from clutterlab.invariants import homology_vanishing_report, pd_quotient, pd_via_terai, reg_ideal

from ._acceptance import record

FIELDS = (GF2, RATIONALS)
RANDOM_SEED, RANDOM_COUNT = 20240601, 600
DENSE_SEED, DENSE_COUNT = 777, 200


@pytest.fixture(scope="module")
def corpus():
    exhaustive = exhaustive_corpus(4)
    rand = random_corpus(RANDOM_SEED, RANDOM_COUNT, (5, 8))
    dense = dense_corpus(DENSE_SEED, DENSE_COUNT, (5, 8))
    assert len(exhaustive) == 194 and len(rand) >= 500
    return exhaustive + rand + dense


@pytest.fixture(scope="module")
def invariants(corpus):
    """Per clutter and field: (n, pd, reg, eps, i)."""
    out = []
    for C in corpus:
        eps = epsilon(C)[0]
        i_dom = independent_domination(C)[0]
        for f in FIELDS:
            out.append((C, f, C.n, pd_quotient(C, f), reg_ideal(C, f), eps, i_dom))
    return out


def describe(bad, total):
    return f"{total} checks, {len(bad)} violations" + (f"; first: {bad[0]}" if bad else "")


def test_criterion_01_domination_columns():
    start = time.perf_counter()
    bad, total = [], 0
    for kind in ("path", "cycle"):
        for k in range(2, 6):
            for n in range(max(k, 3 if kind == "cycle" else k), 11):
                spec = FamilySpec(kind, n, k)
                C, f = family_clutter(spec), closed_forms(spec)
                total += 1
                got = (epsilon(C)[0], independent_domination(C)[0])
                if got != (f.eps_formula, f.i_formula):
                    bad.append((kind, n, k, got, (f.eps_formula, f.i_formula)))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record("1 domination columns (eps, i) vs closed forms", ok, describe(bad, total) + f", {elapsed:.1f}s")
    assert ok


def test_criterion_02_pd_column():
    start = time.perf_counter()
    bad, total = [], 0
    for kind in ("path", "cycle"):
        for k in (2, 3):
            for n in range(max(k, 3 if kind == "cycle" else k), 10):
                spec = FamilySpec(kind, n, k)
                C = family_clutter(spec)
                for f in FIELDS:
                    total += 1
                    pd = pd_quotient(C, f)
                    if pd != closed_forms(spec).pd_formula:
                        bad.append((kind, n, k, f.name, pd))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    record("2 pd column vs closed forms", ok, describe(bad, total) + f", {elapsed:.1f}s")
    assert ok


def test_criterion_03_edgewise_bound(invariants):
    bad = [(C.edge_names(), f.name) for C, f, n, pd, _, eps, _ in invariants if pd > n - eps]
    record("3 pd <= |V| - eps", not bad, describe(bad, len(invariants)))
    assert not bad


def test_criterion_04_faltings_and_comparison(invariants):
    bad, predicate_hits = [], 0
    for C, f, n, pd, _, eps, i_dom in invariants:
        if not C.edges:
            continue
        bh = n - i_dom
        faltings = n - (n - 1) // bh
        if pd > faltings:
            bad.append(("faltings", C.edge_names(), f.name))
        if eps * (n - i_dom) >= i_dom:
            predicate_hits += 1
            if n - eps > faltings:
                bad.append(("comparison", C.edge_names(), f.name))
    detail = describe(bad, len(invariants)) + f", predicate true {predicate_hits} times"
    record("4 Faltings bound and comparison implication", not bad, detail)
    assert not bad


def test_criterion_05_pentagon():
    C = make_clutter(range(1, 6), [{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}])
    D = alexander_dual(C)
    values = {}
    for f in FIELDS:
        eps = epsilon(C)[0]
        pd = pd_quotient(C, f)
        bh = C.n - independent_domination(C)[0]
        values[f.name] = (eps, pd, C.n - eps, C.n - (C.n - 1) // bh, epsilon(D)[0], reg_ideal(C, f))
    ok = all(
        v[:5] == (2, 3, 3, 4, 1) and v[5] <= C.n - v[4] == 4 for v in values.values()
    )
    record("5 pentagon golden case", ok, f"(eps, pd, edgewise, faltings, eps dual, reg) = {values}")
    assert ok


def test_criterion_06_terai(corpus):
    bad, total = [], 0
    for C in corpus:
        if C.n > 7 or not C.edges or C.isolated:
            continue
        for f in FIELDS:
            total += 1
            pd, via_dual = pd_quotient(C, f), pd_via_terai(C, f)
            if pd != via_dual:
                bad.append((C.edge_names(), f.name, pd, via_dual))
    record("6 pd = reg(dual)", not bad, describe(bad, total))
    assert not bad


def _simplicial_cases(max_n=6):
    for n in range(2, max_n + 1):
        for G in all_graphs(n):
            if not is_connected_within(G, (1 << n) - 1):
                continue
            graph_flags = [is_simplicial_graph(G, v) for v in range(n)]
            clutter_flags = {
                k: [is_simplicial_clutter(Ck, v) for v in range(n)]
                for k in range(2, n + 1)
                for Ck in (connected_graph_clutter(G, k),)
            }
            yield G, graph_flags, clutter_flags


@pytest.fixture(scope="module")
def simplicial_cases():
    start = time.perf_counter()
    cases = list(_simplicial_cases())
    return cases, time.perf_counter() - start


def test_criterion_07_simplicial_per_k(simplicial_cases):
    # Literal reading: for EACH k separately, graph-simplicial <=> clutter-simplicial.
    cases, elapsed = simplicial_cases
    bad, total = [], 0
    for G, graph_flags, clutter_flags in cases:
        for k, flags in clutter_flags.items():
            for v, (g, c) in enumerate(zip(graph_flags, flags)):
                total += 1
                if g != c:
                    bad.append((G.edge_list(), k, v, g, c))
    ok = not bad and elapsed < 300
    detail = describe(bad, total) + f", {elapsed:.1f}s"
    record("7 simplicial vertices, per-k biconditional (literal)", ok, detail)
    assert ok, "per-k converse fails; see the decisions ledger"


def test_criterion_07_simplicial_all_k(simplicial_cases):
    # Reading the theorem proves: graph-simplicial <=> simplicial in C_k(G) for every k.
    cases, elapsed = simplicial_cases
    bad, total = [], 0
    for G, graph_flags, clutter_flags in cases:
        for v, g in enumerate(graph_flags):
            total += 1
            every_k = all(flags[v] for flags in clutter_flags.values())
            if g != every_k:
                bad.append((G.edge_list(), v, g, every_k))
    ok = not bad and elapsed < 300
    record("7' simplicial vertices, for-all-k biconditional", ok, describe(bad, total) + f", {elapsed:.1f}s")
    assert ok


def test_criterion_08_observation():
    start = time.perf_counter()
    C = make_clutter("abcde", ["abc", "cde"])
    G = realizability_search(C, 3)
    elapsed = time.perf_counter() - start
    ok = G is None and elapsed < 10
    record("8 {abc, cde} is not a connected graph clutter", ok, f"1024 graphs searched, witness {G}, {elapsed:.2f}s")
    assert ok


def test_criterion_09_regularity_bounds(corpus, invariants):
    bad, taylor_checks, alpha_checks = [], 0, 0
    for C, f, _, _, reg, _, _ in invariants:
        if len(C.edges) <= 12:
            taylor_checks += 1
            if reg > taylor_reg_bound(C):
                bad.append(("taylor", C.edge_names(), f.name))
        if C.edges and not C.isolated:
            alpha_checks += 1
            if reg > alpha_reg_bound(C):
                bad.append(("alpha", C.edge_names(), f.name))
    detail = describe(bad, taylor_checks + alpha_checks) + f" ({taylor_checks} Taylor, {alpha_checks} alpha)"
    record("9 reg <= Taylor bound and alpha bound", not bad, detail)
    assert not bad


def test_criterion_10_exact_sequence():
    pairs = random_colon_pairs(31337, 200)
    bad = []
    for C, A in pairs:
        for f in FIELDS:
            r = verify_exact_sequence(C, A, f)
            if not r.holds:
                bad.append((C.edge_names(), C.names(A), f.name, r))
    record("10 pd(C) <= max(pd(C+A), pd(C:A))", not bad, describe(bad, 2 * len(pairs)))
    assert not bad


def test_criterion_11_homology_vanishing(corpus):
    bad, total = [], 0
    for C in corpus:
        for f in FIELDS:
            total += 1
            r = homology_vanishing_report(C, f)
            if not (r.pd_corollary_holds and r.eps_corollary_holds):
                bad.append((C.edge_names(), f.name, r.homology.nonzero()))
    record("11 reduced homology vanishing below both thresholds", not bad, describe(bad, total))
    assert not bad


def test_criterion_12_homology_engine():
    rng = random.Random(4242)
    complexes = []
    sources = random_corpus(rng.randrange(1 << 32), 200, (1, 8)) + dense_corpus(rng.randrange(1 << 32), 150, (4, 8))
    for C in sources:
        complexes.append((C, rng.randint(0, C.vertex_mask)))
        complexes.append((C, C.vertex_mask))
    bad, cones = [], 0
    for C, A in complexes:
        faces = induced_complex(C, A)
        for d in range(1, faces.dim + 1):
            upper, lower = boundary(faces, d), boundary(faces, d - 1)
            for row in upper:
                total = {}
                for j, a in row.items():
                    for c, b in lower[j].items():
                        total[c] = total.get(c, 0) + a * b
                if any(total.values()):
                    bad.append(("dd", C.edge_names(), A))
        rational = homology_dims(faces, RATIONALS)
        chi = reduced_euler_characteristic(faces)
        for f in (GF2, prime_field(3), RATIONALS):
            h = rational if f is RATIONALS else homology_dims(faces, f)
            if sum((-1) ** d * b for d, b in h.dims.items()) != chi:
                bad.append(("euler", f.name, C.edge_names(), A))
            if any(h[d] < rational[d] for d in rational.dims):
                bad.append(("dominance", f.name, C.edge_names(), A))
        if has_cone_vertex(C, A):
            cones += 1
            if not rational.is_acyclic() or not homology_dims(faces, GF2).is_acyclic():
                bad.append(("cone", C.edge_names(), A))
    ok = not bad and len(complexes) >= 300
    record("12 homology engine properties", ok, describe(bad, len(complexes)) + f" ({cones} cones)")
    assert ok
