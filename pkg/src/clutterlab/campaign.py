"""Verification campaigns: run every proven inequality over a corpus of clutters."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterable, Sequence

from .bounds import BoundsReport, bounds_report
from .clutter import Clutter, alexander_dual, is_independent, members, strip_isolated
from .corpus import random_clutter
from .domination import epsilon, independent_domination, is_edgewise_dominant
from .errors import InvariantViolation
from .homology import GF2, RATIONALS, FieldSpec
from .invariants import (
    MAX_BETTI_VERTICES,
    betti_table,
    homology_vanishing_report,
    pd_via_terai,
)

EXHAUSTIVE_MINIMALITY_EDGES = 15


@dataclass
class CheckResult:
    clutter: Clutter
    violations: list[str] = dc_field(default_factory=list)
    reports: dict[str, BoundsReport] = dc_field(default_factory=dict)
    field_disagreement: bool = False

    def dump(self) -> dict:
        C = self.clutter
        return {
            "vertices": list(C.ground),
            "edges": C.edge_names(),
            "violations": list(self.violations),
        }


def check_domination_witnesses(C: Clutter) -> list[str]:
    out = []
    eps, fam = epsilon(C)
    if not is_edgewise_dominant(C, list(fam)):
        out.append("epsilon witness is not edgewise dominant")
    # Dominance is monotone in F, so ruling out every (eps-1)-family suffices.
    if eps and len(C.edges) <= EXHAUSTIVE_MINIMALITY_EDGES:
        for smaller in combinations(C.edges, eps - 1):
            if is_edgewise_dominant(C, list(smaller)):
                out.append(f"a family of size {eps - 1} is already dominant")
                break
    i_dom, ind = independent_domination(C)
    if ind.bit_count() != i_dom or not is_independent(C, ind):
        out.append("independent-domination witness is not independent")
    for v in members(C.vertex_mask & ~ind):
        if is_independent(C, ind | 1 << v):
            out.append("independent-domination witness is not maximal")
            break
    return out


def check_clutter(
    C: Clutter,
    fields: Sequence[FieldSpec] = (GF2, RATIONALS),
    max_n: int = MAX_BETTI_VERTICES,
    terai_max_n: int = 7,
) -> CheckResult:
    """Check every inequality and identity on one clutter, over each field."""
    result = CheckResult(C)
    bad = result.violations
    bad.extend(check_domination_witnesses(C))
    bare, _ = strip_isolated(C)
    for f in fields:
        try:
            report = bounds_report(C, f, max_n)
        except InvariantViolation as exc:
            bad.append(f"[{f.name}] {exc}")
            continue
        result.reports[f.name] = report
        vr = homology_vanishing_report(C, f, max_n)
        if not vr.pd_corollary_holds:
            bad.append(f"[{f.name}] homology below |V| - pd - 1 = {vr.pd_threshold}: {vr.homology.nonzero()}")
        if not vr.eps_corollary_holds:
            bad.append(f"[{f.name}] homology below eps - 1 = {vr.eps_threshold}: {vr.homology.nonzero()}")
        if bare.edges:
            table = betti_table(bare, f, max_n)
            gens = sorted(A for i, A, _ in table.entries if i == 1)
            if gens != sorted(bare.edges):
                bad.append(f"[{f.name}] linear-strand supports differ from the edges")
            if table.pd != report.pd:
                bad.append(f"[{f.name}] table pd {table.pd} != reported pd {report.pd}")
            dual = alexander_dual(bare)
            eps_dual, _ = epsilon(dual)
            if report.reg_of_ideal > bare.n - eps_dual:
                bad.append(f"[{f.name}] reg {report.reg_of_ideal} > |V| - eps(dual) = {bare.n - eps_dual}")
            if bare.n <= terai_max_n:
                terai = pd_via_terai(bare, f, max_n)
                if terai != report.pd:
                    bad.append(f"[{f.name}] Terai: reg(dual) = {terai} != pd = {report.pd}")
    if len(result.reports) == len(fields) > 1:
        values = {(r.pd, r.reg_of_ideal) for r in result.reports.values()}
        result.field_disagreement = len(values) > 1
    if bare.edges and GF2 in fields and RATIONALS in fields:
        mod2 = betti_table(bare, GF2, max_n)
        rat = betti_table(bare, RATIONALS, max_n)
        for i, A, b in rat.entries:
            if mod2[i, A] < b:
                bad.append(f"beta_{i},{members(A)} over gf2 smaller than over q")
    return result


@dataclass
class CampaignSummary:
    command: str
    clutters: int = 0
    violations: int = 0
    field_disagreements: int = 0
    tight_edgewise: int = 0
    tight_faltings: int = 0
    predicate_true: int = 0
    counterexamples: list[dict] = dc_field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        self.clutters += 1
        if result.violations:
            self.violations += 1
            self.counterexamples.append(result.dump())
        if result.field_disagreement:
            self.field_disagreements += 1
        report = next(iter(result.reports.values()), None)
        if report is not None:
            self.tight_edgewise += report.tight_edgewise
            self.tight_faltings += report.tight_faltings
            self.predicate_true += report.comparison_predicate

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "clutters": self.clutters,
            "violations": self.violations,
            "field_disagreements": self.field_disagreements,
            "tight_edgewise": self.tight_edgewise,
            "tight_faltings": self.tight_faltings,
            "predicate_true": self.predicate_true,
            "counterexamples": self.counterexamples,
        }


def run_campaign(
    command: str,
    clutters: Iterable[Clutter],
    fields: Sequence[FieldSpec] = (GF2, RATIONALS),
    max_n: int = MAX_BETTI_VERTICES,
) -> CampaignSummary:
    summary = CampaignSummary(command)
    for C in clutters:
        summary.add(check_clutter(C, fields, max_n))
    return summary


def fuzz_clutters(n: int, trials: int, seed: int) -> list[Clutter]:
    rng = random.Random(seed)
    return [random_clutter(rng, n) for _ in range(trials)]
