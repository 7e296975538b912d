"""Minimal covering test suites derived from a cause-effect graph.

Every event is Boolean. The generator finds the cause configurations needed to
drive the effects both true and false, and demonstrates each cause's
independent influence, with exactly n+1 cases for n causes (unique-cause
MC/DC over a singular expression).

Construction: each expression node yields (T, F, t*, f*) where T/F are
assignment sets over the node's own literals making it true/false, and t*/f*
are designated representative assignments. A literal yields singletons. For
And, every child's T/F entries are completed with the other children's t*
(keeping them true); Or is the exact dual using f*. Representatives come from
the first child, which makes tie-breaking deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .errors import MissingAssignmentError
from .graph import And, CauseEffectGraph, CauseExpr, Literal, Or


@dataclass(frozen=True)
class Column:
    id: str
    variable: str
    family: str  # "cause" | "effect"

    def to_wire(self) -> dict:
        return {"id": self.id, "variable": self.variable, "family": self.family}


@dataclass(frozen=True)
class TestCase:
    id: str
    assignment: Mapping[str, bool]  # cause id -> event truth value
    outcome: bool
    cells: tuple[str, ...]

    def to_wire(self) -> dict:
        return {
            "id": self.id,
            "values": dict(self.assignment),
            "outcome": self.outcome,
            "cells": list(self.cells),
        }


@dataclass(frozen=True)
class TestSuite:
    columns: tuple[Column, ...]
    cases: tuple[TestCase, ...]

    def to_wire(self) -> dict:
        return {
            "columns": [c.to_wire() for c in self.columns],
            "cases": [c.to_wire() for c in self.cases],
        }


def evaluate(expr: CauseExpr, assignment: Mapping[str, bool]) -> bool:
    """Standard Boolean semantics; a literal honors its negated flag.

    Children are evaluated eagerly so a missing id is always reported.
    """
    if isinstance(expr, Literal):
        try:
            value = assignment[expr.event_id]
        except KeyError:
            raise MissingAssignmentError(expr.event_id) from None
        return (not value) if expr.negated else value
    results = [evaluate(child, assignment) for child in expr.children]
    return all(results) if isinstance(expr, And) else any(results)


_Assignment = dict[str, bool]


def _construct(
    expr: CauseExpr,
) -> tuple[list[_Assignment], list[_Assignment], _Assignment, _Assignment]:
    """Returns (T, F, t*, f*) for the node."""
    if isinstance(expr, Literal):
        sat = not expr.negated
        return (
            [{expr.event_id: sat}],
            [{expr.event_id: not sat}],
            {expr.event_id: sat},
            {expr.event_id: not sat},
        )

    parts = [_construct(child) for child in expr.children]
    conjunction = isinstance(expr, And)
    # Vector keeping a child "neutral": true for And, false for Or.
    neutral = [t_star if conjunction else f_star for _, _, t_star, f_star in parts]

    trues: list[_Assignment] = []
    falses: list[_Assignment] = []
    for i, (t_set, f_set, _, _) in enumerate(parts):
        others: _Assignment = {}
        for j, vec in enumerate(neutral):
            if j != i:
                others |= vec
        for t in t_set:
            trues.append(t | others)
        for f in f_set:
            falses.append(f | others)
    trues = _dedup(trues)
    falses = _dedup(falses)

    if conjunction:
        t_star: _Assignment = {}
        for _, _, ts, _ in parts:
            t_star |= ts
        f_star = dict(parts[0][3])
        for _, _, ts, _ in parts[1:]:
            f_star |= ts
    else:
        f_star = {}
        for _, _, _, fs in parts:
            f_star |= fs
        t_star = dict(parts[0][2])
        for _, _, _, fs in parts[1:]:
            t_star |= fs
    return trues, falses, t_star, f_star


def _dedup(assignments: list[_Assignment]) -> list[_Assignment]:
    seen: set[tuple] = set()
    out: list[_Assignment] = []
    for a in assignments:
        key = tuple(sorted(a.items()))
        if key not in seen:
            seen.add(key)
            out.append(a)
    return out


def generate_suite(graph: CauseEffectGraph) -> TestSuite:
    """True-outcome cases first, then false-outcome cases, ids TC1, TC2, ...

    Cell text is the event's condition, prefixed with "not " exactly when that
    column's value is false. Cause columns show the event's truth value (a
    negated literal still renders the observable state); effect columns show
    the outcome, flipped for negated effects.
    """
    trues, falses, _, _ = _construct(graph.root)
    cause_ids = [c.id for c in graph.causes]
    conditions = {c.id: c.condition for c in graph.causes}

    columns = tuple(
        [Column(c.id, c.variable, "cause") for c in graph.causes]
        + [Column(e.node.id, e.node.variable, "effect") for e in graph.effects]
    )

    cases = []
    for i, raw in enumerate(trues + falses, 1):
        assignment = {cid: raw[cid] for cid in cause_ids}
        outcome = evaluate(graph.root, assignment)
        cells = [_cell(conditions[cid], assignment[cid]) for cid in cause_ids]
        for effect in graph.effects:
            value = (not outcome) if effect.negated else outcome
            cells.append(_cell(effect.node.condition, value))
        cases.append(TestCase(f"TC{i}", assignment, outcome, tuple(cells)))
    return TestSuite(columns, tuple(cases))


def _cell(condition: str, value: bool) -> str:
    return condition if value else f"not {condition}"


@dataclass(frozen=True)
class CoverageReport:
    """Outcome coverage, per-cause independence, and the n+1 minimality bound."""

    outcome_coverage: bool
    independence: bool
    minimality: bool
    witnesses: dict[str, tuple[str, str] | None]
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.outcome_coverage and self.independence and self.minimality

    def to_wire(self) -> dict:
        return {
            "passed": self.passed,
            "outcome_coverage": self.outcome_coverage,
            "independence": self.independence,
            "minimality": self.minimality,
            "witnesses": {
                k: list(v) if v else None for k, v in self.witnesses.items()
            },
            "failures": list(self.failures),
        }


def mcdc_check(suite: TestSuite, graph: CauseEffectGraph) -> CoverageReport:
    """Check a suite against the full-coverage criterion for ``graph``.

    Independence witness for a cause: the first pair of cases (in suite order)
    differing only in that cause with different outcomes.
    """
    failures: list[str] = []

    outcomes = {case.outcome for case in suite.cases}
    outcome_coverage = outcomes == {True, False}
    if not outcome_coverage:
        failures.append(
            "outcome coverage: suite lacks a "
            + ("false" if True in outcomes else "true")
            + "-outcome case"
        )

    witnesses: dict[str, tuple[str, str] | None] = {}
    for cause in graph.causes:
        witness = None
        for a, b in combinations(suite.cases, 2):
            if a.outcome == b.outcome:
                continue
            if _differ_only_in(a.assignment, b.assignment, cause.id):
                witness = (a.id, b.id)
                break
        witnesses[cause.id] = witness
        if witness is None:
            failures.append(f"independence: no witness pair for {cause.id}")
    independence = all(w is not None for w in witnesses.values())

    minimality = len(suite.cases) == len(graph.causes) + 1
    if not minimality:
        failures.append(
            f"minimality: {len(suite.cases)} cases for {len(graph.causes)} causes, "
            f"expected {len(graph.causes) + 1}"
        )

    return CoverageReport(
        outcome_coverage=outcome_coverage,
        independence=independence,
        minimality=minimality,
        witnesses=witnesses,
        failures=tuple(failures),
    )


def _differ_only_in(
    a: Mapping[str, bool], b: Mapping[str, bool], cause_id: str
) -> bool:
    if a.keys() != b.keys():
        return False
    for key in a:
        if key == cause_id:
            if a[key] == b[key]:
                return False
        elif a[key] != b[key]:
            return False
    return True
