import random
from itertools import product

import pytest

from cira.errors import MissingAssignmentError
from cira.graph import (
    And,
    CauseEffectGraph,
    Effect,
    EventNode,
    Literal,
    Or,
    build_graph,
)
from cira.labeling import label
from cira.suite import TestSuite as Suite
from cira.suite import evaluate, generate_suite, mcdc_check
from cira.text import tokenize
from oracles import brute_eval, random_graph


def _graph(root, n, negated_effect=False) -> CauseEffectGraph:
    causes = tuple(EventNode(f"C{i}", f"var {i}", f"cond {i}") for i in range(1, n + 1))
    effect = Effect(EventNode("E1", "out", "reacts"), negated_effect)
    return CauseEffectGraph(causes, (effect,), root)


class TestEvaluate:
    def test_disjunction_false_when_all_false(self):
        expr = Or((Literal("C1"), Literal("C2")))
        assert evaluate(expr, {"C1": False, "C2": False}) is False
        assert evaluate(expr, {"C1": True, "C2": False}) is True

    def test_negated_literal(self):
        assert evaluate(Literal("C1", negated=True), {"C1": False}) is True
        assert evaluate(Literal("C1", negated=True), {"C1": True}) is False

    def test_mixed_tree_matches_hand_truth_table(self):
        expr = Or((And((Literal("C1"), Literal("C2"))), Literal("C3")))
        for a, b, c in product([False, True], repeat=3):
            assignment = {"C1": a, "C2": b, "C3": c}
            assert evaluate(expr, assignment) == ((a and b) or c)

    def test_missing_assignment_names_the_id(self):
        with pytest.raises(MissingAssignmentError) as excinfo:
            evaluate(And((Literal("C1"), Literal("C2"))), {"C1": False})
        assert excinfo.value.event_id == "C2"


class TestGenerateSuite:
    def test_button_sentence_reproduces_reference_table(self, button_sentence):
        suite = generate_suite(build_graph(label(tokenize(button_sentence))))
        assert [(c.id, c.variable, c.family) for c in suite.columns] == [
            ("C1", "the red button", "cause"),
            ("C2", "the power", "cause"),
            ("E1", "the system", "effect"),
        ]
        assert [(t.id, dict(t.assignment), t.outcome) for t in suite.cases] == [
            ("TC1", {"C1": True, "C2": False}, True),
            ("TC2", {"C1": False, "C2": True}, True),
            ("TC3", {"C1": False, "C2": False}, False),
        ]
        assert [t.cells for t in suite.cases] == [
            ("is pushed", "not fails", "shuts down"),
            ("not is pushed", "fails", "shuts down"),
            ("not is pushed", "not fails", "not shuts down"),
        ]

    def test_single_cause_yields_two_cases(self):
        suite = generate_suite(_graph(Literal("C1"), 1))
        assert [(dict(t.assignment), t.outcome) for t in suite.cases] == [
            ({"C1": True}, True),
            ({"C1": False}, False),
        ]

    def test_three_way_conjunction_yields_four_cases(self):
        root = And((Literal("C1"), Literal("C2"), Literal("C3")))
        suite = generate_suite(_graph(root, 3))
        assert len(suite.cases) == 4
        assert suite.cases[0].assignment == {"C1": True, "C2": True, "C3": True}
        assert suite.cases[0].outcome is True
        for case in suite.cases[1:]:
            assert case.outcome is False
            assert sum(1 for v in case.assignment.values() if not v) == 1
        report = mcdc_check(suite, _graph(root, 3))
        assert report.passed

    def test_negated_cause_renders_event_value(self):
        suite = generate_suite(_graph(Literal("C1", negated=True), 1))
        # First case satisfies the expression: the event itself is false.
        assert dict(suite.cases[0].assignment) == {"C1": False}
        assert suite.cases[0].outcome is True
        assert suite.cases[0].cells == ("not cond 1", "reacts")
        assert suite.cases[1].cells == ("cond 1", "not reacts")

    def test_negated_effect_flips_effect_column(self):
        suite = generate_suite(_graph(Literal("C1"), 1, negated_effect=True))
        assert suite.cases[0].cells == ("cond 1", "not reacts")
        assert suite.cases[1].cells == ("not cond 1", "reacts")

    def test_no_duplicate_assignments(self):
        rng = random.Random(7)
        for _ in range(50):
            graph = random_graph(rng, rng.randint(1, 10))
            suite = generate_suite(graph)
            keys = {tuple(sorted(t.assignment.items())) for t in suite.cases}
            assert len(keys) == len(suite.cases)

    def test_rendering_law_per_cell(self):
        rng = random.Random(11)
        for _ in range(30):
            graph = random_graph(rng, rng.randint(1, 8), effects=2)
            suite = generate_suite(graph)
            conditions = {c.id: c.condition for c in graph.causes}
            conditions |= {e.node.id: e.node.condition for e in graph.effects}
            for case in suite.cases:
                for column, cell in zip(suite.columns, case.cells):
                    condition = conditions[column.id]
                    if column.family == "cause":
                        value = case.assignment[column.id]
                    else:
                        negated = next(
                            e.negated for e in graph.effects if e.node.id == column.id
                        )
                        value = (not case.outcome) if negated else case.outcome
                    assert cell == (condition if value else f"not {condition}")

    def test_repeated_generation_is_byte_identical(self, button_sentence):
        from cira.formats import render_suite

        graph = build_graph(label(tokenize(button_sentence)))
        once = render_suite(generate_suite(graph), "json")
        again = render_suite(generate_suite(graph), "json")
        assert once == again


class TestMcdcCheck:
    def test_reference_suite_passes_with_expected_witness(self, button_sentence):
        graph = build_graph(label(tokenize(button_sentence)))
        suite = generate_suite(graph)
        report = mcdc_check(suite, graph)
        assert report.passed
        assert report.outcome_coverage and report.independence and report.minimality
        assert report.witnesses["C1"] == ("TC1", "TC3")
        assert report.witnesses["C2"] == ("TC2", "TC3")
        assert report.failures == ()

    def test_dropping_the_false_case_fails_everything(self, button_sentence):
        graph = build_graph(label(tokenize(button_sentence)))
        suite = generate_suite(graph)
        truncated = Suite(suite.columns, suite.cases[:2])
        report = mcdc_check(truncated, graph)
        assert not report.outcome_coverage
        assert not report.independence
        assert report.witnesses == {"C1": None, "C2": None}
        assert not report.passed
        assert len(report.failures) == 4  # outcome + 2 witnesses + minimality

    def test_random_singular_trees_always_pass(self):
        # Exhaustive 2^n evaluation is the oracle for generated outcomes.
        rng = random.Random(20240609)
        for _ in range(100):
            n = rng.randint(1, 10)
            graph = random_graph(rng, n)
            suite = generate_suite(graph)
            assert len(suite.cases) == n + 1
            for case in suite.cases:
                assert case.outcome == brute_eval(graph.root, case.assignment)
            assert mcdc_check(suite, graph).passed
