"""Evaluation harness: classification macro-F1 plus suite accuracy over a corpus.

Headline suite accuracies are per-sentence exact matches (the strictest
reading): the ordered, normalized variable list must equal gold, and the
Boolean configuration matrix must equal gold up to row order. Micro variants
(per variable position / per gold row) are computed alongside.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .classify import classify
from .errors import IdMismatchError, LabelError, MissingGoldError
from .formats import CorpusEntry
from .graph import build_graph
from .labeling import label
from .lexicon import CueLexicon
from .suite import TestSuite, generate_suite
from .text import tokenize


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float

    def to_wire(self) -> dict:
        return {
            "precision": round(self.precision, 6),
            "recall": round(self.recall, 6),
            "f1": round(self.f1, 6),
        }


@dataclass(frozen=True)
class ClassificationMetrics:
    macro_f1: float
    per_class: dict[str, ClassMetrics]
    confusion: dict[str, int]  # tp/fp/fn/tn with "causal" as the positive class
    verdicts: tuple[dict, ...]

    def to_wire(self) -> dict:
        return {
            "macro_f1": round(self.macro_f1, 6),
            "per_class": {k: v.to_wire() for k, v in self.per_class.items()},
            "confusion": dict(self.confusion),
        }


@dataclass(frozen=True)
class SuiteMetrics:
    variable_accuracy: float
    configuration_accuracy: float
    variable_accuracy_micro: float
    configuration_accuracy_micro: float
    evaluated: int
    verdicts: tuple[dict, ...]

    def to_wire(self) -> dict:
        return {
            "variable_accuracy": round(self.variable_accuracy, 6),
            "configuration_accuracy": round(self.configuration_accuracy, 6),
            "variable_accuracy_micro": round(self.variable_accuracy_micro, 6),
            "configuration_accuracy_micro": round(self.configuration_accuracy_micro, 6),
            "evaluated": self.evaluated,
        }


@dataclass(frozen=True)
class EvalReport:
    classification: ClassificationMetrics
    suites: SuiteMetrics
    entries: tuple[dict, ...]

    def to_wire(self) -> dict:
        return {
            "classification": self.classification.to_wire(),
            "suites": self.suites.to_wire(),
            "entries": list(self.entries),
        }

    def summary_text(self) -> str:
        c = self.classification
        s = self.suites
        lines = [
            "classification",
            f"  macro F1                 {c.macro_f1:.4f}",
        ]
        for name in ("causal", "non_causal"):
            m = c.per_class[name]
            lines.append(
                f"  {name:<11}P/R/F1       {m.precision:.4f} / {m.recall:.4f} / {m.f1:.4f}"
            )
        conf = c.confusion
        lines.append(
            f"  confusion (causal=positive)   TP={conf['tp']} FP={conf['fp']} "
            f"FN={conf['fn']} TN={conf['tn']}"
        )
        lines += [
            f"test suites ({s.evaluated} causal entries)",
            f"  variable accuracy        {s.variable_accuracy:.4f} (micro {s.variable_accuracy_micro:.4f})",
            f"  configuration accuracy   {s.configuration_accuracy:.4f} (micro {s.configuration_accuracy_micro:.4f})",
        ]
        return "\n".join(lines) + "\n"


def _prf(tp: int, fp: int, fn: int) -> ClassMetrics:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return ClassMetrics(precision, recall, f1)


def evaluate_classifier(
    entries: list[CorpusEntry], predictions: Mapping[str, bool]
) -> ClassificationMetrics:
    """Macro-F1 over the causal and non-causal classes.

    Zero-denominator precision/recall/F1 are defined as 0, which matters on
    degenerate corpora (single-class gold or predictions).
    """
    entry_ids = {e.id for e in entries}
    if entry_ids != set(predictions):
        missing = sorted(entry_ids - set(predictions))
        extra = sorted(set(predictions) - entry_ids)
        raise IdMismatchError(
            f"predictions do not match entries (missing {missing}, extra {extra})"
        )

    tp = fp = fn = tn = 0
    verdicts = []
    for entry in entries:
        predicted = predictions[entry.id]
        if entry.gold_causal and predicted:
            tp += 1
        elif not entry.gold_causal and predicted:
            fp += 1
        elif entry.gold_causal and not predicted:
            fn += 1
        else:
            tn += 1
        verdicts.append(
            {
                "id": entry.id,
                "gold_causal": entry.gold_causal,
                "predicted_causal": predicted,
                "correct": predicted == entry.gold_causal,
            }
        )

    causal = _prf(tp, fp, fn)
    non_causal = _prf(tn, fn, fp)  # swap roles: non-causal as positive class
    macro = (causal.f1 + non_causal.f1) / 2.0
    return ClassificationMetrics(
        macro_f1=macro,
        per_class={"causal": causal, "non_causal": non_causal},
        confusion={"tp": tp, "fp": fp, "fn": fn, "tn": tn},
        verdicts=tuple(verdicts),
    )


def normalize_name(name: str) -> str:
    """Lowercase, trim, collapse internal whitespace."""
    return " ".join(name.lower().split())


def _suite_rows(suite: TestSuite) -> list[tuple[bool, ...]]:
    # Effect values are read back from the rendered cells via the "not "
    # prefix; the labeler strips negation tokens from events, so a condition
    # text itself never starts with "not ".
    rows = []
    causes = [c.id for c in suite.columns if c.family == "cause"]
    for case in suite.cases:
        row = [case.assignment[cid] for cid in causes]
        for cell in case.cells[len(causes) :]:
            row.append(not cell.startswith("not "))
        rows.append(tuple(row))
    return rows


def evaluate_suites(
    entries: list[CorpusEntry], generated: Mapping[str, TestSuite | None]
) -> SuiteMetrics:
    """Per-sentence variable and configuration accuracy over causal entries.

    Variable match is order-sensitive on normalized names; configuration match
    compares Boolean matrices with rows as sets. A missing generated suite
    counts as a miss on both.
    """
    causal = [e for e in entries if e.gold_causal]
    without_gold = [e.id for e in causal if not e.has_gold_suite]
    if without_gold:
        raise MissingGoldError(without_gold)

    variable_hits = 0
    config_hits = 0
    variable_item_hits = 0
    variable_item_total = 0
    row_hits = 0
    row_total = 0
    verdicts = []
    for entry in causal:
        suite = generated.get(entry.id)
        gold_vars = [normalize_name(v) for v in entry.gold_variables]
        gold_rows = set(entry.gold_configurations)
        variable_item_total += len(gold_vars)
        row_total += len(gold_rows)

        if suite is None:
            verdicts.append(
                {"id": entry.id, "variable_match": False, "configuration_match": False}
            )
            continue

        gen_vars = [normalize_name(c.variable) for c in suite.columns]
        gen_rows = set(_suite_rows(suite))
        variable_match = gen_vars == gold_vars
        config_match = gen_rows == gold_rows
        variable_hits += variable_match
        config_hits += config_match
        variable_item_hits += sum(
            1 for a, b in zip(gen_vars, gold_vars) if a == b
        )
        row_hits += len(gen_rows & gold_rows)
        verdicts.append(
            {
                "id": entry.id,
                "variable_match": variable_match,
                "configuration_match": config_match,
            }
        )

    n = len(causal)
    return SuiteMetrics(
        variable_accuracy=variable_hits / n if n else 0.0,
        configuration_accuracy=config_hits / n if n else 0.0,
        variable_accuracy_micro=(
            variable_item_hits / variable_item_total if variable_item_total else 0.0
        ),
        configuration_accuracy_micro=row_hits / row_total if row_total else 0.0,
        evaluated=n,
        verdicts=tuple(verdicts),
    )


def evaluate_corpus(
    entries: list[CorpusEntry], lexicon: CueLexicon | None = None
) -> EvalReport:
    """Run the pipeline over a corpus and score it against the gold annotations."""
    lex = lexicon or CueLexicon.default()
    predictions: dict[str, bool] = {}
    generated: dict[str, TestSuite | None] = {}
    errors: dict[str, str] = {}
    for entry in entries:
        sentence = tokenize(entry.text)
        predictions[entry.id] = classify(sentence, lex).causal
        if entry.gold_causal:
            try:
                generated[entry.id] = generate_suite(build_graph(label(sentence, lex)))
            except LabelError as exc:
                generated[entry.id] = None
                errors[entry.id] = exc.code

    classification = evaluate_classifier(entries, predictions)
    suites = evaluate_suites(entries, generated)

    suite_verdicts = {v["id"]: v for v in suites.verdicts}
    merged = []
    for verdict in classification.verdicts:
        entry_verdict = dict(verdict)
        sv = suite_verdicts.get(verdict["id"])
        if sv is not None:
            entry_verdict["variable_match"] = sv["variable_match"]
            entry_verdict["configuration_match"] = sv["configuration_match"]
        if verdict["id"] in errors:
            entry_verdict["generation_error"] = errors[verdict["id"]]
        merged.append(entry_verdict)
    return EvalReport(classification, suites, tuple(merged))
