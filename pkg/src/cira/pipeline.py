"""End-to-end orchestration: classify, label, graph, suite, with stage timings."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .classify import Classification, classify
from .errors import LabelError
from .graph import CauseEffectGraph, build_graph, graph_to_wire
from .labeling import LabeledSentence, label, labels_to_wire
from .lexicon import CueLexicon
from .suite import TestSuite, generate_suite
from .text import tokenize

STAGES = ("classify", "label", "graph", "testsuite")


@dataclass
class PipelineResult:
    """Stages are populated only as far as the pipeline got; a non-causal
    sentence stops after classification, carrying the stop reason in ``error``."""

    classification: Classification
    labeled: LabeledSentence | None = None
    graph: CauseEffectGraph | None = None
    suite: TestSuite | None = None
    timings_ms: dict[str, float] = field(default_factory=dict)
    error: str | None = None


def run_pipeline(text: str, lexicon: CueLexicon | None = None) -> PipelineResult:
    lex = lexicon or CueLexicon.default()
    timings: dict[str, float] = {}

    start = time.perf_counter()
    sentence = tokenize(text)
    classification = classify(sentence, lex)
    timings["classify"] = (time.perf_counter() - start) * 1000
    if not classification.causal:
        return PipelineResult(classification, timings_ms=timings, error="NOT_CAUSAL")

    start = time.perf_counter()
    try:
        labeled = label(sentence, lex)
    except LabelError as exc:
        timings["label"] = (time.perf_counter() - start) * 1000
        return PipelineResult(classification, timings_ms=timings, error=exc.code)
    timings["label"] = (time.perf_counter() - start) * 1000

    start = time.perf_counter()
    graph = build_graph(labeled)
    timings["graph"] = (time.perf_counter() - start) * 1000

    start = time.perf_counter()
    suite = generate_suite(graph)
    timings["testsuite"] = (time.perf_counter() - start) * 1000

    return PipelineResult(classification, labeled, graph, suite, timings)


def pipeline_to_wire(result: PipelineResult, include_timings: bool = True) -> dict:
    """Wire form with stage keys in pipeline order; absent stages are omitted."""
    doc: dict = {"classification": result.classification.to_wire()}
    if result.labeled is not None:
        doc["labels"] = labels_to_wire(result.labeled)
    if result.graph is not None:
        doc["graph"] = graph_to_wire(result.graph)
    if result.suite is not None:
        doc["suite"] = result.suite.to_wire()
    if result.error is not None:
        doc["error"] = result.error
    if include_timings:
        doc["timings_ms"] = {k: round(v, 3) for k, v in result.timings_ms.items()}
    return doc
