"""cira: turn conditional requirement sentences into cause-effect graphs and
minimal covering test-case descriptions."""

__version__ = "0.1.0"

from .classify import Classification, classify
from .formats import CorpusEntry, read_bundled_corpus, read_corpus, render_suite
from .graph import (
    And,
    CauseEffectGraph,
    Effect,
    EventNode,
    Literal,
    Or,
    build_graph,
    graph_to_wire,
    wire_to_graph,
)
from .labeling import (
    LabeledSentence,
    LabelerPort,
    LabelKind,
    LabelSpan,
    RuleLabeler,
    label,
    labels_to_wire,
    validate_labels,
)
from .lexicon import Cue, CueLexicon
from .metrics import EvalReport, evaluate_classifier, evaluate_corpus, evaluate_suites
from .pipeline import PipelineResult, pipeline_to_wire, run_pipeline
from .suite import TestCase, TestSuite, evaluate, generate_suite, mcdc_check
from .text import Sentence, Token, tokenize

__all__ = [
    "__version__",
    "And",
    "CauseEffectGraph",
    "Classification",
    "CorpusEntry",
    "Cue",
    "CueLexicon",
    "Effect",
    "EvalReport",
    "EventNode",
    "LabelKind",
    "LabelSpan",
    "LabeledSentence",
    "LabelerPort",
    "Literal",
    "Or",
    "PipelineResult",
    "RuleLabeler",
    "Sentence",
    "TestCase",
    "TestSuite",
    "Token",
    "build_graph",
    "classify",
    "evaluate",
    "evaluate_classifier",
    "evaluate_corpus",
    "evaluate_suites",
    "generate_suite",
    "graph_to_wire",
    "label",
    "labels_to_wire",
    "mcdc_check",
    "pipeline_to_wire",
    "read_bundled_corpus",
    "read_corpus",
    "render_suite",
    "run_pipeline",
    "tokenize",
    "validate_labels",
    "wire_to_graph",
]
