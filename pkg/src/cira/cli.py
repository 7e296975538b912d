"""Command-line frontend for single sentences, batch files, evaluation runs,
and launching the HTTP service.

Exit codes: 0 success, 2 usage or input-file error, 3 non-causal (or otherwise
unlabelable) sentence on the label/graph/testsuite subcommands. In batch mode
(--file) each non-empty line is one requirement; per-line failures are
reported inline and the run exits 0.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import __version__
from .classify import Classification, classify
from .errors import CiraError, LabelError
from .formats import (
    bundled_corpus_path,
    read_corpus,
    render_suite,
    to_json,
)
from .graph import build_graph, expr_to_text, graph_to_wire
from .labeling import LabeledSentence, label, labels_to_wire
from .lexicon import CueLexicon
from .metrics import evaluate_corpus
from .pipeline import pipeline_to_wire, run_pipeline
from .suite import generate_suite
from .text import tokenize

EXIT_NOT_CAUSAL = 3


def _load_lexicon(path: str | None) -> CueLexicon:
    if path is None:
        return CueLexicon.default()
    try:
        return CueLexicon.from_file(path)
    except CiraError as exc:
        raise click.UsageError(f"bad lexicon file {path}: {exc}")


def _inputs(text: str | None, file: str | None) -> list[tuple[int | None, str]]:
    """Resolve exactly one input source into (line number, sentence) pairs."""
    if (text is None) == (file is None):
        raise click.UsageError("provide exactly one of TEXT or --file")
    if text is not None:
        return [(None, text)]
    try:
        lines = Path(file).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise click.UsageError(f"cannot read {file}: {exc}")
    return [(i, line.strip()) for i, line in enumerate(lines, 1) if line.strip()]


def _emit(rendered: str, out: str | None) -> None:
    if out:
        Path(out).write_text(rendered, encoding="utf-8")
    else:
        click.echo(rendered, nl=False)


def _run_command(text, file, fmt, out, lexicon_path, render_one) -> None:
    """Shared single/batch driver; ``render_one`` maps a sentence to output text."""
    lexicon = _load_lexicon(lexicon_path)
    inputs = _inputs(text, file)
    batch = file is not None
    blocks = []
    for lineno, sentence_text in inputs:
        if batch:
            blocks.append(f"--- line {lineno}: {sentence_text}\n")
        try:
            blocks.append(render_one(sentence_text, lexicon, fmt))
        except LabelError as exc:
            if not batch:
                click.echo(exc.code, err=True)
                sys.exit(EXIT_NOT_CAUSAL)
            blocks.append(f"{exc.code}\n")
    _emit("".join(blocks), out)


def _text_file_options(command):
    command = click.argument("text", required=False)(command)
    command = click.option(
        "--file", "-f", type=click.Path(), help="Batch mode: one sentence per line."
    )(command)
    command = click.option("--out", type=click.Path(), help="Write output to a file.")(
        command
    )
    command = click.option(
        "--lexicon", "lexicon_path", type=click.Path(exists=True), help="Custom cue lexicon."
    )(command)
    return command


def _format_option(default: str):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["table", "csv", "json"]),
        default=default,
        show_default=True,
    )


@click.group()
@click.version_option(version=__version__, prog_name="cira")
def cli():
    """Analyze conditional requirements and generate covering test-case descriptions."""


@cli.command(name="classify")
@_text_file_options
@_format_option("table")
def classify_cmd(text, file, out, lexicon_path, fmt):
    """Decide causal vs. non-causal with a confidence score."""
    _require_no_csv(fmt)

    def render_one(sentence_text, lexicon, fmt):
        result = classify(tokenize(sentence_text), lexicon)
        if fmt == "json":
            return to_json(result.to_wire())
        return _classification_text(result)

    _run_command(text, file, fmt, out, lexicon_path, render_one)


@cli.command(name="label")
@_text_file_options
@_format_option("table")
def label_cmd(text, file, out, lexicon_path, fmt):
    """Assign each token its role in the causal relationship."""
    _require_no_csv(fmt)

    def render_one(sentence_text, lexicon, fmt):
        labeled = label(tokenize(sentence_text), lexicon)
        if fmt == "json":
            return to_json(labels_to_wire(labeled))
        return _labels_text(labeled)

    _run_command(text, file, fmt, out, lexicon_path, render_one)


@cli.command(name="graph")
@_text_file_options
@_format_option("table")
def graph_cmd(text, file, out, lexicon_path, fmt):
    """Build the cause-effect graph for a causal sentence."""
    _require_no_csv(fmt)

    def render_one(sentence_text, lexicon, fmt):
        graph = build_graph(label(tokenize(sentence_text), lexicon))
        if fmt == "json":
            return to_json(graph_to_wire(graph))
        return _graph_text(graph)

    _run_command(text, file, fmt, out, lexicon_path, render_one)


@cli.command(name="testsuite")
@_text_file_options
@_format_option("table")
def testsuite_cmd(text, file, out, lexicon_path, fmt):
    """Generate the minimal covering test suite for a causal sentence."""

    def render_one(sentence_text, lexicon, fmt):
        suite = generate_suite(build_graph(label(tokenize(sentence_text), lexicon)))
        return render_suite(suite, fmt)

    _run_command(text, file, fmt, out, lexicon_path, render_one)


@cli.command(name="pipeline")
@_text_file_options
@_format_option("table")
def pipeline_cmd(text, file, out, lexicon_path, fmt):
    """Run every stage and report all intermediate results."""
    _require_no_csv(fmt)

    def render_one(sentence_text, lexicon, fmt):
        result = run_pipeline(sentence_text, lexicon)
        if fmt == "json":
            return to_json(pipeline_to_wire(result))
        return _pipeline_text(result)

    _run_command(text, file, fmt, out, lexicon_path, render_one)


@cli.command(name="eval")
@click.option(
    "--corpus",
    type=click.Path(exists=True),
    default=None,
    help="Corpus file (jsonl); defaults to the bundled corpus.",
)
@click.option("--report", type=click.Path(), help="Write the full report as JSON.")
@click.option(
    "--figures",
    "figures_dir",
    type=click.Path(),
    help="Directory for metric figures (PNG) and per-entry verdicts (CSV).",
)
@click.option(
    "--lexicon", "lexicon_path", type=click.Path(exists=True), help="Custom cue lexicon."
)
def eval_cmd(corpus, report, figures_dir, lexicon_path):
    """Score the pipeline against a gold-annotated corpus."""
    lexicon = _load_lexicon(lexicon_path)
    corpus_file = corpus or bundled_corpus_path()
    try:
        entries = read_corpus(corpus_file)
        result = evaluate_corpus(entries, lexicon)
    except CiraError as exc:
        raise click.UsageError(f"{corpus_file}: {exc}")
    click.echo(result.summary_text(), nl=False)
    if report:
        Path(report).write_text(to_json(result.to_wire()), encoding="utf-8")
        click.echo(f"report written to {report}", err=True)
    if figures_dir:
        from .figures import save_report_figures

        paths = save_report_figures(result, figures_dir)
        verdicts = _verdicts_csv(result)
        verdict_path = Path(figures_dir) / "verdicts.csv"
        verdict_path.write_text(verdicts, encoding="utf-8")
        for p in list(paths) + [verdict_path]:
            click.echo(f"wrote {p}", err=True)


@cli.command(name="serve")
@click.option("--host", default=None, help="Bind address (default CIRA_HOST or 127.0.0.1).")
@click.option("--port", type=int, default=None, help="Port (default CIRA_PORT or 8080).")
@click.option(
    "--lexicon", "lexicon_path", type=click.Path(exists=True), help="Custom cue lexicon."
)
def serve_cmd(host, port, lexicon_path):
    """Start the HTTP service."""
    from .service import serve

    serve(host=host, port=port, lexicon=_load_lexicon(lexicon_path))


def _require_no_csv(fmt: str) -> None:
    if fmt == "csv":
        raise click.UsageError("csv format is only available for the testsuite subcommand")


def _classification_text(result: Classification) -> str:
    lines = [
        f"causal: {'yes' if result.causal else 'no'}",
        f"confidence: {result.confidence:.2f}",
    ]
    if result.matched_cues:
        cues = ", ".join(f"{m.cue!r} @ tokens {m.begin}..{m.end}" for m in result.matched_cues)
        lines.append(f"cues: {cues}")
    else:
        lines.append("cues: none")
    return "\n".join(lines) + "\n"


def _labels_text(labeled: LabeledSentence) -> str:
    lines = []
    for span in labeled.spans:
        begin, end = labeled.char_span(span)
        lines.append(
            f"{span.kind.value:<12} tokens {span.token_begin:>2}..{span.token_end:<2} "
            f"chars {begin:>3}..{end:<3} {labeled.span_text(span)!r}"
        )
    return "\n".join(lines) + "\n"


def _graph_text(graph) -> str:
    lines = ["causes:"]
    for c in graph.causes:
        lines.append(f"  {c.id}: {c.variable} | {c.condition}")
    lines.append("effects:")
    for e in graph.effects:
        flag = " (negated)" if e.negated else ""
        lines.append(f"  {e.node.id}: {e.node.variable} | {e.node.condition}{flag}")
    lines.append(f"expression: {expr_to_text(graph.root)}")
    return "\n".join(lines) + "\n"


def _pipeline_text(result) -> str:
    parts = [_classification_text(result.classification)]
    if result.labeled is not None:
        parts.append("\nlabels:\n" + _labels_text(result.labeled))
    if result.graph is not None:
        parts.append("\n" + _graph_text(result.graph))
    if result.suite is not None:
        parts.append("\n" + render_suite(result.suite, "table"))
    if result.error is not None:
        parts.append(f"\nstopped: {result.error}\n")
    timings = ", ".join(f"{k} {v:.2f}ms" for k, v in result.timings_ms.items())
    parts.append(f"\ntimings: {timings}\n")
    return "".join(parts)


def _verdicts_csv(report) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    fields = [
        "id",
        "gold_causal",
        "predicted_causal",
        "correct",
        "variable_match",
        "configuration_match",
        "generation_error",
    ]
    writer.writerow(fields)
    for entry in report.entries:
        writer.writerow([entry.get(f, "") for f in fields])
    return buf.getvalue()


def main():
    cli(prog_name="cira")


if __name__ == "__main__":
    main()
