"""Suite rendering (table / csv / json) and corpus file ingestion."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import CorpusParseError, DuplicateIdError
from .suite import TestSuite

SUITE_FORMATS = ("table", "csv", "json")


def to_json(doc) -> str:
    """Canonical JSON rendering shared by the CLI and the HTTP service.

    Output is deterministic (insertion-ordered keys) and ends with a newline
    so the two surfaces agree byte for byte.
    """
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def render_suite(suite: TestSuite, fmt: str) -> str:
    if fmt == "json":
        return to_json(suite.to_wire())
    if fmt == "csv":
        return _render_csv(suite)
    if fmt == "table":
        return _render_table(suite)
    raise ValueError(f"unknown suite format {fmt!r}; expected one of {SUITE_FORMATS}")


def _render_csv(suite: TestSuite) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["ID"] + [c.variable for c in suite.columns])
    for case in suite.cases:
        writer.writerow([case.id, *case.cells])
    return buf.getvalue()


def _render_table(suite: TestSuite) -> str:
    headers = ["ID"] + [c.variable for c in suite.columns]
    rows = [[case.id, *case.cells] for case in suite.cases]
    widths = [
        max(len(headers[i]), *(len(row[i]) for row in rows)) for i in range(len(headers))
    ]
    border = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    lines = [border, _table_row(headers, widths), border]
    lines += [_table_row(row, widths) for row in rows]
    lines.append(border)
    return "\n".join(lines) + "\n"


def _table_row(values: list[str], widths: list[int]) -> str:
    return "| " + " | ".join(v.ljust(w) for v, w in zip(values, widths)) + " |"


@dataclass(frozen=True)
class CorpusEntry:
    """One requirement sentence plus optional gold annotations.

    ``gold_configurations`` rows follow the suite layout: one Boolean per
    event, causes in sentence order then effects.
    """

    id: str
    text: str
    gold_causal: bool
    gold_variables: tuple[str, ...] | None = None
    gold_configurations: tuple[tuple[bool, ...], ...] | None = None
    line: int = 0

    @property
    def has_gold_suite(self) -> bool:
        return self.gold_variables is not None and self.gold_configurations is not None


def read_corpus(path: str | Path) -> list[CorpusEntry]:
    """Read a line-delimited corpus file (one JSON record per line)."""
    with open(path, encoding="utf-8") as fh:
        return _parse_corpus(fh)


def _parse_corpus(lines) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(lines, 1):
        stripped = raw.strip()
        if not stripped:
            continue
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise CorpusParseError(f"invalid record: {exc.msg}", lineno) from None
        entry = _parse_entry(doc, lineno)
        if entry.id in seen:
            raise DuplicateIdError(entry.id, lineno)
        seen.add(entry.id)
        entries.append(entry)
    return entries


def _parse_entry(doc, lineno: int) -> CorpusEntry:
    if not isinstance(doc, dict):
        raise CorpusParseError("record must be an object", lineno)
    entry_id = doc.get("id")
    if not isinstance(entry_id, str) or not entry_id:
        raise CorpusParseError("missing or empty 'id' field", lineno)
    text = doc.get("text")
    if not isinstance(text, str) or not text:
        raise CorpusParseError(f"entry {entry_id!r}: missing 'text' field", lineno)
    gold_causal = doc.get("gold_causal")
    if not isinstance(gold_causal, bool):
        raise CorpusParseError(f"entry {entry_id!r}: 'gold_causal' must be a boolean", lineno)

    variables = None
    if doc.get("gold_variables") is not None:
        raw_vars = doc["gold_variables"]
        if not isinstance(raw_vars, list) or not all(
            isinstance(v, str) and v for v in raw_vars
        ):
            raise CorpusParseError(
                f"entry {entry_id!r}: 'gold_variables' must be a list of strings", lineno
            )
        variables = tuple(raw_vars)

    configurations = None
    if doc.get("gold_configurations") is not None:
        raw_rows = doc["gold_configurations"]
        if variables is None:
            raise CorpusParseError(
                f"entry {entry_id!r}: 'gold_configurations' requires 'gold_variables'",
                lineno,
            )
        if not isinstance(raw_rows, list):
            raise CorpusParseError(
                f"entry {entry_id!r}: 'gold_configurations' must be a list", lineno
            )
        rows = []
        for row in raw_rows:
            if (
                not isinstance(row, list)
                or len(row) != len(variables)
                or not all(isinstance(v, bool) for v in row)
            ):
                raise CorpusParseError(
                    f"entry {entry_id!r}: configuration rows must have one boolean "
                    f"per gold variable ({len(variables)})",
                    lineno,
                )
            rows.append(tuple(row))
        configurations = tuple(rows)

    return CorpusEntry(entry_id, text, gold_causal, variables, configurations, lineno)


def bundled_corpus_path() -> Path:
    """Path of the corpus shipped with the package."""
    return Path(str(resources.files("cira").joinpath("data/corpus.jsonl")))


def read_bundled_corpus() -> list[CorpusEntry]:
    with resources.files("cira").joinpath("data/corpus.jsonl").open(
        encoding="utf-8"
    ) as fh:
        return _parse_corpus(fh)
