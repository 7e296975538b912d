"""Cause-effect graph: one node per event, a Boolean expression tree over causes.

The expression is singular (every cause appears in exactly one literal), which
is what a single labeled sentence produces and what the suite generator's
minimality argument relies on. Effect negation lives on the effect entry, not
in the tree, so the tree stays purely over causes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import InvalidLabelsError, NoCauseError, NoEffectError, WireParseError
from .labeling import (
    LabeledSentence,
    LabelKind,
    LabelSpan,
    event_family,
    event_number,
    validate_labels,
)

# Fillers when a sub-label is absent; deliberately plain so they are easy to
# spot in rendered suites.
CONDITION_FOR_MISSING_VARIABLE = "is fulfilled"
CONDITION_FOR_MISSING_CONDITION = "is true"


@dataclass(frozen=True)
class EventNode:
    id: str
    variable: str
    condition: str

    def __post_init__(self):
        for name in ("variable", "condition"):
            value = getattr(self, name)
            if not value or value != value.strip():
                raise ValueError(f"{self.id}: {name} must be non-empty and trimmed")


@dataclass(frozen=True)
class Literal:
    event_id: str
    negated: bool = False


@dataclass(frozen=True)
class And:
    children: tuple["CauseExpr", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("And requires at least 2 children")


@dataclass(frozen=True)
class Or:
    children: tuple["CauseExpr", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("Or requires at least 2 children")


CauseExpr = Union[Literal, And, Or]


def expr_literals(expr: CauseExpr) -> list[Literal]:
    """Literals in left-to-right order."""
    if isinstance(expr, Literal):
        return [expr]
    out: list[Literal] = []
    for child in expr.children:
        out.extend(expr_literals(child))
    return out


@dataclass(frozen=True)
class Effect:
    node: EventNode
    negated: bool = False


@dataclass(frozen=True)
class CauseEffectGraph:
    causes: tuple[EventNode, ...]
    effects: tuple[Effect, ...]
    root: CauseExpr

    def __post_init__(self):
        if not self.causes:
            raise ValueError("graph requires at least one cause")
        if not self.effects:
            raise ValueError("graph requires at least one effect")
        cause_ids = [c.id for c in self.causes]
        if cause_ids != [f"C{i}" for i in range(1, len(cause_ids) + 1)]:
            raise ValueError(f"cause ids must be C1..Cn in order, got {cause_ids}")
        effect_ids = [e.node.id for e in self.effects]
        if effect_ids != [f"E{i}" for i in range(1, len(effect_ids) + 1)]:
            raise ValueError(f"effect ids must be E1..Em in order, got {effect_ids}")
        referenced = [lit.event_id for lit in expr_literals(self.root)]
        if sorted(referenced) != sorted(cause_ids) or len(referenced) != len(
            set(referenced)
        ):
            raise ValueError(
                "expression must reference every cause id exactly once "
                f"(causes {cause_ids}, referenced {referenced})"
            )

    def cause(self, event_id: str) -> EventNode:
        for c in self.causes:
            if c.id == event_id:
                return c
        raise KeyError(event_id)


@dataclass
class _RawEvent:
    number: int
    parts: list[LabelSpan] = field(default_factory=list)
    negated: bool = False

    @property
    def first_begin(self) -> int:
        return self.parts[0].token_begin

    @property
    def last_end(self) -> int:
        return self.parts[-1].token_end


def build_graph(labeled: LabeledSentence) -> CauseEffectGraph:
    """Fold a valid labeling into event nodes plus a cause expression.

    Conjunction binds tighter than disjunction, left-associative within a
    level. Each NEGATION span toggles the event that contains it, or else the
    nearest following event.
    """
    violations = validate_labels(labeled)
    if violations:
        raise InvalidLabelsError(violations)

    causes = _collect_events(labeled, "cause")
    effects = _collect_events(labeled, "effect")
    if not causes:
        raise NoCauseError("labeling contains no cause events")
    if not effects:
        raise NoEffectError("labeling contains no effect events")

    _apply_negations(labeled, list(causes.values()) + list(effects.values()))

    cause_nodes = tuple(
        _event_node(labeled, ev, f"C{k}") for k, ev in sorted(causes.items())
    )
    effect_entries = tuple(
        Effect(_event_node(labeled, ev, f"E{k}"), ev.negated)
        for k, ev in sorted(effects.items())
    )

    literals = [
        Literal(f"C{k}", causes[k].negated) for k in sorted(causes)
    ]
    ops = _junctor_ops(labeled, [causes[k] for k in sorted(causes)])
    root = _fold(literals, ops)

    return CauseEffectGraph(cause_nodes, effect_entries, root)


def _collect_events(labeled: LabeledSentence, family: str) -> dict[int, _RawEvent]:
    events: dict[int, _RawEvent] = {}
    for span in labeled.spans:
        if event_family(span.kind) == family:
            number = event_number(span.kind)
            events.setdefault(number, _RawEvent(number)).parts.append(span)
    for ev in events.values():
        ev.parts.sort(key=lambda s: s.token_begin)
    return events


def _apply_negations(labeled: LabeledSentence, events: list[_RawEvent]) -> None:
    ordered = sorted(events, key=lambda e: e.first_begin)
    for span in labeled.spans:
        if span.kind is not LabelKind.NEGATION:
            continue
        target = None
        for ev in ordered:
            if ev.first_begin <= span.token_begin < ev.last_end:
                target = ev
                break
        if target is None:
            following = [ev for ev in ordered if ev.first_begin >= span.token_end]
            if following:
                target = following[0]
            elif ordered:
                target = ordered[-1]
        if target is not None:
            target.negated = not target.negated


def _event_node(labeled: LabeledSentence, ev: _RawEvent, node_id: str) -> EventNode:
    event_text = _joined_text(labeled, ev.parts)
    variable = _sub_text(labeled, ev, LabelKind.VARIABLE)
    condition = _sub_text(labeled, ev, LabelKind.CONDITION)
    if not variable:
        # No variable sub-label: the whole event acts as the variable and the
        # condition becomes a filler.
        return EventNode(node_id, event_text, CONDITION_FOR_MISSING_VARIABLE)
    if not condition:
        return EventNode(node_id, variable, CONDITION_FOR_MISSING_CONDITION)
    return EventNode(node_id, variable, condition)


def _sub_text(labeled: LabeledSentence, ev: _RawEvent, kind: LabelKind) -> str:
    spans = [
        s
        for s in labeled.spans
        if s.kind is kind
        and any(
            p.token_begin <= s.token_begin and s.token_end <= p.token_end
            for p in ev.parts
        )
    ]
    return _joined_text(labeled, sorted(spans, key=lambda s: s.token_begin))


def _joined_text(labeled: LabeledSentence, spans: list[LabelSpan]) -> str:
    return " ".join(labeled.span_text(s) for s in spans).strip()


def _junctor_ops(labeled: LabeledSentence, ordered: list[_RawEvent]) -> list[LabelKind]:
    junctors = [
        s
        for s in labeled.spans
        if s.kind in (LabelKind.CONJUNCTION, LabelKind.DISJUNCTION)
    ]
    ops: list[LabelKind] = []
    for prev, cur in zip(ordered, ordered[1:]):
        gap = [
            j
            for j in junctors
            if prev.last_end <= j.token_begin and j.token_end <= cur.first_begin
        ]
        if not gap:
            raise InvalidLabelsError(
                [f"no junctor between events at tokens {prev.last_end} and {cur.first_begin}"]
            )
        ops.append(sorted(gap, key=lambda s: s.token_begin)[0].kind)
    return ops


def _fold(literals: list[Literal], ops: list[LabelKind]) -> CauseExpr:
    groups: list[list[Literal]] = [[literals[0]]]
    for literal, op in zip(literals[1:], ops):
        if op is LabelKind.CONJUNCTION:
            groups[-1].append(literal)
        else:
            groups.append([literal])
    terms: list[CauseExpr] = [
        And(tuple(g)) if len(g) > 1 else g[0] for g in groups
    ]
    return Or(tuple(terms)) if len(terms) > 1 else terms[0]


def graph_to_wire(graph: CauseEffectGraph) -> dict:
    return {
        "causes": [
            {"id": c.id, "variable": c.variable, "condition": c.condition}
            for c in graph.causes
        ],
        "effects": [
            {
                "id": e.node.id,
                "variable": e.node.variable,
                "condition": e.node.condition,
                "negated": e.negated,
            }
            for e in graph.effects
        ],
        "root": _expr_to_wire(graph.root),
    }


def _expr_to_wire(expr: CauseExpr) -> dict:
    if isinstance(expr, Literal):
        return {"type": "lit", "id": expr.event_id, "negated": expr.negated}
    kind = "and" if isinstance(expr, And) else "or"
    return {"type": kind, "children": [_expr_to_wire(c) for c in expr.children]}


def wire_to_graph(doc: dict) -> CauseEffectGraph:
    """Parse the wire form back into a graph; round trip is lossless."""
    if not isinstance(doc, dict):
        raise WireParseError("expected an object", "$")
    causes = tuple(
        _parse_node(item, f"$.causes[{i}]")
        for i, item in enumerate(_expect_list(doc, "causes", "$"))
    )
    effects = []
    for i, item in enumerate(_expect_list(doc, "effects", "$")):
        path = f"$.effects[{i}]"
        node = _parse_node(item, path)
        negated = item.get("negated", False)
        if not isinstance(negated, bool):
            raise WireParseError("'negated' must be a boolean", path)
        effects.append(Effect(node, negated))
    if "root" not in doc:
        raise WireParseError("missing 'root'", "$")
    known = {c.id for c in causes}
    root = _parse_expr(doc["root"], "$.root", known)
    try:
        return CauseEffectGraph(causes, tuple(effects), root)
    except ValueError as exc:
        raise WireParseError(str(exc), "$") from None


def _expect_list(doc: dict, key: str, path: str) -> list:
    value = doc.get(key)
    if not isinstance(value, list):
        raise WireParseError(f"'{key}' must be a list", path)
    return value


def _parse_node(item, path: str) -> EventNode:
    if not isinstance(item, dict):
        raise WireParseError("expected an object", path)
    for key in ("id", "variable", "condition"):
        if not isinstance(item.get(key), str) or not item.get(key):
            raise WireParseError(f"'{key}' must be a non-empty string", path)
    try:
        return EventNode(item["id"], item["variable"], item["condition"])
    except ValueError as exc:
        raise WireParseError(str(exc), path) from None


def _parse_expr(item, path: str, known_ids: set[str]) -> CauseExpr:
    if not isinstance(item, dict):
        raise WireParseError("expected an object", path)
    kind = item.get("type")
    if kind == "lit":
        event_id = item.get("id")
        if not isinstance(event_id, str):
            raise WireParseError("'id' must be a string", path)
        if event_id not in known_ids:
            raise WireParseError(f"unknown node id {event_id!r}", f"{path}.id")
        negated = item.get("negated", False)
        if not isinstance(negated, bool):
            raise WireParseError("'negated' must be a boolean", path)
        return Literal(event_id, negated)
    if kind in ("and", "or"):
        children_doc = item.get("children")
        if not isinstance(children_doc, list) or len(children_doc) < 2:
            raise WireParseError("'children' must be a list of at least 2", path)
        children = tuple(
            _parse_expr(c, f"{path}.children[{i}]", known_ids)
            for i, c in enumerate(children_doc)
        )
        return And(children) if kind == "and" else Or(children)
    raise WireParseError(f"unknown expression type {kind!r}", path)


def expr_to_text(expr: CauseExpr) -> str:
    """Readable infix form, e.g. "(C1 or C2)"."""
    if isinstance(expr, Literal):
        return f"not {expr.event_id}" if expr.negated else expr.event_id
    op = " and " if isinstance(expr, And) else " or "
    return "(" + op.join(expr_to_text(c) for c in expr.children) + ")"
