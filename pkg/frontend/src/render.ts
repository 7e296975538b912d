// Pure HTML/SVG string builders for the three synchronized panels. Keeping
// them DOM-free makes them directly assertable in unit tests; main.ts only
// assigns innerHTML and wires events.

import type {
  ClassificationWire,
  ExprWire,
  GraphWire,
  LabelWire,
  SuiteWire,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

/** CAUSE_3 -> C3, EFFECT_1 -> E1, anything else -> null. */
export function labelToEventId(label: string): string | null {
  const cause = label.match(/^CAUSE_(\d)$/);
  if (cause) return `C${cause[1]}`;
  const effect = label.match(/^EFFECT_(\d)$/);
  if (effect) return `E${effect[1]}`;
  return null;
}

const LABEL_CLASSES: Record<string, string> = {
  KEYWORD: "keyword",
  NEGATION: "negation",
  CONJUNCTION: "junctor",
  DISJUNCTION: "junctor",
  VARIABLE: "variable",
  CONDITION: "condition",
};

interface CharMark {
  classes: Set<string>;
  eventId: string | null;
}

/**
 * Highlighted sentence: cause spans in the red family, effect spans in blue,
 * matching the suite table's column colors. Overlapping labels (e.g. a
 * keyword that is also a negation) merge into one span with both classes.
 */
export function renderSentence(
  text: string,
  labels: LabelWire[],
  selectedEventId: string | null = null,
): string {
  const marks: CharMark[] = Array.from({ length: text.length }, () => ({
    classes: new Set<string>(),
    eventId: null,
  }));
  for (const span of labels) {
    const eventId = labelToEventId(span.label);
    const cls = eventId
      ? eventId.startsWith("C")
        ? "cause"
        : "effect"
      : LABEL_CLASSES[span.label];
    if (!cls) continue;
    for (let i = span.begin; i < Math.min(span.end, text.length); i++) {
      marks[i].classes.add(cls);
      if (eventId) marks[i].eventId = eventId;
    }
  }

  const parts: string[] = [];
  let i = 0;
  while (i < text.length) {
    let j = i;
    while (j < text.length && sameMark(marks[i], marks[j])) j++;
    const piece = escapeHtml(text.slice(i, j));
    if (marks[i].classes.size === 0) {
      parts.push(piece);
    } else {
      const classes = ["hl", ...Array.from(marks[i].classes).sort()];
      if (marks[i].eventId && marks[i].eventId === selectedEventId) {
        classes.push("selected");
      }
      const data = marks[i].eventId ? ` data-event="${marks[i].eventId}"` : "";
      parts.push(`<span class="${classes.join(" ")}"${data}>${piece}</span>`);
    }
    i = j;
  }
  return parts.join("");
}

function sameMark(a: CharMark, b: CharMark): boolean {
  if (a.eventId !== b.eventId) return false;
  if (a.classes.size !== b.classes.size) return false;
  for (const c of a.classes) if (!b.classes.has(c)) return false;
  return true;
}

export function renderVerdict(
  classification: ClassificationWire,
  error: string | undefined,
): string {
  const pct = (classification.confidence * 100).toFixed(0);
  if (classification.causal) {
    const suffix = error
      ? ` <span class="warn">but no suite could be generated (${escapeHtml(error)})</span>`
      : "";
    return `<span class="badge causal">causal</span> with ${pct}% confidence${suffix}`;
  }
  return (
    `<span class="badge non-causal">non-causal</span> with ${pct}% confidence — ` +
    "no cause-effect relationship detected, so no test suite is generated."
  );
}

export function expressionText(expr: ExprWire): string {
  if (expr.type === "lit") return expr.negated ? `¬${expr.id}` : expr.id;
  const glyph = expr.type === "and" ? " ∧ " : " ∨ ";
  return "(" + expr.children.map(expressionText).join(glyph) + ")";
}

function rootGlyph(expr: ExprWire): string {
  if (expr.type === "and") return "∧";
  if (expr.type === "or") return "∨";
  return expr.negated ? "¬" : "→";
}

const BOX_W = 190;
const BOX_H = 48;
const ROW_GAP = 16;
const WIDTH = 660;

/**
 * Two-layer layout: cause nodes on the left, effect nodes on the right, the
 * root junctor glyph between them. Sufficient for the singular trees a single
 * sentence produces; nested mixes are captioned with the full expression.
 */
export function renderGraph(
  graph: GraphWire,
  selectedEventId: string | null = null,
): string {
  const rows = Math.max(graph.causes.length, graph.effects.length);
  const height = rows * (BOX_H + ROW_GAP) + 40;
  const midX = WIDTH / 2;
  const midY = height / 2 - 10;
  const pieces: string[] = [];

  const boxY = (index: number, count: number): number => {
    const total = count * BOX_H + (count - 1) * ROW_GAP;
    return (height - 20 - total) / 2 + index * (BOX_H + ROW_GAP) + 10;
  };

  graph.causes.forEach((node, i) => {
    const y = boxY(i, graph.causes.length);
    pieces.push(
      `<line class="edge" x1="${10 + BOX_W}" y1="${y + BOX_H / 2}" x2="${midX - 18}" y2="${midY}"/>`,
    );
    pieces.push(eventBox(node.id, node.variable, node.condition, 10, y, "cause", selectedEventId));
  });

  const negatedLiterals = collectNegatedLiterals(graph.root);
  for (const id of negatedLiterals) {
    const index = graph.causes.findIndex((c) => c.id === id);
    if (index >= 0) {
      const y = boxY(index, graph.causes.length) + BOX_H / 2 - 6;
      pieces.push(`<text class="neg-mark" x="${10 + BOX_W + 10}" y="${y}">¬</text>`);
    }
  }

  graph.effects.forEach((node, i) => {
    const y = boxY(i, graph.effects.length);
    const x = WIDTH - BOX_W - 10;
    pieces.push(
      `<line class="edge" x1="${midX + 18}" y1="${midY}" x2="${x}" y2="${y + BOX_H / 2}"/>`,
    );
    if (node.negated) {
      pieces.push(`<text class="neg-mark" x="${x - 18}" y="${y + BOX_H / 2 - 6}">¬</text>`);
    }
    pieces.push(eventBox(node.id, node.variable, node.condition, x, y, "effect", selectedEventId));
  });

  pieces.push(
    `<circle class="glyph" cx="${midX}" cy="${midY}" r="16"/>`,
    `<text class="glyph-text" x="${midX}" y="${midY + 5}">${rootGlyph(graph.root)}</text>`,
    `<text class="expr" x="${midX}" y="${height - 6}">${escapeHtml(expressionText(graph.root))}</text>`,
  );

  return `<svg viewBox="0 0 ${WIDTH} ${height}" role="img">${pieces.join("")}</svg>`;
}

function eventBox(
  id: string,
  variable: string,
  condition: string,
  x: number,
  y: number,
  family: "cause" | "effect",
  selectedEventId: string | null,
): string {
  const selected = id === selectedEventId ? " selected" : "";
  return (
    `<g class="node ${family}${selected}" data-event="${id}">` +
    `<rect x="${x}" y="${y}" width="${BOX_W}" height="${BOX_H}" rx="6"/>` +
    `<text class="node-id" x="${x + 8}" y="${y + 16}">${id}</text>` +
    `<text class="node-var" x="${x + 34}" y="${y + 16}">${escapeHtml(variable)}</text>` +
    `<text class="node-cond" x="${x + 8}" y="${y + 36}">${escapeHtml(condition)}</text>` +
    `</g>`
  );
}

function collectNegatedLiterals(expr: ExprWire): string[] {
  if (expr.type === "lit") return expr.negated ? [expr.id] : [];
  return expr.children.flatMap(collectNegatedLiterals);
}

/** Suite table; hovering a column highlights the matching sentence span and
 * graph node through the shared data-event attribute. */
export function renderSuiteTable(
  suite: SuiteWire,
  selectedEventId: string | null = null,
): string {
  const head = suite.columns
    .map((col) => {
      const selected = col.id === selectedEventId ? " selected" : "";
      return `<th class="${col.family}${selected}" data-event="${col.id}">${escapeHtml(col.variable)}</th>`;
    })
    .join("");
  const body = suite.cases
    .map((testCase) => {
      const cells = testCase.cells
        .map((cell, i) => {
          const col = suite.columns[i];
          const negated = cell.startsWith("not ") ? " negated" : "";
          const selected = col.id === selectedEventId ? " selected" : "";
          return `<td class="${col.family}${negated}${selected}" data-event="${col.id}">${escapeHtml(cell)}</td>`;
        })
        .join("");
      return `<tr><td class="tc-id">${escapeHtml(testCase.id)}</td>${cells}</tr>`;
    })
    .join("");
  return (
    `<table class="suite"><thead><tr><th class="tc-id">ID</th>${head}</tr></thead>` +
    `<tbody>${body}</tbody></table>`
  );
}
