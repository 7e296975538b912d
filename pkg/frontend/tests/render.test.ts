import { describe, expect, it } from "vitest";

import {
  escapeHtml,
  expressionText,
  labelToEventId,
  renderGraph,
  renderSentence,
  renderSuiteTable,
  renderVerdict,
} from "../src/render.js";
import {
  BUTTON_SENTENCE,
  loadConjunctionFixture,
  loadPipelineFixture,
} from "./fixtures.js";

const fixture = loadPipelineFixture();

describe("labelToEventId", () => {
  it("maps event labels and rejects the rest", () => {
    expect(labelToEventId("CAUSE_1")).toBe("C1");
    expect(labelToEventId("EFFECT_2")).toBe("E2");
    expect(labelToEventId("KEYWORD")).toBeNull();
    expect(labelToEventId("VARIABLE")).toBeNull();
  });
});

describe("renderSentence", () => {
  it("wraps cause and effect spans with data-event attributes", () => {
    const html = renderSentence(BUTTON_SENTENCE, fixture.labels!);
    expect(html).toContain('data-event="C1"');
    expect(html).toContain('data-event="C2"');
    expect(html).toContain('data-event="E1"');
    expect(html).toContain("cause");
    expect(html).toContain("effect");
    // Junctor and keywords marked.
    expect(html).toMatch(/<span class="hl junctor">or<\/span>/);
    expect(html).toMatch(/keyword">When<\/span>/);
  });

  it("keeps the visible text identical to the input", () => {
    const html = renderSentence(BUTTON_SENTENCE, fixture.labels!);
    const visible = html.replace(/<[^>]+>/g, "");
    expect(visible).toBe(BUTTON_SENTENCE);
  });

  it("marks the selected event", () => {
    const html = renderSentence(BUTTON_SENTENCE, fixture.labels!, "C2");
    expect(html).toMatch(/class="hl[^"]*selected[^"]*" data-event="C2"/);
    expect(html).not.toMatch(/selected[^"]*" data-event="C1"/);
  });

  it("escapes markup in the sentence", () => {
    const html = renderSentence("if <b> then <i>", [
      { label: "CAUSE_1", begin: 3, end: 6 },
      { label: "EFFECT_1", begin: 12, end: 15 },
    ]);
    expect(html).toContain("&lt;b&gt;");
    expect(html).not.toContain("<b>");
  });
});

describe("renderGraph", () => {
  it("draws one node per event and the root glyph", () => {
    const svg = renderGraph(fixture.graph!);
    expect(svg).toContain("the red button");
    expect(svg).toContain("the power");
    expect(svg).toContain("the system");
    expect((svg.match(/<g class="node/g) ?? []).length).toBe(3);
    expect(svg).toContain(">∨<");
    expect(svg).toContain("(C1 ∨ C2)");
  });

  it("marks the selected node", () => {
    const svg = renderGraph(fixture.graph!, "E1");
    expect(svg).toMatch(/class="node effect selected" data-event="E1"/);
  });

  it("marks negated literals and effects", () => {
    const svg = renderGraph({
      causes: [{ id: "C1", variable: "the user", condition: "confirms" }],
      effects: [
        { id: "E1", variable: "the dialog", condition: "stays open", negated: true },
      ],
      root: { type: "lit", id: "C1", negated: true },
    });
    expect((svg.match(/neg-mark/g) ?? []).length).toBe(2);
    expect(svg).toContain(">¬<");
  });
});

describe("renderSuiteTable", () => {
  it("renders the reference three-row suite with exact cells", () => {
    const html = renderSuiteTable(fixture.suite!);
    expect((html.match(/<tr>/g) ?? []).length).toBe(1 + 3);
    const rows = [...html.matchAll(/<tr>(.*?)<\/tr>/g)].map((m) => m[1]);
    const cellsOf = (row: string) =>
      [...row.matchAll(/<td[^>]*>(.*?)<\/td>/g)].map((m) => m[1]);
    expect(cellsOf(rows[1])).toEqual(["TC1", "is pushed", "not fails", "shuts down"]);
    expect(cellsOf(rows[2])).toEqual(["TC2", "not is pushed", "fails", "shuts down"]);
    expect(cellsOf(rows[3])).toEqual([
      "TC3",
      "not is pushed",
      "not fails",
      "not shuts down",
    ]);
  });

  it("editing or to and swaps in the all-true row", () => {
    const edited = loadConjunctionFixture();
    const html = renderSuiteTable(edited.suite!);
    const rows = [...html.matchAll(/<tr>(.*?)<\/tr>/g)].map((m) => m[1]);
    const cellsOf = (row: string) =>
      [...row.matchAll(/<td[^>]*>(.*?)<\/td>/g)].map((m) => m[1]);
    expect(rows).toHaveLength(4);
    expect(cellsOf(rows[1])).toEqual(["TC1", "is pushed", "fails", "shuts down"]);
    expect(cellsOf(rows[2])).toEqual(["TC2", "not is pushed", "fails", "not shuts down"]);
    expect(cellsOf(rows[3])).toEqual(["TC3", "is pushed", "not fails", "not shuts down"]);
  });

  it("column headers carry family classes and event ids", () => {
    const html = renderSuiteTable(fixture.suite!);
    expect(html).toContain('<th class="cause" data-event="C1">the red button</th>');
    expect(html).toContain('<th class="effect" data-event="E1">the system</th>');
  });

  it("highlights the selected column", () => {
    const html = renderSuiteTable(fixture.suite!, "C1");
    expect(html).toContain('<th class="cause selected" data-event="C1">');
    expect((html.match(/td class="cause negated selected"/g) ?? []).length).toBe(2);
  });
});

describe("renderVerdict", () => {
  it("causal verdict shows confidence", () => {
    const html = renderVerdict(fixture.classification, undefined);
    expect(html).toContain("causal");
    expect(html).toContain("96%");
  });

  it("non-causal verdict explains the missing suite", () => {
    const html = renderVerdict(
      { causal: false, confidence: 0.95, cues: [] },
      "NOT_CAUSAL",
    );
    expect(html).toContain("non-causal");
    expect(html).toContain("no test suite");
  });
});

describe("expressionText", () => {
  it("renders nested mixes with glyphs", () => {
    expect(
      expressionText({
        type: "or",
        children: [
          {
            type: "and",
            children: [
              { type: "lit", id: "C1", negated: false },
              { type: "lit", id: "C2", negated: true },
            ],
          },
          { type: "lit", id: "C3", negated: false },
        ],
      }),
    ).toBe("((C1 ∧ ¬C2) ∨ C3)");
  });
});

describe("escapeHtml", () => {
  it("escapes the five specials", () => {
    expect(escapeHtml(`<a href="x">'&'</a>`)).toBe(
      "&lt;a href=&quot;x&quot;&gt;&#39;&amp;&#39;&lt;/a&gt;",
    );
  });
});
