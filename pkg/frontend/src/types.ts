// Wire types mirroring the service's JSON responses.

export interface CueWire {
  cue: string;
  begin: number;
  end: number;
}

export interface ClassificationWire {
  causal: boolean;
  confidence: number;
  cues: CueWire[];
}

export interface LabelWire {
  label: string; // CAUSE_1..9, EFFECT_1..9, CONJUNCTION, DISJUNCTION, NEGATION, VARIABLE, CONDITION, KEYWORD
  begin: number; // character offsets into the submitted sentence
  end: number;
}

export interface EventNodeWire {
  id: string;
  variable: string;
  condition: string;
}

export interface EffectNodeWire extends EventNodeWire {
  negated: boolean;
}

export type ExprWire =
  | { type: "lit"; id: string; negated: boolean }
  | { type: "and"; children: ExprWire[] }
  | { type: "or"; children: ExprWire[] };

export interface GraphWire {
  causes: EventNodeWire[];
  effects: EffectNodeWire[];
  root: ExprWire;
}

export interface ColumnWire {
  id: string;
  variable: string;
  family: "cause" | "effect";
}

export interface TestCaseWire {
  id: string;
  values: Record<string, boolean>;
  outcome: boolean;
  cells: string[];
}

export interface SuiteWire {
  columns: ColumnWire[];
  cases: TestCaseWire[];
}

export interface PipelineWire {
  classification: ClassificationWire;
  labels?: LabelWire[];
  graph?: GraphWire;
  suite?: SuiteWire;
  error?: string;
  timings_ms?: Record<string, number>;
}
