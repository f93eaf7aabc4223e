// Payload shapes of the vaguequery HTTP API. The client renders these
// verbatim: every range, sentiment, and directive on screen comes from
// the server, never from local computation.

export type SentimentClass =
  | "very_negative"
  | "negative"
  | "neutral"
  | "positive"
  | "very_positive";

export type SegmentSentiment = "positive" | "negative" | "neutral";

export type Provenance = "statistical" | "domain_knowledge" | "user_override";

export interface SentimentVerdict {
  phrase: string;
  class: SentimentClass;
  score: number;
}

export interface FilterPayload {
  attribute: string;
  lo: number;
  hi: number;
  provenance: Provenance;
  source_label: string;
  source_url: string;
}

export interface WidgetPayload {
  attribute: string;
  kind: "range_slider";
  current: FilterPayload;
  bounds: [number, number];
}

export interface ScoredAttribute {
  attribute: string;
  pmi: number | null;
  modifier_ngram: string;
  attribute_ngram: string;
  cooccurring: boolean;
}

export interface RangeVerdict {
  kind: "top_n" | "bottom_n";
  modifier: SentimentVerdict;
  attribute: SentimentVerdict;
}

export interface ModifierPayload {
  text: string;
  lemma: string;
  classification: string;
  negated: boolean;
}

export interface InterpretationPayload {
  utterance: string;
  modifier: ModifierPayload | null;
  modifier_sentiment: SentimentVerdict | null;
  scored: ScoredAttribute[];
  verdicts: Record<string, RangeVerdict>;
  filters: FilterPayload[];
  widgets: WidgetPayload[];
  active: string[];
  warnings: string[];
}

export type DataRow = Record<string, number | string | null>;

export interface ChartSpecPayload {
  mark: "point_map" | "scatter" | "histogram";
  encodings: Record<string, string>;
  data_filter: FilterPayload[];
  title: string;
  rows: DataRow[];
  sampled: boolean;
}

export interface SegmentPayload {
  text: string;
  sentiment: SegmentSentiment | null;
  widget: WidgetPayload | null;
  link: string | null;
}

export interface ProvenancePayload {
  segments: SegmentPayload[];
}

export interface InterpretResponse {
  session_id: string;
  interpretation: InterpretationPayload;
  chart_spec: ChartSpecPayload;
  provenance_text: ProvenancePayload;
}

export interface AttributeDescriptor {
  name: string;
  raw_name: string;
  kind: "numeric" | "categorical" | "geographic";
  stats: {
    min: number;
    max: number;
    median: number;
    mad: number;
    count: number;
    null_count: number;
  } | null;
}

export interface DatasetDescriptor {
  name: string;
  attributes: AttributeDescriptor[];
  row_count: number;
}

export interface SessionCreateResponse {
  session_id: string;
  dataset: DatasetDescriptor;
}

export interface ApiErrorPayload {
  code:
    | "bad_request"
    | "not_found"
    | "conflict"
    | "unintelligible"
    | "no_cooccurrence"
    | "not_supported"
    | "refine_error";
  message: string;
  detail: string;
}

export type RefineAction = "set_range" | "add_attribute" | "remove_attribute";

export interface RefineRequest {
  action: RefineAction;
  attribute: string;
  lo?: number;
  hi?: number;
}
