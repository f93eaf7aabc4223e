import type {
  InterpretResponse,
  SentimentVerdict,
  SessionCreateResponse,
  WidgetPayload,
} from "../src/types.js";

function verdict(
  phrase: string,
  klass: SentimentVerdict["class"],
  score: number,
): SentimentVerdict {
  return { phrase, class: klass, score };
}

function widget(attribute: string, lo: number, hi: number, bounds: [number, number]): WidgetPayload {
  return {
    attribute,
    kind: "range_slider",
    current: {
      attribute,
      lo,
      hi,
      provenance: "statistical",
      source_label: "",
      source_url: "",
    },
    bounds,
  };
}

// A crafted interpret payload: three filters (so only the first two carry
// widgets), a domain-scale source link, and all three sentiment colors.
export function craftedPayload(): InterpretResponse {
  const incomeWidget = widget("income per capita", 9200, 60000, [500, 60000]);
  const magnitudeWidget = widget("earthquake magnitude", 5, 8, [2, 8]);
  magnitudeWidget.current.provenance = "domain_knowledge";
  magnitudeWidget.current.source_label = "Richter scale";
  magnitudeWidget.current.source_url = "https://example.org/richter";

  return {
    session_id: "fixture-session",
    interpretation: {
      utterance: "which places are booming?",
      modifier: {
        text: "booming",
        lemma: "booming",
        classification: "complex_gradable",
        negated: false,
      },
      modifier_sentiment: verdict("booming", "positive", 0.5),
      scored: [
        {
          attribute: "income per capita",
          pmi: 10.9,
          modifier_ngram: "booming",
          attribute_ngram: "income",
          cooccurring: true,
        },
        {
          attribute: "earthquake magnitude",
          pmi: 9.1,
          modifier_ngram: "booming",
          attribute_ngram: "magnitude",
          cooccurring: true,
        },
        {
          attribute: "population",
          pmi: 8.0,
          modifier_ngram: "booming",
          attribute_ngram: "population",
          cooccurring: true,
        },
      ],
      verdicts: {
        "income per capita": {
          kind: "top_n",
          modifier: verdict("booming", "positive", 0.5),
          attribute: verdict("income per capita", "positive", 0.5),
        },
        "earthquake magnitude": {
          kind: "bottom_n",
          modifier: verdict("booming", "positive", 0.5),
          attribute: verdict("earthquake magnitude", "negative", -0.5),
        },
        population: {
          kind: "top_n",
          modifier: verdict("booming", "positive", 0.5),
          attribute: verdict("population", "neutral", 0),
        },
      },
      filters: [
        {
          attribute: "income per capita",
          lo: 9200,
          hi: 60000,
          provenance: "statistical",
          source_label: "",
          source_url: "",
        },
        {
          attribute: "earthquake magnitude",
          lo: 5,
          hi: 10,
          provenance: "domain_knowledge",
          source_label: "Richter scale",
          source_url: "https://example.org/richter",
        },
        {
          attribute: "population",
          lo: 100,
          hi: 900,
          provenance: "statistical",
          source_label: "",
          source_url: "",
        },
      ],
      widgets: [incomeWidget, magnitudeWidget],
      active: ["income per capita", "earthquake magnitude", "population"],
      warnings: [],
    },
    chart_spec: {
      mark: "scatter",
      encodings: { x: "income per capita", y: "earthquake magnitude", tooltip: "place" },
      data_filter: [],
      title: "which places are booming?",
      rows: [
        { "income per capita": 10000, "earthquake magnitude": 6, place: "a", population: 500 },
        { "income per capita": 40000, "earthquake magnitude": 7, place: "b", population: 800 },
      ],
      sampled: false,
    },
    provenance_text: {
      segments: [
        { text: "booming", sentiment: "positive", widget: null, link: null },
        { text: " was read as: ", sentiment: null, widget: null, link: null },
        { text: "high ", sentiment: null, widget: null, link: null },
        {
          text: "income per capita",
          sentiment: "positive",
          widget: incomeWidget,
          link: null,
        },
        { text: "; ", sentiment: null, widget: null, link: null },
        { text: "low ", sentiment: null, widget: null, link: null },
        {
          text: "earthquake magnitude",
          sentiment: "negative",
          widget: magnitudeWidget,
          link: null,
        },
        {
          text: " per Richter scale",
          sentiment: null,
          widget: null,
          link: "https://example.org/richter",
        },
        { text: "; ", sentiment: null, widget: null, link: null },
        { text: "high ", sentiment: null, widget: null, link: null },
        { text: "population", sentiment: "neutral", widget: null, link: null },
        { text: " in [100, 900]", sentiment: null, widget: null, link: null },
      ],
    },
  };
}

export function sessionFixture(): SessionCreateResponse {
  return {
    session_id: "fixture-session",
    dataset: {
      name: "places",
      row_count: 2,
      attributes: [
        { name: "place", raw_name: "place", kind: "geographic", stats: null },
        {
          name: "income per capita",
          raw_name: "incomePerCapita",
          kind: "numeric",
          stats: { min: 500, max: 60000, median: 5000, mad: 4200, count: 2, null_count: 0 },
        },
        {
          name: "earthquake magnitude",
          raw_name: "earthquake_magnitude",
          kind: "numeric",
          stats: { min: 2, max: 8, median: 5, mad: 1.5, count: 2, null_count: 0 },
        },
        {
          name: "population",
          raw_name: "population",
          kind: "numeric",
          stats: { min: 100, max: 900, median: 500, mad: 200, count: 2, null_count: 0 },
        },
      ],
    },
  };
}

// A fetch stub that replies from a route table and records every call.
export interface RecordedCall {
  url: string;
  method: string;
  body: unknown;
}

export function fakeFetch(
  respond: (url: string, method: string, body: unknown) => { status: number; json: unknown },
) {
  const calls: RecordedCall[] = [];
  const impl = async (url: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    calls.push({ url, method, body });
    const reply = respond(url, method, body);
    return new Response(JSON.stringify(reply.json), {
      status: reply.status,
      headers: { "content-type": "application/json" },
    });
  };
  return { impl, calls };
}
