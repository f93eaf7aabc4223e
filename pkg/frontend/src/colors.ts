import type { SegmentSentiment } from "./types.js";

// The fixed sentiment color scheme: positive reads blue, negative red,
// neutral yellow. Rendering code must never pick colors any other way.
export const SENTIMENT_COLORS: Record<SegmentSentiment, string> = {
  positive: "blue",
  negative: "red",
  neutral: "yellow",
};

export function sentimentColor(sentiment: SegmentSentiment | null): string | null {
  return sentiment === null ? null : SENTIMENT_COLORS[sentiment];
}
