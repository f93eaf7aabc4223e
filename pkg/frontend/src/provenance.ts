import { sentimentColor } from "./colors.js";
import { createRangeSlider, type RangeSliderHandlers } from "./slider.js";
import type { ProvenancePayload } from "./types.js";

// Renders the server's provenance segments verbatim: sentiment-colored
// spans, embedded range sliders on widget-bearing segments, and anchor
// tags for domain-scale sources. Purely a function of the payload.
export function renderProvenance(
  provenance: ProvenancePayload,
  handlers: RangeSliderHandlers,
): HTMLElement {
  const root = document.createElement("p");
  root.className = "provenance";

  for (const segment of provenance.segments) {
    let node: HTMLElement;
    if (segment.link !== null) {
      const anchor = document.createElement("a");
      anchor.href = segment.link;
      anchor.target = "_blank";
      anchor.rel = "noopener";
      anchor.className = "domain-link";
      node = anchor;
    } else {
      node = document.createElement("span");
    }
    node.textContent = segment.text;

    const color = sentimentColor(segment.sentiment);
    if (color !== null) {
      node.style.color = color;
      node.dataset.sentiment = segment.sentiment as string;
      node.classList.add("sentiment", `sentiment-${segment.sentiment}`);
    }
    root.append(node);

    if (segment.widget !== null) {
      root.append(createRangeSlider(segment.widget, handlers));
    }
  }
  return root;
}
