import type { WidgetPayload } from "./types.js";

export interface RangeSliderHandlers {
  onChange(attribute: string, lo: number, hi: number): void;
}

const STEPS = 200;

function toStep(value: number, min: number, max: number): number {
  if (max === min) return 0;
  return Math.round(((value - min) / (max - min)) * STEPS);
}

function fromStep(step: number, min: number, max: number): number {
  return min + (step / STEPS) * (max - min);
}

function fmt(x: number): string {
  return Number.isInteger(x) ? String(x) : x.toFixed(2);
}

// A two-thumb range slider built from two native <input type=range>
// elements over the widget's data bounds. Thumbs may not cross; every
// movement reports the full [lo, hi] pair so the caller can debounce.
export function createRangeSlider(
  widget: WidgetPayload,
  handlers: RangeSliderHandlers,
): HTMLElement {
  const [min, max] = widget.bounds;
  const root = document.createElement("span");
  root.className = "range-widget";
  root.dataset.attribute = widget.attribute;

  const lo = document.createElement("input");
  lo.type = "range";
  lo.className = "range-lo";
  const hi = document.createElement("input");
  hi.type = "range";
  hi.className = "range-hi";
  for (const input of [lo, hi]) {
    input.min = "0";
    input.max = String(STEPS);
    input.step = "1";
  }
  lo.value = String(toStep(widget.current.lo, min, max));
  hi.value = String(toStep(widget.current.hi, min, max));

  const label = document.createElement("span");
  label.className = "range-label";

  const currentValues = (): [number, number] => {
    let a = Number(lo.value);
    let b = Number(hi.value);
    if (a > b) {
      // keep the thumbs ordered: the one being dragged pushes the other
      [a, b] = [b, a];
    }
    return [fromStep(a, min, max), fromStep(b, min, max)];
  };

  const updateLabel = () => {
    const [a, b] = currentValues();
    label.textContent = ` [${fmt(a)}, ${fmt(b)}]`;
  };
  updateLabel();

  const report = () => {
    updateLabel();
    const [a, b] = currentValues();
    handlers.onChange(widget.attribute, a, b);
  };
  lo.addEventListener("input", report);
  hi.addEventListener("input", report);

  root.append(lo, hi, label);
  return root;
}
