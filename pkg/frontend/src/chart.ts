import type { ChartSpecPayload, DataRow } from "./types.js";

const WIDTH = 640;
const HEIGHT = 360;
const PAD = 44;
const SVG_NS = "http://www.w3.org/2000/svg";

function svgElement(tag: string, attrs: Record<string, string | number>): SVGElement {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

function numericColumn(rows: DataRow[], field: string): number[] {
  const values: number[] = [];
  for (const row of rows) {
    const v = row[field];
    if (typeof v === "number" && Number.isFinite(v)) values.push(v);
  }
  return values;
}

function scale(domainLo: number, domainHi: number, rangeLo: number, rangeHi: number) {
  const span = domainHi - domainLo;
  return (v: number) =>
    span === 0 ? (rangeLo + rangeHi) / 2 : rangeLo + ((v - domainLo) / span) * (rangeHi - rangeLo);
}

function frame(title: string): SVGElement {
  const svg = svgElement("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: WIDTH,
    height: HEIGHT,
    class: "chart",
  });
  const caption = svgElement("text", {
    x: WIDTH / 2,
    y: 20,
    "text-anchor": "middle",
    class: "chart-title",
  });
  caption.textContent = title;
  svg.append(caption);
  return svg;
}

function renderScatter(spec: ChartSpecPayload): SVGElement {
  const svg = frame(spec.title);
  const xField = spec.encodings["x"] ?? "";
  const yField = spec.encodings["y"] ?? "";
  const xs = numericColumn(spec.rows, xField);
  const ys = numericColumn(spec.rows, yField);
  if (xs.length === 0 || ys.length === 0) return svg;

  const sx = scale(Math.min(...xs), Math.max(...xs), PAD, WIDTH - PAD);
  const sy = scale(Math.min(...ys), Math.max(...ys), HEIGHT - PAD, PAD);
  for (const row of spec.rows) {
    const x = row[xField];
    const y = row[yField];
    if (typeof x !== "number" || typeof y !== "number") continue;
    const dot = svgElement("circle", {
      cx: sx(x),
      cy: sy(y),
      r: 5,
      class: "mark-point",
    });
    const tooltipField = spec.encodings["tooltip"];
    if (tooltipField !== undefined) {
      const tip = document.createElementNS(SVG_NS, "title");
      tip.textContent = String(row[tooltipField] ?? "");
      dot.append(tip);
    }
    svg.append(dot);
  }
  svg.append(axisLabel(xField, WIDTH / 2, HEIGHT - 8, 0));
  svg.append(axisLabel(yField, 14, HEIGHT / 2, -90));
  return svg;
}

function axisLabel(text: string, x: number, y: number, rotate: number): SVGElement {
  const label = svgElement("text", {
    x,
    y,
    "text-anchor": "middle",
    class: "axis-label",
    transform: rotate ? `rotate(${rotate} ${x} ${y})` : "",
  });
  label.textContent = text;
  return label;
}

function renderHistogram(spec: ChartSpecPayload): SVGElement {
  const svg = frame(spec.title);
  const field = spec.encodings["x"] ?? "";
  const values = numericColumn(spec.rows, field);
  if (values.length === 0) return svg;

  const lo = Math.min(...values);
  const hi = Math.max(...values);
  const bins = 12;
  const counts = new Array<number>(bins).fill(0);
  for (const v of values) {
    const index =
      hi === lo ? 0 : Math.min(bins - 1, Math.floor(((v - lo) / (hi - lo)) * bins));
    counts[index] = (counts[index] ?? 0) + 1;
  }
  const top = Math.max(...counts, 1);
  const barWidth = (WIDTH - 2 * PAD) / bins;
  counts.forEach((count, i) => {
    const height = ((HEIGHT - 2 * PAD) * count) / top;
    svg.append(
      svgElement("rect", {
        x: PAD + i * barWidth + 1,
        y: HEIGHT - PAD - height,
        width: Math.max(barWidth - 2, 1),
        height,
        class: "mark-bar",
      }),
    );
  });
  svg.append(axisLabel(field, WIDTH / 2, HEIGHT - 8, 0));
  return svg;
}

// Equirectangular dot map: longitude maps linearly to x, latitude to y.
// A rectangle plus graticule lines stand in for a basemap, so rendering
// needs no tile server or geo library.
function renderPointMap(spec: ChartSpecPayload): SVGElement {
  const svg = frame(spec.title);
  const sx = scale(-180, 180, PAD, WIDTH - PAD);
  const sy = scale(90, -90, PAD, HEIGHT - PAD);

  svg.append(
    svgElement("rect", {
      x: PAD,
      y: PAD,
      width: WIDTH - 2 * PAD,
      height: HEIGHT - 2 * PAD,
      class: "map-outline",
      fill: "none",
      stroke: "currentColor",
    }),
  );
  for (let lon = -120; lon <= 120; lon += 60) {
    svg.append(
      svgElement("line", {
        x1: sx(lon),
        y1: PAD,
        x2: sx(lon),
        y2: HEIGHT - PAD,
        class: "graticule",
      }),
    );
  }
  for (let lat = -60; lat <= 60; lat += 30) {
    svg.append(
      svgElement("line", {
        x1: PAD,
        y1: sy(lat),
        x2: WIDTH - PAD,
        y2: sy(lat),
        class: "graticule",
      }),
    );
  }

  const tooltipField = spec.encodings["tooltip"];
  for (const row of spec.rows) {
    const lat = row["latitude"];
    const lon = row["longitude"];
    if (typeof lat !== "number" || typeof lon !== "number") continue;
    const dot = svgElement("circle", {
      cx: sx(lon),
      cy: sy(lat),
      r: 5,
      class: "mark-point",
    });
    if (tooltipField !== undefined) {
      const tip = document.createElementNS(SVG_NS, "title");
      tip.textContent = String(row[tooltipField] ?? "");
      dot.append(tip);
    }
    svg.append(dot);
  }
  return svg;
}

export function renderChart(spec: ChartSpecPayload): SVGElement {
  switch (spec.mark) {
    case "scatter":
      return renderScatter(spec);
    case "point_map":
      return renderPointMap(spec);
    case "histogram":
      return renderHistogram(spec);
  }
}
