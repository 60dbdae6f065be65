/**
 * Minimal deterministic SVG primitives: fixed canvas, fixed fonts, no
 * timestamps or randomness, all coordinates rounded to two decimals so the
 * output bytes depend only on the input data.
 */

export const WIDTH = 720;
export const HEIGHT = 450;
export const MARGIN = { top: 40, right: 30, bottom: 55, left: 62 };

export const FAMILY_COLORS: Record<string, string> = {
  complete: "#4363d8",
  er: "#f58231",
  mar: "#3cb44b",
  positive: "#3cb44b",
  negative: "#e6194b",
};

export const r = (x: number): string => {
  const s = x.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
};

export interface Scale {
  (value: number): number;
  domain: [number, number];
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) =>
    r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  return scale;
}

export function niceTicks(lo: number, hi: number, count = 6): number[] {
  const span = hi - lo || 1;
  const rawStep = span / Math.max(1, count - 1);
  const mag = 10 ** Math.floor(Math.log10(rawStep));
  const candidates = [1, 2, 2.5, 5, 10].map((m) => m * mag);
  const step = candidates.find((s) => s >= rawStep) ?? candidates[4];
  const start = Math.ceil(lo / step) * step;
  const ticks: number[] = [];
  for (let t = start; t <= hi + 1e-9; t += step) {
    ticks.push(Number(t.toPrecision(12)));
  }
  return ticks;
}

export function tickLabel(t: number): string {
  return Number.isInteger(t) ? String(t) : String(Number(t.toPrecision(6)));
}

export function text(
  x: number,
  y: number,
  content: string,
  attrs = "",
): string {
  return `<text x="${r(x)}" y="${r(y)}" font-family="Helvetica,Arial,sans-serif" ${attrs}>${escapeXml(content)}</text>`;
}

export function line(
  x1: number,
  y1: number,
  x2: number,
  y2: number,
  stroke = "#333",
  width = 1,
): string {
  return `<line x1="${r(x1)}" y1="${r(y1)}" x2="${r(x2)}" y2="${r(y2)}" stroke="${stroke}" stroke-width="${width}"/>`;
}

export function rect(
  x: number,
  y: number,
  w: number,
  h: number,
  fill: string,
  attrs = "",
): string {
  return `<rect x="${r(x)}" y="${r(y)}" width="${r(Math.max(0, w))}" height="${r(Math.max(0, h))}" fill="${fill}" ${attrs}/>`;
}

export function polyline(
  points: Array<[number, number]>,
  stroke: string,
): string {
  const path = points.map(([x, y]) => `${r(x)},${r(y)}`).join(" ");
  return `<polyline points="${path}" fill="none" stroke="${stroke}" stroke-width="2"/>`;
}

export function circle(x: number, y: number, radius: number, fill: string): string {
  return `<circle cx="${r(x)}" cy="${r(y)}" r="${radius}" fill="${fill}"/>`;
}

export function xAxis(scale: Scale, y: number, label: string): string {
  const [lo, hi] = scale.domain;
  const parts = [line(scale(lo), y, scale(hi), y)];
  for (const t of niceTicks(lo, hi)) {
    const x = scale(t);
    parts.push(line(x, y, x, y + 5));
    parts.push(text(x, y + 20, tickLabel(t), 'text-anchor="middle" font-size="12"'));
  }
  parts.push(
    text((scale(lo) + scale(hi)) / 2, y + 42, label, 'text-anchor="middle" font-size="13"'),
  );
  return parts.join("\n");
}

export function yAxis(scale: Scale, x: number, label: string): string {
  const [lo, hi] = scale.domain;
  const parts = [line(x, scale(lo), x, scale(hi))];
  for (const t of niceTicks(lo, hi)) {
    const y = scale(t);
    parts.push(line(x - 5, y, x, y));
    parts.push(
      text(x - 8, y + 4, tickLabel(t), 'text-anchor="end" font-size="12"'),
    );
  }
  const cy = (scale(lo) + scale(hi)) / 2;
  parts.push(
    `<g transform="translate(${r(x - 44)},${r(cy)}) rotate(-90)">` +
      text(0, 0, label, 'text-anchor="middle" font-size="13"') +
      "</g>",
  );
  return parts.join("\n");
}

export function legend(
  entries: Array<[string, string]>,
  x: number,
  y: number,
): string {
  const parts: string[] = [];
  entries.forEach(([name, color], i) => {
    const ly = y + i * 20;
    parts.push(rect(x, ly - 10, 14, 14, color));
    parts.push(text(x + 20, ly + 2, name, 'font-size="13"'));
  });
  return parts.join("\n");
}

export function svgDocument(title: string, body: string): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
    rect(0, 0, WIDTH, HEIGHT, "#ffffff"),
    text(WIDTH / 2, 24, title, 'text-anchor="middle" font-size="16" font-weight="bold"'),
    body,
    "</svg>",
    "",
  ].join("\n");
}

function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
