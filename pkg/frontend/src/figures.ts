/**
 * The four figure renderers. Every number drawn here comes straight from
 * the CSV: these functions contain no complexity or entropy math.
 */

import { num, readDataset, Row } from "./schema.js";
import {
  FAMILY_COLORS,
  HEIGHT,
  legend,
  line,
  linearScale,
  MARGIN,
  polyline,
  circle,
  rect,
  svgDocument,
  text,
  WIDTH,
  xAxis,
  yAxis,
} from "./svg.js";

export const FIGURE_KINDS = [
  "growth-curve",
  "mar-vs-er",
  "degree-dist",
  "signature",
] as const;
export type FigureKind = (typeof FIGURE_KINDS)[number];

export const SCHEMA_BY_KIND: Record<FigureKind, string> = {
  "growth-curve": "marnet.growth.v1",
  "mar-vs-er": "marnet.mar_vs_er.v1",
  "degree-dist": "marnet.mar_vs_er.v1",
  signature: "marnet.signature.v1",
};

const plotArea = {
  x0: MARGIN.left,
  x1: WIDTH - MARGIN.right,
  y0: HEIGHT - MARGIN.bottom,
  y1: MARGIN.top + 16,
};

export function renderFigure(kind: FigureKind, inputPath: string): string {
  const rows = readDataset(inputPath, SCHEMA_BY_KIND[kind]);
  switch (kind) {
    case "growth-curve":
      return growthCurve(rows);
    case "mar-vs-er":
      return marVsEr(rows);
    case "degree-dist":
      return degreeDist(rows);
    case "signature":
      return signatureBars(rows);
  }
}

function growthCurve(rows: Row[]): string {
  const series: Array<[string, string, string]> = [
    ["complete", "bdm_complete", FAMILY_COLORS.complete],
    ["er", "bdm_er", FAMILY_COLORS.er],
    ["mar", "bdm_mar", FAMILY_COLORS.mar],
  ];
  const ns = rows.map((row) => num(row, "n"));
  const values = rows.flatMap((row) => series.map(([, col]) => num(row, col)));
  const x = linearScale([Math.min(...ns), Math.max(...ns)], [plotArea.x0, plotArea.x1]);
  const y = linearScale([0, Math.max(...values)], [plotArea.y0, plotArea.y1]);
  const parts: string[] = [];
  for (const [name, col, color] of series) {
    const points = rows.map(
      (row): [number, number] => [x(num(row, "n")), y(num(row, col))],
    );
    parts.push(polyline(points, color));
    for (const [px, py] of points) parts.push(circle(px, py, 3, color));
  }
  parts.push(xAxis(x, plotArea.y0, "nodes"));
  parts.push(yAxis(y, plotArea.x0, "complexity estimate (bits)"));
  parts.push(legend(series.map(([name, , color]) => [name, color]), plotArea.x1 - 110, plotArea.y1 + 10));
  return svgDocument("Complexity growth by graph family", parts.join("\n"));
}

function marVsEr(rows: Row[]): string {
  const y = linearScale([0, 1], [plotArea.y0, plotArea.y1]);
  const n = rows.length;
  const band = (plotArea.x1 - plotArea.x0) / Math.max(1, n);
  const barWidth = band * 0.8;
  const parts: string[] = [];
  rows.forEach((row, i) => {
    const v = num(row, "nbdm");
    const color = FAMILY_COLORS[row.family] ?? "#888";
    const bx = plotArea.x0 + i * band + (band - barWidth) / 2;
    parts.push(rect(bx, y(v), barWidth, plotArea.y0 - y(v), color));
  });
  parts.push(line(plotArea.x0, plotArea.y0, plotArea.x1, plotArea.y0));
  parts.push(yAxis(y, plotArea.x0, "normalised complexity"));
  parts.push(
    text(
      (plotArea.x0 + plotArea.x1) / 2,
      plotArea.y0 + 20,
      rows.map((row) => row.graph_id).join("  "),
      'text-anchor="middle" font-size="9"',
    ),
  );
  parts.push(legend([["mar", FAMILY_COLORS.mar], ["er", FAMILY_COLORS.er]], plotArea.x1 - 80, plotArea.y1 + 10));
  return svgDocument("Greedy-randomised graphs vs uniform random graphs", parts.join("\n"));
}

function degreeDist(rows: Row[]): string {
  const families = ["mar", "er"] as const;
  const counts: Record<string, Map<number, number>> = { mar: new Map(), er: new Map() };
  const totals: Record<string, number> = { mar: 0, er: 0 };
  for (const row of rows) {
    const family = row.family;
    if (!(family in counts)) continue;
    for (const token of row.degree_sequence.trim().split(/\s+/)) {
      const deg = Number(token);
      counts[family].set(deg, (counts[family].get(deg) ?? 0) + 1);
      totals[family] += 1;
    }
  }
  const degrees = [...new Set(families.flatMap((f) => [...counts[f].keys()]))].sort(
    (a, b) => a - b,
  );
  const maxFrac = Math.max(
    ...families.flatMap((f) =>
      degrees.map((deg) => (counts[f].get(deg) ?? 0) / (totals[f] || 1)),
    ),
  );
  const x = linearScale(
    [degrees[0] - 0.5, degrees[degrees.length - 1] + 0.5],
    [plotArea.x0, plotArea.x1],
  );
  const y = linearScale([0, maxFrac], [plotArea.y0, plotArea.y1]);
  const band = (plotArea.x1 - plotArea.x0) / degrees.length;
  const barWidth = band * 0.38;
  const parts: string[] = [];
  degrees.forEach((deg) => {
    families.forEach((family, fi) => {
      const frac = (counts[family].get(deg) ?? 0) / (totals[family] || 1);
      const cx = x(deg) + (fi === 0 ? -barWidth : 0);
      parts.push(rect(cx, y(frac), barWidth, plotArea.y0 - y(frac), FAMILY_COLORS[family], 'fill-opacity="0.85"'));
    });
  });
  parts.push(xAxis(x, plotArea.y0, "degree"));
  parts.push(yAxis(y, plotArea.x0, "fraction of nodes"));
  parts.push(legend([["mar", FAMILY_COLORS.mar], ["er", FAMILY_COLORS.er]], plotArea.x1 - 80, plotArea.y1 + 10));
  return svgDocument("Degree distributions: greedy-randomised vs uniform", parts.join("\n"));
}

function signatureBars(rows: Row[]): string {
  const values = rows.map((row) => num(row, "contribution_bits"));
  const lo = Math.min(0, ...values);
  const hi = Math.max(0, ...values);
  const y = linearScale([lo, hi], [plotArea.y0, plotArea.y1]);
  const band = (plotArea.x1 - plotArea.x0) / Math.max(1, rows.length);
  const barWidth = band * 0.8;
  const parts: string[] = [];
  rows.forEach((row, i) => {
    const v = values[i];
    const color = v >= 0 ? FAMILY_COLORS.positive : FAMILY_COLORS.negative;
    const bx = plotArea.x0 + i * band + (band - barWidth) / 2;
    const top = Math.min(y(v), y(0));
    parts.push(rect(bx, top, barWidth, Math.abs(y(v) - y(0)), color));
    const label =
      row.element_kind === "node" ? `n${row.u}` : `${row.u}-${row.v}`;
    parts.push(
      `<g transform="translate(${(bx + barWidth / 2).toFixed(2)},${(plotArea.y0 + 14).toFixed(2)}) rotate(-45)">` +
        text(0, 0, label, 'text-anchor="end" font-size="9"') +
        "</g>",
    );
  });
  parts.push(line(plotArea.x0, y(0), plotArea.x1, y(0), "#333", 1));
  parts.push(yAxis(y, plotArea.x0, "contribution (bits)"));
  return svgDocument("Element information contributions, sorted", parts.join("\n"));
}
