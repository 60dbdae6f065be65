import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";
import { describe, expect, it } from "vitest";

const root = resolve(__dirname, "..");
const cli = join(root, "dist", "main.js");
const testdata = join(root, "testdata");

const KINDS: Array<[string, string]> = [
  ["growth-curve", "growth.csv"],
  ["mar-vs-er", "mar_vs_er.csv"],
  ["degree-dist", "mar_vs_er.csv"],
  ["signature", "signature.csv"],
];

function render(kind: string, input: string, output: string) {
  return spawnSync("node", [cli, kind, input, output], { encoding: "utf-8" });
}

describe("figure rendering", () => {
  it.each(KINDS)("%s renders byte-stable SVG", (kind, csv) => {
    const dir = mkdtempSync(join(tmpdir(), "figs-"));
    const input = join(testdata, csv);
    const out1 = join(dir, "a.svg");
    const out2 = join(dir, "b.svg");
    const r1 = render(kind, input, out1);
    expect(r1.status, r1.stderr).toBe(0);
    const r2 = render(kind, input, out2);
    expect(r2.status, r2.stderr).toBe(0);
    const svg1 = readFileSync(out1);
    const svg2 = readFileSync(out2);
    expect(svg1.equals(svg2)).toBe(true);
    expect(svg1.toString("utf-8").startsWith("<svg ")).toBe(true);
  });

  it("growth-curve draws the three family series", () => {
    const dir = mkdtempSync(join(tmpdir(), "figs-"));
    const out = join(dir, "g.svg");
    render("growth-curve", join(testdata, "growth.csv"), out);
    const svg = readFileSync(out, "utf-8");
    expect(svg.match(/<polyline /g)?.length).toBe(3);
    expect(svg).toContain("complete");
    expect(svg).toContain("mar");
  });

  it("degree-dist overlays two histogram series", () => {
    const dir = mkdtempSync(join(tmpdir(), "figs-"));
    const out = join(dir, "d.svg");
    render("degree-dist", join(testdata, "mar_vs_er.csv"), out);
    const svg = readFileSync(out, "utf-8");
    expect(svg).toContain("#3cb44b"); // mar bars
    expect(svg).toContain("#f58231"); // er bars
  });

  it("signature renders one bar per element with a zero line", () => {
    const dir = mkdtempSync(join(tmpdir(), "figs-"));
    const out = join(dir, "s.svg");
    render("signature", join(testdata, "signature.csv"), out);
    const svg = readFileSync(out, "utf-8");
    const rows = readFileSync(join(testdata, "signature.csv"), "utf-8")
      .trim()
      .split("\n").length - 2;
    // background + one bar per element
    expect(svg.match(/<rect /g)?.length).toBe(rows + 1);
  });
});

describe("input validation", () => {
  it("schema-mismatched CSV exits with code 4 naming both schemas", () => {
    const dir = mkdtempSync(join(tmpdir(), "figs-"));
    const out = join(dir, "x.svg");
    const r = render("growth-curve", join(testdata, "signature.csv"), out);
    expect(r.status).toBe(4);
    expect(r.stderr).toContain("marnet.growth.v1");
    expect(r.stderr).toContain("marnet.signature.v1");
  });

  it("missing schema line exits with code 4", () => {
    const dir = mkdtempSync(join(tmpdir(), "figs-"));
    const bare = join(dir, "bare.csv");
    writeFileSync(bare, "n,bdm_complete,bdm_er,bdm_mar\n8,1,2,3\n");
    const r = render("growth-curve", bare, join(dir, "x.svg"));
    expect(r.status).toBe(4);
  });

  it("missing input exits with code 3", () => {
    const dir = mkdtempSync(join(tmpdir(), "figs-"));
    const r = render("growth-curve", join(dir, "nope.csv"), join(dir, "x.svg"));
    expect(r.status).toBe(3);
  });

  it("unknown kind exits with code 2", () => {
    const r = render("pie-chart", join(testdata, "growth.csv"), "x.svg");
    expect(r.status).toBe(2);
  });

  it("non-svg output exits with code 2", () => {
    const r = render("growth-curve", join(testdata, "growth.csv"), "x.png");
    expect(r.status).toBe(2);
    expect(r.stderr).toContain(".svg only");
  });

  it("wrong arity exits with code 2", () => {
    const r = spawnSync("node", [cli, "growth-curve"], { encoding: "utf-8" });
    expect(r.status).toBe(2);
    expect(r.stderr).toContain("usage");
  });
});
