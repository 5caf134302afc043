// Shipped example boards. Each graph comes in two flavors: a start the
// player can win, and a stuck start with N = g-1 dollars that no move
// sequence can rescue. All starting divisors were checked against the
// engine before being frozen here; the client never recomputes them.

import type { DivisorJson, GraphJson } from "./api.js";

export interface Preset {
  id: string;
  label: string;
  graph: GraphJson;
  start: DivisorJson;
}

function banana(m: number): GraphJson {
  const edges: [string, string][] = [];
  for (let i = 0; i < m; i++) edges.push(["p", "q"]);
  return { vertices: ["p", "q"], edges };
}

function cycle(n: number): GraphJson {
  const names = ["a", "b", "c", "d", "e"].slice(0, n);
  const edges: [string, string][] = [];
  for (let i = 0; i < n; i++) {
    const u = names[i]!;
    const v = names[(i + 1) % n]!;
    edges.push(i + 1 === n ? [v, u] : [u, v]);
  }
  return { vertices: names, edges };
}

const pentagonChord: GraphJson = {
  vertices: ["v1", "v2", "v3", "v4", "v5"],
  edges: [
    ["v1", "v2"],
    ["v2", "v3"],
    ["v3", "v4"],
    ["v4", "v5"],
    ["v1", "v5"],
    ["v1", "v3"],
  ],
};

export const PRESETS: Preset[] = [
  { id: "b2-win", label: "B2 double edge, winnable", graph: banana(2), start: { p: -1, q: 2 } },
  { id: "b2-stuck", label: "B2 double edge, unwinnable", graph: banana(2), start: { p: -1, q: 1 } },
  { id: "b3-win", label: "B3 triple edge, winnable", graph: banana(3), start: { p: -1, q: 3 } },
  { id: "b3-stuck", label: "B3 triple edge, unwinnable", graph: banana(3), start: { p: -1, q: 2 } },
  { id: "b4-win", label: "B4 quadruple edge, winnable", graph: banana(4), start: { p: -1, q: 4 } },
  { id: "b4-stuck", label: "B4 quadruple edge, unwinnable", graph: banana(4), start: { p: -1, q: 3 } },
  { id: "c3-win", label: "C3 triangle, winnable", graph: cycle(3), start: { a: -1, b: 2, c: -1 } },
  { id: "c3-stuck", label: "C3 triangle, unwinnable", graph: cycle(3), start: { a: -1, c: 1 } },
  { id: "c4-win", label: "C4 square, winnable", graph: cycle(4), start: { a: -1, b: 2, c: -1 } },
  { id: "c4-stuck", label: "C4 square, unwinnable", graph: cycle(4), start: { a: -1, d: 1 } },
  { id: "c5-win", label: "C5 pentagon, winnable", graph: cycle(5), start: { a: -1, b: 2, c: -1 } },
  { id: "c5-stuck", label: "C5 pentagon, unwinnable", graph: cycle(5), start: { a: -1, e: 1 } },
  {
    id: "pent-win",
    label: "Pentagon with chord, winnable",
    graph: pentagonChord,
    start: { v1: -1, v2: 2 },
  },
  {
    id: "pent-stuck",
    label: "Pentagon with chord, unwinnable",
    graph: pentagonChord,
    start: { v1: -1, v3: 1, v5: 1 },
  },
];

export function presetById(id: string): Preset {
  const found = PRESETS.find((p) => p.id === id);
  if (!found) throw new Error(`unknown preset: ${id}`);
  return found;
}
