/** Deterministic layout: clusters on an outer ring, members on inner rings,
 * then a few relaxation passes pulling weighted pairs together. Convex hulls
 * around each cluster's members give the bounded cluster regions. */

import type { Snapshot, VizEdge } from './types.js';

export interface Point {
  x: number;
  y: number;
}

export interface Layout {
  positions: Point[];
  hulls: Point[][];
}

const TAU = Math.PI * 2;

export function layoutSnapshot(
  snapshot: Snapshot,
  width = 960,
  height = 640,
  relaxPasses = 30,
): Layout {
  const clusterCount = snapshot.clusters.length;
  const cx = width / 2;
  const cy = height / 2;
  const ringRadius = Math.min(width, height) / 2.8;
  const positions: Point[] = new Array(snapshot.entityNames.length);

  snapshot.clusters.forEach((members, ci) => {
    const angle = clusterCount === 1 ? 0 : (TAU * ci) / clusterCount;
    const centerX = clusterCount === 1 ? cx : cx + ringRadius * Math.cos(angle);
    const centerY = clusterCount === 1 ? cy : cy + ringRadius * Math.sin(angle);
    const memberRadius = 28 + 9 * members.length;
    members.forEach((v, i) => {
      const theta = (TAU * i) / members.length;
      positions[v] = {
        x: centerX + memberRadius * Math.cos(theta),
        y: centerY + memberRadius * Math.sin(theta),
      };
    });
  });

  relax(positions, snapshot.viz.edges, relaxPasses);
  const hulls = snapshot.clusters.map((members) =>
    convexHull(members.map((v) => positions[v])),
  );
  return { positions, hulls };
}

function relax(positions: Point[], edges: VizEdge[], passes: number): void {
  for (let pass = 0; pass < passes; pass += 1) {
    for (const [u, v, weight] of edges) {
      const a = positions[u];
      const b = positions[v];
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const distance = Math.hypot(dx, dy) || 1;
      const ideal = 220 - 160 * weight;
      const push = ((distance - ideal) / distance) * 0.02 * weight;
      a.x += dx * push;
      a.y += dy * push;
      b.x -= dx * push;
      b.y -= dy * push;
    }
  }
}

/** Monotone-chain convex hull; degenerate inputs (1-2 points) pass through. */
export function convexHull(points: Point[]): Point[] {
  if (points.length <= 2) return [...points];
  const sorted = [...points].sort((p, q) => p.x - q.x || p.y - q.y);
  const cross = (o: Point, a: Point, b: Point) =>
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  const lower: Point[] = [];
  for (const p of sorted) {
    while (lower.length >= 2 && cross(lower[lower.length - 2], lower[lower.length - 1], p) <= 0) {
      lower.pop();
    }
    lower.push(p);
  }
  const upper: Point[] = [];
  for (const p of [...sorted].reverse()) {
    while (upper.length >= 2 && cross(upper[upper.length - 2], upper[upper.length - 1], p) <= 0) {
      upper.pop();
    }
    upper.push(p);
  }
  lower.pop();
  upper.pop();
  return [...lower, ...upper];
}
