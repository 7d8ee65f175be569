/** SVG view model for the cluster view. Pure: snapshot + state in, SVG out.
 * Every weight and bucket comes from the server's viz data. */

import { strokeWidthForBucket } from './buckets.js';
import { layoutSnapshot } from './layout.js';
import type { ViewState } from './state.js';

function escapeXml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export function renderClusterView(state: ViewState, width = 960, height = 640): string {
  const snapshot = state.snapshot;
  const { positions, hulls } = layoutSnapshot(snapshot, width, height);
  const assignment = new Map<number, number>();
  snapshot.clusters.forEach((members, ci) => members.forEach((v) => assignment.set(v, ci)));
  const centroids = new Set(snapshot.labels.map((l) => l.centroid));
  const labelByCluster = new Map(snapshot.labels.map((l) => [l.cluster, l]));

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `data-version="${escapeXml(snapshot.version)}">`,
  );

  hulls.forEach((hull, ci) => {
    const selected = state.selectedCluster === ci;
    const points = hull.map((p) => `${p.x.toFixed(1)},${p.y.toFixed(1)}`).join(' ');
    const label = labelByCluster.get(ci);
    const caption = label ? label.concepts.map(([c]) => c).join(' ') : `cluster ${ci}`;
    parts.push(
      `<g class="cluster${selected ? ' selected' : ''}" data-cluster="${ci}">` +
        `<polygon points="${points}" fill="hsl(${(ci * 67) % 360} 60% 90%)" ` +
        `stroke="hsl(${(ci * 67) % 360} 50% 45%)"/>` +
        `<title>${escapeXml(caption)}</title></g>`,
    );
  });

  for (const [u, v, weight, bucket] of snapshot.viz.edges) {
    if (assignment.get(u) !== assignment.get(v)) continue; // intra-cluster styling only
    if (!state.bucketVisible[bucket - 1]) continue;
    const a = positions[u];
    const b = positions[v];
    parts.push(
      `<line class="edge" data-bucket="${bucket}" ` +
        `x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" ` +
        `x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}" ` +
        `stroke="#555" stroke-width="${strokeWidthForBucket(bucket)}">` +
        `<title>${weight.toFixed(3)}</title></line>`,
    );
  }

  snapshot.entityNames.forEach((name, v) => {
    const p = positions[v];
    const isCentroid = centroids.has(v);
    parts.push(
      `<g class="node${isCentroid ? ' centroid' : ''}" data-entity="${v}">` +
        `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${isCentroid ? 11 : 7}" ` +
        `fill="${isCentroid ? '#ffd54d' : '#fff'}" stroke="#333"` +
        `${isCentroid ? ' stroke-width="2.5"' : ''}/>` +
        `<text x="${p.x.toFixed(1)}" y="${(p.y - 12).toFixed(1)}" ` +
        `text-anchor="middle" font-size="11">${escapeXml(name)}</text></g>`,
    );
  });

  parts.push(`<text x="8" y="${height - 8}" font-size="10" class="version">` +
    `snapshot ${escapeXml(snapshot.version)}</text>`);
  parts.push('</svg>');
  return parts.join('\n');
}

export function renderBorderlinePanel(state: ViewState): string {
  const names = state.snapshot.entityNames;
  if (state.snapshot.borderline.length === 0) {
    return '<p class="borderline-empty">No borderline classes.</p>';
  }
  const rows = state.snapshot.borderline.map(
    (b) =>
      `<tr data-entity="${b.entity}" draggable="true">` +
      `<td>${escapeXml(names[b.entity])}</td>` +
      `<td>${b.homeCluster} (${b.homeSimilarity.toFixed(3)})</td>` +
      `<td>${b.foreignCluster} (${b.foreignSimilarity.toFixed(3)})</td></tr>`,
  );
  return (
    '<table class="borderline"><thead><tr>' +
    '<th>class</th><th>home</th><th>pulled by</th></tr></thead>' +
    `<tbody>${rows.join('')}</tbody></table>`
  );
}
