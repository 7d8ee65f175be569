/** A small snapshot fixture plus a fake server implementing the documented
 * /reassign and /query semantics (content-hash versioning included). */

import type { FetchLike } from '../src/api.js';
import type { Move, QueryRow, Snapshot } from '../src/types.js';

export function makeSnapshot(): Snapshot {
  const snapshot: Snapshot = {
    schemaVersion: 1,
    createdAt: '2026-01-01T00:00:00Z',
    fingerprint: 'fixture',
    version: '',
    entityNames: ['OrderManager', 'OrderStore', 'ReportBuilder', 'ReportFormatter'],
    clusters: [
      [0, 1],
      [2, 3],
    ],
    quality: { mq: 1.5, mqc: 3.5, diff: 0, iso: 2, clusterCount: 2 },
    interfaces: [
      { cluster: 0, methods: [] },
      {
        cluster: 1,
        methods: [
          { owner: 2, ownerName: 'ReportBuilder', method: 'build', signature: 'build():Report' },
        ],
      },
    ],
    interactions: {
      clusters: [0, 1],
      edges: [
        { provider: 1, consumer: 0, methods: [{ owner: 2, ownerName: 'ReportBuilder', method: 'build' }] },
      ],
    },
    labels: [
      { cluster: 0, concepts: [['Order', 1.4], ['Manager', 0.7]], centroid: 0 },
      { cluster: 1, concepts: [['Report', 1.2], ['Builder', 0.6]], centroid: 2 },
    ],
    borderline: [
      { entity: 1, homeCluster: 0, foreignCluster: 1, foreignSimilarity: 0.5, homeSimilarity: 0.52 },
    ],
    viz: {
      edges: [
        [0, 1, 0.2, 1],
        [2, 3, 0.4, 2],
        [0, 2, 0.6, 3],
        [1, 3, 0.8, 4],
        [0, 3, 1.0, 5],
      ],
    },
    hierarchy: { levels: [[[0, 1], [2, 3]]], groupings: [] },
    crossLayer: {},
  };
  snapshot.version = contentVersion(snapshot);
  return snapshot;
}

/** Content hash mirroring the server rule: everything except createdAt/version. */
export function contentVersion(snapshot: Snapshot): string {
  const { createdAt, version, ...content } = snapshot;
  void createdAt;
  void version;
  const canonical = JSON.stringify(content, Object.keys(content).sort());
  let hash = 5381;
  for (let i = 0; i < canonical.length; i += 1) {
    hash = ((hash * 33) ^ canonical.charCodeAt(i)) >>> 0;
  }
  return hash.toString(16);
}

export interface FakeServer {
  fetch: FetchLike;
  current(): Snapshot;
}

export function makeFakeServer(initial: Snapshot, queryRows: QueryRow[] = []): FakeServer {
  let snapshot: Snapshot = JSON.parse(JSON.stringify(initial));

  const json = (status: number, body: unknown): Response =>
    new Response(JSON.stringify(body), {
      status,
      headers: { 'Content-Type': 'application/json' },
    });

  const applyMoves = (moves: Move[]) => {
    const rejected: { entity: unknown; to: unknown; reason: string }[] = [];
    const next: Snapshot = JSON.parse(JSON.stringify(snapshot));
    for (const move of moves) {
      const id =
        typeof move.entity === 'number'
          ? move.entity
          : next.entityNames.indexOf(move.entity);
      if (id < 0 || id >= next.entityNames.length) {
        rejected.push({ entity: move.entity, to: move.to, reason: 'unknown entity' });
        continue;
      }
      if (move.to !== 'new' && (move.to < 0 || move.to >= next.clusters.length)) {
        rejected.push({ entity: move.entity, to: move.to, reason: 'unknown cluster' });
        continue;
      }
      const source = next.clusters.findIndex((members) => members.includes(id));
      next.clusters[source] = next.clusters[source].filter((v) => v !== id);
      if (move.to === 'new') next.clusters.push([id]);
      else next.clusters[move.to] = [...next.clusters[move.to], id].sort((a, b) => a - b);
      next.clusters = next.clusters.filter((members) => members.length > 0);
    }
    next.version = contentVersion(next);
    snapshot = next;
    return rejected;
  };

  const fetchImpl: FetchLike = async (url, init) => {
    const path = url.replace(/^https?:\/\/[^/]+/, '');
    if (path === '/snapshot') return json(200, snapshot);
    if (path === '/reassign') {
      const body = JSON.parse(String(init?.body ?? '{}'));
      if (body.expectedVersion && body.expectedVersion !== snapshot.version) {
        return json(409, {
          detail: { reason: 'version mismatch', expected: body.expectedVersion, actual: snapshot.version },
        });
      }
      const rejected = applyMoves(body.moves ?? []);
      return json(200, { version: snapshot.version, quality: snapshot.quality, rejected, snapshot });
    }
    if (path === '/query') {
      const body = JSON.parse(String(init?.body ?? '{}'));
      if (!String(body.text).trim() || body.text === 'the of and') {
        return json(400, { detail: 'query normalizes to nothing' });
      }
      return json(200, { top: queryRows.slice(0, 5), full: queryRows });
    }
    return json(404, { detail: `no route ${path}` });
  };

  return { fetch: fetchImpl, current: () => snapshot };
}
