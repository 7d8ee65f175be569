/** Wire types mirroring the archrec snapshot schema (schemaVersion 1). */

export interface QualityReport {
  mq: number;
  mqc: number;
  diff: number;
  iso: number;
  clusterCount: number;
}

export interface InterfaceMethod {
  owner: number;
  ownerName: string;
  method: string;
  signature: string;
}

export interface ClusterInterface {
  cluster: number;
  methods: InterfaceMethod[];
}

export interface InteractionEdge {
  provider: number;
  consumer: number;
  methods: { owner: number; ownerName: string; method: string }[];
}

export interface ClusterLabel {
  cluster: number;
  concepts: [string, number][];
  centroid: number;
}

export interface BorderlineEntry {
  entity: number;
  homeCluster: number;
  foreignCluster: number;
  foreignSimilarity: number;
  homeSimilarity: number;
}

/** [source, target, weight, bucket 1..5] as serialized by the server. */
export type VizEdge = [number, number, number, number];

export interface Snapshot {
  schemaVersion: number;
  createdAt: string;
  fingerprint: string;
  version: string;
  entityNames: string[];
  clusters: number[][];
  quality: QualityReport;
  interfaces: ClusterInterface[];
  interactions: { clusters: number[]; edges: InteractionEdge[] };
  labels: ClusterLabel[];
  borderline: BorderlineEntry[];
  viz: { edges: VizEdge[] };
  hierarchy: { levels: number[][][]; groupings: number[][][] };
  crossLayer: Record<string, Record<string, string[]>>;
}

export interface Move {
  entity: number | string;
  to: number | 'new';
}

export interface ReassignResponse {
  version: string;
  quality: QualityReport;
  rejected: { entity: unknown; to: unknown; reason: string }[];
  snapshot: Snapshot;
}

export interface QueryRow {
  classId: number;
  name: string;
  score: number;
  cluster: number;
}

export interface QueryResponse {
  top: QueryRow[];
  full: QueryRow[];
}
