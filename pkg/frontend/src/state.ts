/** View state: exactly one snapshot version is reflected at any time. */

import type { Move, QueryRow, Snapshot } from './types.js';

export interface ViewState {
  snapshot: Snapshot;
  selectedCluster: number | null;
  pendingMoves: Move[];
  lastQuery: { text: string; rows: QueryRow[] } | null;
  queryError: string | null;
  bucketVisible: [boolean, boolean, boolean, boolean, boolean];
  offline: boolean;
  staleVersionPrompt: boolean;
}

export function initialState(snapshot: Snapshot): ViewState {
  return {
    snapshot,
    selectedCluster: null,
    pendingMoves: [],
    lastQuery: null,
    queryError: null,
    bucketVisible: [true, true, true, true, true],
    offline: false,
    staleVersionPrompt: false,
  };
}

export function withSnapshot(state: ViewState, snapshot: Snapshot): ViewState {
  const clusterStillExists =
    state.selectedCluster !== null && state.selectedCluster < snapshot.clusters.length;
  return {
    ...state,
    snapshot,
    selectedCluster: clusterStillExists ? state.selectedCluster : null,
    pendingMoves: [],
    staleVersionPrompt: false,
    offline: false,
  };
}

export function selectCluster(state: ViewState, cluster: number | null): ViewState {
  if (cluster !== null && (cluster < 0 || cluster >= state.snapshot.clusters.length)) {
    throw new RangeError(`no cluster ${cluster} in snapshot ${state.snapshot.version}`);
  }
  return { ...state, selectedCluster: cluster };
}

export function toggleBucket(state: ViewState, bucket: number): ViewState {
  const visible = [...state.bucketVisible] as ViewState['bucketVisible'];
  visible[bucket - 1] = !visible[bucket - 1];
  return { ...state, bucketVisible: visible };
}

export function queuePendingMove(state: ViewState, move: Move): ViewState {
  const names = state.snapshot.entityNames;
  const known =
    typeof move.entity === 'number'
      ? move.entity >= 0 && move.entity < names.length
      : names.includes(move.entity);
  const targetKnown =
    move.to === 'new' || (move.to >= 0 && move.to < state.snapshot.clusters.length);
  if (!known || !targetKnown) {
    throw new RangeError(`move references unknown entity/cluster: ${JSON.stringify(move)}`);
  }
  return { ...state, pendingMoves: [...state.pendingMoves, move] };
}
