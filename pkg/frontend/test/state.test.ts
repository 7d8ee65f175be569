import { describe, expect, it } from 'vitest';

import {
  initialState,
  queuePendingMove,
  selectCluster,
  toggleBucket,
  withSnapshot,
} from '../src/state.js';
import { contentVersion, makeSnapshot } from './fixtures.js';

describe('view state', () => {
  it('starts with all buckets visible and nothing selected', () => {
    const state = initialState(makeSnapshot());
    expect(state.bucketVisible).toEqual([true, true, true, true, true]);
    expect(state.selectedCluster).toBeNull();
    expect(state.pendingMoves).toEqual([]);
  });

  it('rejects selecting a cluster the snapshot does not have', () => {
    const state = initialState(makeSnapshot());
    expect(() => selectCluster(state, 7)).toThrow(RangeError);
  });

  it('rejects pending moves that reference unknown ids', () => {
    const state = initialState(makeSnapshot());
    expect(() => queuePendingMove(state, { entity: 99, to: 0 })).toThrow(RangeError);
    expect(() => queuePendingMove(state, { entity: 0, to: 9 })).toThrow(RangeError);
    expect(queuePendingMove(state, { entity: 0, to: 'new' }).pendingMoves).toHaveLength(1);
  });

  it('reflects exactly one snapshot version after a swap', () => {
    const state = initialState(makeSnapshot());
    const next = makeSnapshot();
    next.clusters = [[0], [1, 2, 3]];
    next.version = contentVersion(next);
    const swapped = withSnapshot(
      queuePendingMove(state, { entity: 0, to: 1 }),
      next,
    );
    expect(swapped.snapshot.version).toBe(next.version);
    expect(swapped.pendingMoves).toEqual([]); // no mixed-version leftovers
    expect(swapped.staleVersionPrompt).toBe(false);
  });

  it('drops a selection that no longer exists after a swap', () => {
    const state = selectCluster(initialState(makeSnapshot()), 1);
    const next = makeSnapshot();
    next.clusters = [[0, 1, 2, 3]];
    next.version = contentVersion(next);
    expect(withSnapshot(state, next).selectedCluster).toBeNull();
  });

  it('toggles bucket visibility per bucket', () => {
    let state = initialState(makeSnapshot());
    state = toggleBucket(state, 3);
    expect(state.bucketVisible).toEqual([true, true, false, true, true]);
    state = toggleBucket(state, 3);
    expect(state.bucketVisible[2]).toBe(true);
  });
});
