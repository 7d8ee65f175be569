import { describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { focusCluster, renderQueryPanel, runQuery, submitEnabled } from '../src/query.js';
import { initialState } from '../src/state.js';
import { makeFakeServer, makeSnapshot } from './fixtures.js';
import type { QueryRow } from '../src/types.js';

const ROWS: QueryRow[] = [
  { classId: 0, name: 'OrderManager', score: 1.0, cluster: 0 },
  { classId: 1, name: 'OrderStore', score: 2.2, cluster: 0 },
  { classId: 2, name: 'ReportBuilder', score: 2.8, cluster: 1 },
];

function setup() {
  const server = makeFakeServer(makeSnapshot(), ROWS);
  return new ApiClient('http://test', server.fetch);
}

describe('query panel', () => {
  it('disables submit for empty input', () => {
    expect(submitEnabled('')).toBe(false);
    expect(submitEnabled('   ')).toBe(false);
    expect(submitEnabled('orders')).toBe(true);
  });

  it('shows the top results with scores and cluster membership', async () => {
    const api = setup();
    const state = await runQuery(api, initialState(makeSnapshot()), 'submit order');
    expect(state.lastQuery?.rows).toHaveLength(3);
    const html = renderQueryPanel(state);
    expect(html).toContain('1. OrderManager');
    expect(html).toContain('cluster 0');
    expect(html).toContain('2.80');
  });

  it('reports unanswerable queries inline', async () => {
    const api = setup();
    const state = await runQuery(api, initialState(makeSnapshot()), 'the of and');
    expect(state.lastQuery).toBeNull();
    expect(renderQueryPanel(state)).toContain('query-error');
  });

  it('clicking a result focuses its cluster', () => {
    let state = initialState(makeSnapshot());
    state = focusCluster(state, 2);
    expect(state.selectedCluster).toBe(1);
  });
});
