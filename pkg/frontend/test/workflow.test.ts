import { describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { renderClusterView } from '../src/render.js';
import { initialState } from '../src/state.js';
import { ReassignWorkflow } from '../src/workflow.js';
import { makeFakeServer, makeSnapshot } from './fixtures.js';

function setup() {
  const server = makeFakeServer(makeSnapshot());
  const api = new ApiClient('http://test', server.fetch);
  const workflow = new ReassignWorkflow(api);
  return { server, api, workflow };
}

describe('reassignment workflow', () => {
  it('applies a move and its inverse: rendered snapshot equals the original', async () => {
    const { api, workflow } = setup();
    let state = initialState(await api.getSnapshot());
    const originalVersion = state.snapshot.version;
    const originalSvg = renderClusterView(state);

    const moved = await workflow.applyMove(state, { entity: 1, to: 1 });
    expect(moved.error).toBeNull();
    state = moved.state;
    expect(state.snapshot.version).not.toBe(originalVersion);
    expect(state.snapshot.clusters).toEqual([[0], [1, 2, 3]]);

    expect(workflow.canUndo()).toBe(true);
    const undone = await workflow.undo(state);
    expect(undone.error).toBeNull();
    state = undone.state;

    // server-verified version equality: same content hash as before
    expect(state.snapshot.version).toBe(originalVersion);
    expect(renderClusterView(state)).toBe(originalSvg);
  });

  it('moves update cluster membership and interaction-relevant views', async () => {
    const { api, workflow } = setup();
    const state = initialState(await api.getSnapshot());
    const result = await workflow.applyMove(state, { entity: 'OrderStore', to: 1 });
    expect(result.state.snapshot.clusters).toEqual([[0], [1, 2, 3]]);
    const svg = renderClusterView(result.state);
    expect(svg).toContain(`data-version="${result.state.snapshot.version}"`);
  });

  it('surfaces server rejections inline and keeps them out of undo', async () => {
    const { api, workflow } = setup();
    const state = initialState(await api.getSnapshot());
    const result = await workflow.applyMove(state, { entity: 'Ghost', to: 0 });
    expect(result.rejected).toEqual([
      { entity: 'Ghost', to: 0, reason: 'unknown entity' },
    ]);
    expect(workflow.canUndo()).toBe(false);
  });

  it('prompts reload on a concurrent stale snapshot', async () => {
    const { api, server, workflow } = setup();
    const state = initialState(await api.getSnapshot());
    // another client moves an entity; our state.version is now stale
    await api.reassign([{ entity: 0, to: 1 }]);
    expect(server.current().version).not.toBe(state.snapshot.version);

    const result = await workflow.applyMove(state, { entity: 1, to: 1 });
    expect(result.error).toContain('reload');
    expect(result.state.staleVersionPrompt).toBe(true);
    // the view still reflects exactly the old version until reloaded
    expect(result.state.snapshot.version).toBe(state.snapshot.version);
  });
});
