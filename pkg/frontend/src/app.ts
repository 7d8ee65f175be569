/** Browser wiring: fetch the snapshot, render, and hook up the panels. */

import { ApiClient } from './api.js';
import { initialState, selectCluster, toggleBucket, type ViewState } from './state.js';
import { renderBorderlinePanel, renderClusterView } from './render.js';
import { focusCluster, renderQueryPanel, runQuery, submitEnabled } from './query.js';
import { ReassignWorkflow } from './workflow.js';

export async function startWorkbench(root: HTMLElement, baseUrl = ''): Promise<void> {
  const api = new ApiClient(baseUrl);
  const workflow = new ReassignWorkflow(api);
  let state: ViewState;
  try {
    state = initialState(await api.getSnapshot());
  } catch {
    root.innerHTML = '<div class="offline-banner">archrec API unreachable</div>';
    return;
  }

  root.innerHTML = `
    <div class="toolbar">
      <span id="version"></span>
      <span id="buckets"></span>
      <input id="query-input" placeholder="query the corpus" />
      <button id="query-submit" disabled>query</button>
      <button id="undo" disabled>undo</button>
    </div>
    <div id="view"></div>
    <div id="panels"><div id="query-panel"></div><div id="borderline-panel"></div></div>
    <div id="notice"></div>`;

  const byId = (id: string) => root.querySelector<HTMLElement>(`#${id}`)!;
  const input = byId('query-input') as HTMLInputElement;
  const submit = byId('query-submit') as HTMLButtonElement;
  const undoButton = byId('undo') as HTMLButtonElement;

  const render = () => {
    byId('version').textContent = `snapshot ${state.snapshot.version}`;
    byId('view').innerHTML = renderClusterView(state);
    byId('query-panel').innerHTML = renderQueryPanel(state);
    byId('borderline-panel').innerHTML = renderBorderlinePanel(state);
    byId('buckets').innerHTML = state.bucketVisible
      .map((on, i) => `<button data-bucket="${i + 1}" class="${on ? 'on' : 'off'}">${i + 1}</button>`)
      .join('');
    undoButton.disabled = !workflow.canUndo();
    byId('notice').textContent = state.staleVersionPrompt
      ? 'Snapshot changed on the server - reload to continue.'
      : '';
  };

  input.addEventListener('input', () => {
    submit.disabled = !submitEnabled(input.value);
  });
  submit.addEventListener('click', async () => {
    state = await runQuery(api, state, input.value);
    render();
  });
  undoButton.addEventListener('click', async () => {
    const result = await workflow.undo(state);
    state = result.state;
    render();
  });
  byId('buckets').addEventListener('click', (event) => {
    const bucket = (event.target as HTMLElement).dataset.bucket;
    if (bucket) {
      state = toggleBucket(state, Number(bucket));
      render();
    }
  });
  byId('view').addEventListener('click', (event) => {
    const group = (event.target as HTMLElement).closest('[data-cluster]');
    state = selectCluster(state, group ? Number((group as HTMLElement).dataset.cluster) : null);
    render();
  });
  byId('query-panel').addEventListener('click', (event) => {
    const item = (event.target as HTMLElement).closest('[data-class]');
    if (item) {
      state = focusCluster(state, Number((item as HTMLElement).dataset.class));
      render();
    }
  });
  byId('borderline-panel').addEventListener('click', async (event) => {
    const row = (event.target as HTMLElement).closest('[data-entity]');
    if (!row) return;
    const entity = Number((row as HTMLElement).dataset.entity);
    const entry = state.snapshot.borderline.find((b) => b.entity === entity);
    if (!entry) return;
    const result = await workflow.applyMove(state, { entity, to: entry.foreignCluster });
    state = result.state;
    if (result.rejected.length > 0) {
      byId('notice').textContent = `rejected: ${result.rejected
        .map((r) => r.reason)
        .join(', ')}`;
    }
    render();
  });

  render();
}
