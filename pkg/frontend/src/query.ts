/** Query panel view model: top-5 ranked classes with cluster membership. */

import { ApiClient, ApiError } from './api.js';
import type { ViewState } from './state.js';

export function submitEnabled(text: string): boolean {
  return text.trim().length > 0;
}

export async function runQuery(
  api: ApiClient,
  state: ViewState,
  text: string,
): Promise<ViewState> {
  if (!submitEnabled(text)) {
    return { ...state, queryError: null };
  }
  try {
    const response = await api.query(text);
    return {
      ...state,
      lastQuery: { text, rows: response.top },
      queryError: null,
    };
  } catch (error) {
    if (error instanceof ApiError && error.status === 400) {
      return { ...state, lastQuery: null, queryError: 'query matches nothing in the corpus' };
    }
    return { ...state, lastQuery: null, queryError: String(error) };
  }
}

export function renderQueryPanel(state: ViewState): string {
  if (state.queryError) {
    return `<p class="query-error">${state.queryError}</p>`;
  }
  if (!state.lastQuery) {
    return '<p class="query-empty">Enter a query to rank classes.</p>';
  }
  const rows = state.lastQuery.rows
    .map(
      (row, i) =>
        `<li data-class="${row.classId}" data-cluster="${row.cluster}">` +
        `${i + 1}. ${row.name} <span class="score">${row.score.toFixed(2)}</span> ` +
        `<span class="cluster">cluster ${row.cluster}</span></li>`,
    )
    .join('');
  return `<ol class="query-results">${rows}</ol>`;
}

/** Clicking a result focuses its cluster in the main view. */
export function focusCluster(state: ViewState, classId: number): ViewState {
  const cluster = state.snapshot.clusters.findIndex((members) => members.includes(classId));
  return { ...state, selectedCluster: cluster >= 0 ? cluster : null };
}
