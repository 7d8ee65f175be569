/** Thin client over the archrec HTTP API. All numbers shown in the UI come
 * from these responses; nothing is recomputed client-side. */

import type { Move, QueryResponse, ReassignResponse, Snapshot } from './types.js';

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class VersionConflictError extends Error {
  constructor(readonly expected: string, readonly actual: string) {
    super(`snapshot version conflict: expected ${expected}, server has ${actual}`);
  }
}

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const body = await response.json().catch(() => ({}));
    if (response.status === 409) {
      const detail = (body as { detail?: { expected?: string; actual?: string } }).detail ?? {};
      throw new VersionConflictError(detail.expected ?? '', detail.actual ?? '');
    }
    if (!response.ok) {
      throw new ApiError(response.status, JSON.stringify((body as { detail?: unknown }).detail ?? body));
    }
    return body as T;
  }

  getSnapshot(): Promise<Snapshot> {
    return this.request<Snapshot>('/snapshot');
  }

  reassign(moves: Move[], expectedVersion?: string): Promise<ReassignResponse> {
    return this.request<ReassignResponse>('/reassign', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ moves, expectedVersion }),
    });
  }

  query(text: string): Promise<QueryResponse> {
    return this.request<QueryResponse>('/query', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ text }),
    });
  }
}
