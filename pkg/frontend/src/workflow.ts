/** Borderline reassignment workflow: apply a move through the server,
 * re-render from the returned snapshot, and keep the inverse move for undo.
 * The server is authoritative; a stale local version prompts a reload. */

import { ApiClient, VersionConflictError } from './api.js';
import { withSnapshot, type ViewState } from './state.js';
import type { Move } from './types.js';

export interface WorkflowResult {
  state: ViewState;
  rejected: { entity: unknown; to: unknown; reason: string }[];
  error: string | null;
}

export class ReassignWorkflow {
  private undoStack: Move[] = [];

  constructor(private readonly api: ApiClient) {}

  /** Where the entity currently lives (null if unknown locally; the server
   * stays authoritative and will reject such moves itself). */
  private homeCluster(state: ViewState, entity: number | string): number | null {
    const id =
      typeof entity === 'number' ? entity : state.snapshot.entityNames.indexOf(entity);
    const home = state.snapshot.clusters.findIndex((members) => members.includes(id));
    return home < 0 ? null : home;
  }

  async applyMove(state: ViewState, move: Move): Promise<WorkflowResult> {
    const home = this.homeCluster(state, move.entity);
    try {
      const response = await this.api.reassign([move], state.snapshot.version);
      if (response.rejected.length === 0 && home !== null) {
        this.undoStack.push({ entity: move.entity, to: home });
      }
      return {
        state: withSnapshot(state, response.snapshot),
        rejected: response.rejected,
        error: null,
      };
    } catch (error) {
      if (error instanceof VersionConflictError) {
        return {
          state: { ...state, staleVersionPrompt: true },
          rejected: [],
          error: 'snapshot changed on the server; reload required',
        };
      }
      return { state, rejected: [], error: String(error) };
    }
  }

  canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  async undo(state: ViewState): Promise<WorkflowResult> {
    const inverse = this.undoStack.pop();
    if (!inverse) return { state, rejected: [], error: 'nothing to undo' };
    try {
      const response = await this.api.reassign([inverse], state.snapshot.version);
      return {
        state: withSnapshot(state, response.snapshot),
        rejected: response.rejected,
        error: null,
      };
    } catch (error) {
      this.undoStack.push(inverse);
      if (error instanceof VersionConflictError) {
        return {
          state: { ...state, staleVersionPrompt: true },
          rejected: [],
          error: 'snapshot changed on the server; reload required',
        };
      }
      return { state, rejected: [], error: String(error) };
    }
  }
}
