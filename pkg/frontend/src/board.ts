import type {
  AnalyzeResponse,
  ConfigOverrides,
  ServiceClient,
  SymbolInfo,
} from "./types.js";

/**
 * Board state machine: the user composes a sequence icon by icon and every
 * change re-analyses the whole sequence through the service. The board does
 * no semantic computation of its own; whatever the service answers is stored
 * unmodified and displayed verbatim (thin-client contract).
 *
 * At most the latest in-flight request wins: responses to superseded
 * requests are dropped, so the display always reflects the newest input.
 */

export interface BoardState {
  symbols: SymbolInfo[];
  sequence: string[];
  lastResponse: AnalyzeResponse | null;
  threshold: number | null; // null = service default
  locality: number | null;
  clamped: boolean;
  pending: boolean;
  error: string | null;
}

export const THRESHOLD_RANGE = { min: 0.0, max: 1.0 };
export const LOCALITY_RANGE = { min: 0.05, max: 1.0 };

function clamp(value: number, range: { min: number; max: number }): number {
  return Math.min(range.max, Math.max(range.min, value));
}

export type Listener = (state: BoardState) => void;

export class Board {
  private state: BoardState = {
    symbols: [],
    sequence: [],
    lastResponse: null,
    threshold: null,
    locality: null,
    clamped: false,
    pending: false,
    error: null,
  };
  private requestCounter = 0;
  private listeners: Listener[] = [];

  constructor(private readonly client: ServiceClient) {}

  getState(): BoardState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(changes: Partial<BoardState>): void {
    this.state = { ...this.state, ...changes };
    for (const listener of this.listeners) listener(this.state);
  }

  /** Group the available symbols by taxeme, preserving service order. */
  symbolsByTaxeme(): Map<string, SymbolInfo[]> {
    const groups = new Map<string, SymbolInfo[]>();
    for (const symbol of this.state.symbols) {
      const group = groups.get(symbol.taxeme);
      if (group) {
        group.push(symbol);
      } else {
        groups.set(symbol.taxeme, [symbol]);
      }
    }
    return groups;
  }

  knows(symbolId: string): boolean {
    return this.state.symbols.some((s) => s.id === symbolId);
  }

  async init(): Promise<void> {
    const symbols = await this.client.fetchSymbols();
    this.emit({ symbols });
  }

  /** Append a known icon and re-analyse; unknown ids are ignored. */
  async selectIcon(symbolId: string): Promise<void> {
    if (!this.knows(symbolId)) return;
    this.emit({ sequence: [...this.state.sequence, symbolId] });
    await this.refresh();
  }

  /** Remove the icon at a position and re-analyse; bad positions no-op. */
  async removeIcon(position: number): Promise<void> {
    if (!Number.isInteger(position) || position < 0 || position >= this.state.sequence.length) {
      return;
    }
    const sequence = this.state.sequence.filter((_, i) => i !== position);
    this.emit({ sequence });
    await this.refresh();
  }

  async clearSequence(): Promise<void> {
    this.emit({ sequence: [] });
    await this.refresh();
  }

  /**
   * Override the acceptability threshold and/or locality constant, then
   * re-analyse. Out-of-range values are clamped and flagged on the state.
   */
  async adjustConfig(overrides: { threshold?: number | null; locality?: number | null }): Promise<void> {
    let clamped = false;
    const next: ConfigOverrides = {
      threshold: this.state.threshold,
      locality: this.state.locality,
    };
    if (overrides.threshold !== undefined) {
      if (overrides.threshold === null) {
        next.threshold = null;
      } else {
        next.threshold = clamp(overrides.threshold, THRESHOLD_RANGE);
        clamped ||= next.threshold !== overrides.threshold;
      }
    }
    if (overrides.locality !== undefined) {
      if (overrides.locality === null) {
        next.locality = null;
      } else {
        next.locality = clamp(overrides.locality, LOCALITY_RANGE);
        clamped ||= next.locality !== overrides.locality;
      }
    }
    this.emit({ threshold: next.threshold, locality: next.locality, clamped });
    await this.refresh();
  }

  private async refresh(): Promise<void> {
    const requestId = ++this.requestCounter;
    if (this.state.sequence.length === 0) {
      this.emit({ lastResponse: null, pending: false, error: null });
      return;
    }
    this.emit({ pending: true });
    try {
      const response = await this.client.analyze([...this.state.sequence], {
        threshold: this.state.threshold,
        locality: this.state.locality,
      });
      if (requestId !== this.requestCounter) return; // superseded
      this.emit({ lastResponse: response, pending: false, error: null });
    } catch (error) {
      if (requestId !== this.requestCounter) return;
      // non-blocking failure: keep the sequence and the previous display
      this.emit({ pending: false, error: error instanceof Error ? error.message : String(error) });
    }
  }
}

/** Helper hint for the display: why is the network pane empty? */
export function hintFor(state: BoardState): string | null {
  if (state.sequence.length === 0) {
    return "Pick icons to compose a message.";
  }
  if (state.lastResponse && state.lastResponse.network.arcs.length === 0) {
    return "No case attachments found - try adding an action icon or lowering the threshold.";
  }
  return null;
}
