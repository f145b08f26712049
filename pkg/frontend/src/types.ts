/** Wire types of the analysis service (consumed verbatim, never reshaped). */

export interface SymbolInfo {
  id: string;
  gloss: string;
  taxeme: string;
  domain: string;
  predicative: boolean;
  icon: string | null;
}

export interface NetworkVertex {
  pos: number;
  symbol: string;
}

export interface NetworkArc {
  head: number;
  case: string;
  dep: number;
  value: number;
}

export interface NetworkJson {
  vertices: NetworkVertex[];
  arcs: NetworkArc[];
}

export interface RejectedCandidate {
  head: number;
  case: string;
  filler: number;
  value: number;
}

export interface AnalyzeResponse {
  network: NetworkJson;
  sentence: string | null;
  rejected_candidates: RejectedCandidate[];
  unattached: number[];
}

export interface ConfigOverrides {
  threshold: number | null;
  locality: number | null;
}

/** Transport abstraction so the board logic can be tested with a fake. */
export interface ServiceClient {
  fetchSymbols(): Promise<SymbolInfo[]>;
  analyze(sequence: string[], overrides: ConfigOverrides): Promise<AnalyzeResponse>;
}
