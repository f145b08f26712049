import type { AnalyzeResponse, ConfigOverrides, ServiceClient, SymbolInfo } from "./types.js";

/** HTTP client for the analysis service; all bodies are UTF-8 JSON. */
export class HttpServiceClient implements ServiceClient {
  constructor(private readonly baseUrl: string) {}

  async fetchSymbols(): Promise<SymbolInfo[]> {
    const response = await fetch(`${this.baseUrl}/symbols`);
    if (!response.ok) {
      throw new Error(`GET /symbols failed with status ${response.status}`);
    }
    return (await response.json()) as SymbolInfo[];
  }

  async analyze(sequence: string[], overrides: ConfigOverrides): Promise<AnalyzeResponse> {
    const body: Record<string, unknown> = { sequence };
    if (overrides.threshold !== null) body.threshold = overrides.threshold;
    if (overrides.locality !== null) body.locality = overrides.locality;
    const response = await fetch(`${this.baseUrl}/analyze`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      let detail = `status ${response.status}`;
      try {
        const payload = (await response.json()) as { error?: string };
        if (payload.error) detail = payload.error;
      } catch {
        // response body was not JSON; keep the status text
      }
      throw new Error(`analysis failed: ${detail}`);
    }
    return (await response.json()) as AnalyzeResponse;
  }
}
