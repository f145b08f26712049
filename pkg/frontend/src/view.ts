import type { Board, BoardState } from "./board.js";
import { hintFor, LOCALITY_RANGE, THRESHOLD_RANGE } from "./board.js";
import type { NetworkArc } from "./types.js";

/** DOM rendering. Pure display of the board state; no semantics here. */

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function arcLine(state: BoardState, arc: NetworkArc): string {
  const vertices = state.lastResponse?.network.vertices ?? [];
  const name = (pos: number) => vertices.find((v) => v.pos === pos)?.symbol ?? `#${pos}`;
  return `${name(arc.head)} —${arc.case}→ ${name(arc.dep)}  (${arc.value.toFixed(3)})`;
}

function renderTiles(board: Board, root: HTMLElement): void {
  for (const [taxeme, symbols] of board.symbolsByTaxeme()) {
    const section = el("section", "taxeme-group");
    section.appendChild(el("h3", "taxeme-name", taxeme));
    const grid = el("div", "tile-grid");
    for (const symbol of symbols) {
      const tile = el("button", "tile", symbol.gloss);
      tile.type = "button";
      tile.dataset.symbol = symbol.id;
      tile.setAttribute(
        "aria-label",
        `${symbol.gloss}${symbol.predicative ? " (action)" : ""}`,
      );
      if (symbol.predicative) tile.classList.add("predicative");
      tile.addEventListener("click", () => void board.selectIcon(symbol.id));
      grid.appendChild(tile);
    }
    section.appendChild(grid);
    root.appendChild(section);
  }
}

function renderSequence(board: Board, state: BoardState, root: HTMLElement): void {
  root.replaceChildren();
  state.sequence.forEach((symbolId, position) => {
    const chip = el("button", "chip", `${symbolId} ×`);
    chip.type = "button";
    chip.setAttribute("aria-label", `remove ${symbolId}`);
    chip.addEventListener("click", () => void board.removeIcon(position));
    root.appendChild(chip);
  });
}

function renderAnalysis(state: BoardState, panes: Panes): void {
  const response = state.lastResponse;
  panes.sentence.textContent = response?.sentence ?? "";
  panes.status.textContent = state.pending ? "analysing…" : state.error ?? "";
  panes.hint.textContent = hintFor(state) ?? "";

  panes.network.replaceChildren();
  for (const arc of response?.network.arcs ?? []) {
    panes.network.appendChild(el("li", "arc", arcLine(state, arc)));
  }
  const unattached = response?.unattached ?? [];
  panes.unattached.textContent = unattached.length
    ? "unattached: " +
      unattached
        .map((pos) => response?.network.vertices.find((v) => v.pos === pos)?.symbol ?? `#${pos}`)
        .join(", ")
    : "";

  panes.rejected.replaceChildren();
  for (const candidate of response?.rejected_candidates ?? []) {
    const vertices = response?.network.vertices ?? [];
    const name = (pos: number) => vertices.find((v) => v.pos === pos)?.symbol ?? `#${pos}`;
    panes.rejected.appendChild(
      el(
        "li",
        "rejected",
        `${name(candidate.head)} —${candidate.case}→ ${name(candidate.filler)}` +
          `  (${candidate.value.toFixed(3)} below threshold)`,
      ),
    );
  }
}

interface Panes {
  sentence: HTMLElement;
  status: HTMLElement;
  hint: HTMLElement;
  network: HTMLElement;
  unattached: HTMLElement;
  rejected: HTMLElement;
}

function slider(
  label: string,
  range: { min: number; max: number },
  initial: number,
  onInput: (value: number) => void,
): HTMLElement {
  const wrapper = el("label", "slider");
  const caption = el("span", "slider-caption", `${label}: ${initial.toFixed(2)}`);
  const input = el("input");
  input.type = "range";
  input.min = String(range.min);
  input.max = String(range.max);
  input.step = "0.01";
  input.value = String(initial);
  input.addEventListener("input", () => {
    const value = Number(input.value);
    caption.textContent = `${label}: ${value.toFixed(2)}`;
    onInput(value);
  });
  wrapper.appendChild(caption);
  wrapper.appendChild(input);
  return wrapper;
}

export function mount(board: Board, root: HTMLElement): void {
  root.replaceChildren();

  const tiles = el("div", "tiles");
  const strip = el("div", "sequence-strip");
  const panes: Panes = {
    sentence: el("p", "sentence-pane"),
    status: el("p", "status-pane"),
    hint: el("p", "hint-pane"),
    network: el("ul", "network-pane"),
    unattached: el("p", "unattached-pane"),
    rejected: el("ul", "rejected-pane"),
  };

  const controls = el("div", "controls");
  controls.appendChild(
    slider("threshold", THRESHOLD_RANGE, 0.25, (value) => void board.adjustConfig({ threshold: value })),
  );
  controls.appendChild(
    slider("locality", LOCALITY_RANGE, 0.8, (value) => void board.adjustConfig({ locality: value })),
  );
  const reset = el("button", "reset", "reset defaults");
  reset.type = "button";
  reset.addEventListener(
    "click",
    () => void board.adjustConfig({ threshold: null, locality: null }),
  );
  controls.appendChild(reset);
  const clear = el("button", "clear", "clear message");
  clear.type = "button";
  clear.addEventListener("click", () => void board.clearSequence());
  controls.appendChild(clear);

  const output = el("div", "output");
  output.appendChild(el("h3", undefined, "sentence"));
  output.appendChild(panes.sentence);
  output.appendChild(panes.status);
  output.appendChild(panes.hint);
  output.appendChild(el("h3", undefined, "semantic network"));
  output.appendChild(panes.network);
  output.appendChild(panes.unattached);
  output.appendChild(el("h3", undefined, "rejected attachments"));
  output.appendChild(panes.rejected);

  root.appendChild(el("h2", undefined, "message"));
  root.appendChild(strip);
  root.appendChild(controls);
  root.appendChild(output);
  root.appendChild(el("h2", undefined, "icons"));
  root.appendChild(tiles);

  renderTiles(board, tiles);
  board.subscribe((state) => {
    renderSequence(board, state, strip);
    renderAnalysis(state, panes);
  });
  renderSequence(board, board.getState(), strip);
  renderAnalysis(board.getState(), panes);
}
