import { Board } from "./board.js";
import { HttpServiceClient } from "./client.js";
import { mount } from "./view.js";

const DEFAULT_SERVICE = "http://127.0.0.1:8000";

async function bootstrap(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app element");
  const baseUrl = new URLSearchParams(window.location.search).get("service") ?? DEFAULT_SERVICE;
  const board = new Board(new HttpServiceClient(baseUrl));
  try {
    await board.init();
  } catch (error) {
    root.textContent = `Could not reach the analysis service at ${baseUrl}: ${String(error)}`;
    return;
  }
  mount(board, root);
}

void bootstrap();
