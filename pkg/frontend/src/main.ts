// App wiring: the new-game form, the live board, and the hint panel.
// One session per tab; at most one request in flight at a time.

import { ApiError, GameClient, type GameState, type NewGameRequest } from "./api.js";
import { renderBoard } from "./board.js";
import { buildViewModel } from "./model.js";

const client = new GameClient("");

let state: GameState | null = null;
let busy = false;
let hintsOn = false;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function showError(message: string | null): void {
  const box = el<HTMLElement>("error");
  box.textContent = message ?? "";
  box.hidden = message === null;
}

function variantControls(): void {
  const variant = el<HTMLSelectElement>("variant").value;
  el<HTMLElement>("dice-params").hidden = variant !== "coins" && variant !== "dice";
  el<HTMLElement>("word-params").hidden = variant !== "word";
  el<HTMLInputElement>("param-m").disabled = variant === "coins";
}

function requestFromForm(): NewGameRequest {
  const variant = el<HTMLSelectElement>("variant").value;
  const role = el<HTMLSelectElement>("role").value as NewGameRequest["human_role"];
  const start = el<HTMLInputElement>("start").value.trim();
  const wardenPolicy = el<HTMLSelectElement>("warden-policy").value;
  const base: Partial<NewGameRequest> = { human_role: role, start };
  if (role === "prisoner") {
    base.warden_engine =
      wardenPolicy === "random" ? { policy: "random", seed: 0 } : { policy: wardenPolicy };
  }
  if (variant === "prime") {
    return { ...base, spec: { kind: "prime" } } as NewGameRequest;
  }
  if (variant === "word") {
    const goal = el<HTMLInputElement>("goal").value.trim();
    return {
      ...base,
      spec: { kind: "word", goal: [...goal].map(Number) },
    } as NewGameRequest;
  }
  const n = Number(el<HTMLInputElement>("param-n").value);
  const m = variant === "coins" ? 2 : Number(el<HTMLInputElement>("param-m").value);
  return { ...base, spec: { kind: "uniform", m, n } } as NewGameRequest;
}

function translateStart(raw: string): string {
  // coin entry convenience: H/T strings become 0/1 digits
  if (/^[htHT]+$/.test(raw)) {
    return [...raw.toUpperCase()].map((c) => (c === "T" ? "1" : "0")).join("");
  }
  return raw;
}

async function refreshHint(): Promise<void> {
  const panel = el<HTMLElement>("hint");
  if (!hintsOn || !state || state.awaiting === "finished") {
    panel.hidden = true;
    return;
  }
  try {
    const hint = await client.hint(state.id);
    const action = hint.action;
    let text: string;
    if (action === null) {
      text = `no winning path (${hint.note ?? "unwinnable"})`;
    } else if (action.type === "pass") {
      text = `hint: ${action.actor} should pass (remoteness ${hint.remoteness})`;
    } else {
      text = `hint: ${action.actor} writes ${action.value} (remoteness ${hint.remoteness})`;
    }
    if (hint.note === "limit unreachable") {
      text += " - the move budget is not enough";
    }
    panel.textContent = text;
    panel.hidden = false;
  } catch (err) {
    panel.textContent = err instanceof ApiError ? err.message : String(err);
    panel.hidden = false;
  }
}

function redraw(): void {
  if (!state) return;
  const vm = buildViewModel(state);
  renderBoard(el<HTMLElement>("board"), vm, {
    onWrite: (value) => void act({ action: "write", value }),
    onPass: () => void act({ action: "pass" }),
  }, busy);
  el<HTMLElement>("game-area").hidden = false;
}

async function act(action: { action: "pass" } | { action: "write"; value: number }): Promise<void> {
  if (!state || busy) return;
  busy = true;
  redraw();
  try {
    state = await client.move(state.id, action);
    showError(null);
  } catch (err) {
    showError(err instanceof ApiError ? `${err.code}: ${err.message}` : String(err));
  } finally {
    busy = false;
    redraw();
    void refreshHint();
  }
}

async function newGame(event: Event): Promise<void> {
  event.preventDefault();
  if (busy) return;
  busy = true;
  try {
    const request = requestFromForm();
    request.start = translateStart(String(request.start));
    state = await client.createGame(request);
    showError(null);
  } catch (err) {
    showError(err instanceof ApiError ? `${err.code}: ${err.message}` : String(err));
  } finally {
    busy = false;
    redraw();
    void refreshHint();
  }
}

function boot(): void {
  el<HTMLFormElement>("new-game").addEventListener("submit", (e) => void newGame(e));
  el<HTMLSelectElement>("variant").addEventListener("change", variantControls);
  el<HTMLInputElement>("hints-toggle").addEventListener("change", (e) => {
    hintsOn = (e.target as HTMLInputElement).checked;
    void refreshHint();
  });
  variantControls();
}

boot();
