// App wiring: the new-game form, the live board, and the hint panel.
// One session per tab; at most one request in flight at a time.
import { ApiError, GameClient } from "./api.js";
import { renderBoard } from "./board.js";
import { buildViewModel } from "./model.js";
const client = new GameClient("");
let state = null;
let busy = false;
let hintsOn = false;
function el(id) {
    const node = document.getElementById(id);
    if (!node)
        throw new Error(`missing element #${id}`);
    return node;
}
function showError(message) {
    const box = el("error");
    box.textContent = message ?? "";
    box.hidden = message === null;
}
function variantControls() {
    const variant = el("variant").value;
    el("dice-params").hidden = variant !== "coins" && variant !== "dice";
    el("word-params").hidden = variant !== "word";
    el("param-m").disabled = variant === "coins";
}
function requestFromForm() {
    const variant = el("variant").value;
    const role = el("role").value;
    const start = el("start").value.trim();
    const wardenPolicy = el("warden-policy").value;
    const base = { human_role: role, start };
    if (role === "prisoner") {
        base.warden_engine =
            wardenPolicy === "random" ? { policy: "random", seed: 0 } : { policy: wardenPolicy };
    }
    if (variant === "prime") {
        return { ...base, spec: { kind: "prime" } };
    }
    if (variant === "word") {
        const goal = el("goal").value.trim();
        return {
            ...base,
            spec: { kind: "word", goal: [...goal].map(Number) },
        };
    }
    const n = Number(el("param-n").value);
    const m = variant === "coins" ? 2 : Number(el("param-m").value);
    return { ...base, spec: { kind: "uniform", m, n } };
}
function translateStart(raw) {
    // coin entry convenience: H/T strings become 0/1 digits
    if (/^[htHT]+$/.test(raw)) {
        return [...raw.toUpperCase()].map((c) => (c === "T" ? "1" : "0")).join("");
    }
    return raw;
}
async function refreshHint() {
    const panel = el("hint");
    if (!hintsOn || !state || state.awaiting === "finished") {
        panel.hidden = true;
        return;
    }
    try {
        const hint = await client.hint(state.id);
        const action = hint.action;
        let text;
        if (action === null) {
            text = `no winning path (${hint.note ?? "unwinnable"})`;
        }
        else if (action.type === "pass") {
            text = `hint: ${action.actor} should pass (remoteness ${hint.remoteness})`;
        }
        else {
            text = `hint: ${action.actor} writes ${action.value} (remoteness ${hint.remoteness})`;
        }
        if (hint.note === "limit unreachable") {
            text += " - the move budget is not enough";
        }
        panel.textContent = text;
        panel.hidden = false;
    }
    catch (err) {
        panel.textContent = err instanceof ApiError ? err.message : String(err);
        panel.hidden = false;
    }
}
function redraw() {
    if (!state)
        return;
    const vm = buildViewModel(state);
    renderBoard(el("board"), vm, {
        onWrite: (value) => void act({ action: "write", value }),
        onPass: () => void act({ action: "pass" }),
    }, busy);
    el("game-area").hidden = false;
}
async function act(action) {
    if (!state || busy)
        return;
    busy = true;
    redraw();
    try {
        state = await client.move(state.id, action);
        showError(null);
    }
    catch (err) {
        showError(err instanceof ApiError ? `${err.code}: ${err.message}` : String(err));
    }
    finally {
        busy = false;
        redraw();
        void refreshHint();
    }
}
async function newGame(event) {
    event.preventDefault();
    if (busy)
        return;
    busy = true;
    try {
        const request = requestFromForm();
        request.start = translateStart(String(request.start));
        state = await client.createGame(request);
        showError(null);
    }
    catch (err) {
        showError(err instanceof ApiError ? `${err.code}: ${err.message}` : String(err));
    }
    finally {
        busy = false;
        redraw();
        void refreshHint();
    }
}
function boot() {
    el("new-game").addEventListener("submit", (e) => void newGame(e));
    el("variant").addEventListener("change", variantControls);
    el("hints-toggle").addEventListener("change", (e) => {
        hintsOn = e.target.checked;
        void refreshHint();
    });
    variantControls();
}
boot();
