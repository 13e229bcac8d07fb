// Integration against the real play server: spawn it, then drive the API
// exactly the way the browser client does.

import test from "node:test";
import assert from "node:assert/strict";
import { spawn, type ChildProcess } from "node:child_process";

import { ApiError, GameClient, type GameState } from "../src/api.js";
import { buildViewModel } from "../src/model.js";

let server: ChildProcess;
let client: GameClient;

test.before(async () => {
  server = spawn("python3", ["-m", "wardengame.cli", "serve", "--port", "0"], {
    stdio: ["ignore", "pipe", "inherit"],
  });
  const url = await new Promise<string>((resolve, reject) => {
    const timer = setTimeout(() => reject(new Error("server did not start")), 15000);
    let buffer = "";
    server.stdout!.on("data", (chunk: Buffer) => {
      buffer += chunk.toString();
      const match = buffer.match(/serving on (http:\/\/[^/]+)\//);
      if (match) {
        clearTimeout(timer);
        resolve(match[1]);
      }
    });
    server.on("exit", () => reject(new Error("server exited early")));
  });
  client = new GameClient(url);
});

test.after(() => {
  server.kill();
});

test("hints-only playthrough from 100 wins in exactly six moves", async () => {
  let state = await client.createGame({
    spec: { kind: "uniform", m: 3, n: 3 },
    start: "100",
    human_role: "both",
  });
  let guard = 0;
  while (state.awaiting !== "finished") {
    assert.ok(guard++ < 20, "playthrough did not terminate");
    const hint = await client.hint(state.id);
    assert.notEqual(hint.action, null);
    const action = hint.action!;
    state =
      action.type === "pass"
        ? await client.move(state.id, { action: "pass" })
        : await client.move(state.id, { action: "write", value: action.value });
  }
  assert.deepEqual(state.outcome, { result: "prisoner_won", moves: 6 });
  assert.equal(state.moves_made, 6);
});

test("illegal writes are rejected with 422", async () => {
  const state = await client.createGame({
    spec: { kind: "prime" },
    start: "88",
    human_role: "prisoner",
  });
  assert.equal(state.awaiting, "prisoner_value");
  await assert.rejects(
    client.move(state.id, { action: "write", value: 7 }),
    (err: unknown) => err instanceof ApiError && err.status === 422,
  );
});

test("out-of-turn actions are rejected with 409", async () => {
  const state = await client.createGame({
    spec: { kind: "uniform", m: 3, n: 3 },
    start: "100",
    human_role: "both",
  });
  // rightmost is 0: the pass was forced, so the prisoner's value is awaited
  // and a pass action is out of protocol
  await assert.rejects(
    client.move(state.id, { action: "pass" }),
    (err: unknown) => err instanceof ApiError && err.status === 409,
  );
  // finished games refuse moves the same way
  const done = await client.createGame({
    spec: { kind: "uniform", m: 3, n: 3 },
    start: "120",
    human_role: "both",
    goal_as_start: false,
  });
  let s = done;
  let guard = 0;
  while (s.awaiting !== "finished") {
    assert.ok(guard++ < 40);
    const hint = await client.hint(s.id);
    const action = hint.action!;
    s =
      action.type === "pass"
        ? await client.move(s.id, { action: "pass" })
        : await client.move(s.id, { action: "write", value: action.value });
  }
  await assert.rejects(
    client.move(s.id, { action: "write", value: 0 }),
    (err: unknown) => err instanceof ApiError && err.status === 409,
  );
});

test("view-model buttons equal the server's legal values across live states", async () => {
  const seen: GameState[] = [];
  const starts = ["100", "221", "012", "202", "111"];
  for (const start of starts) {
    let state = await client.createGame({
      spec: { kind: "uniform", m: 3, n: 3 },
      start,
      human_role: "both",
    });
    seen.push(state);
    let guard = 0;
    while (state.awaiting !== "finished" && guard++ < 6) {
      const legal = state.legal!;
      const value = legal.values[legal.values.length - 1];
      state = await client.move(state.id, { action: "write", value });
      seen.push(state);
    }
  }
  assert.ok(seen.length >= 20, `collected ${seen.length} live states`);
  for (const state of seen) {
    const vm = buildViewModel(state);
    if (state.awaiting === "finished") {
      assert.deepEqual(vm.buttons, []);
    } else {
      assert.deepEqual(vm.buttons, state.legal!.values);
    }
  }
});

test("the prime-puzzle counter tracks moves_made through a whole game", async () => {
  let state = await client.createGame({
    spec: { kind: "prime" },
    start: "88",
    human_role: "both",
  });
  assert.equal(state.limit, 19);
  let guard = 0;
  while (state.awaiting !== "finished") {
    assert.ok(guard++ < 25);
    const vm = buildViewModel(state);
    assert.equal(vm.counter, 19 - state.moves_made);
    assert.equal(vm.movesMade, state.moves_made);
    const hint = await client.hint(state.id);
    const action = hint.action!;
    state =
      action.type === "pass"
        ? await client.move(state.id, { action: "pass" })
        : await client.move(state.id, { action: "write", value: action.value });
  }
  const vm = buildViewModel(state);
  assert.equal(vm.movesMade, state.moves_made);
  assert.equal(vm.counter, 19 - state.moves_made);
  assert.deepEqual(state.outcome, { result: "prisoner_won", moves: 19 });
});
