// UI contract, unit level: the view model offers exactly the server's
// legal values as buttons (no more, no fewer), and the counters mirror the
// server's bookkeeping.

import test from "node:test";
import assert from "node:assert/strict";

import type { GameState, LegalDoc } from "../src/api.js";
import { buildViewModel } from "../src/model.js";

function makeState(overrides: Partial<GameState>): GameState {
  return {
    id: "abc123",
    spec: { kind: "uniform", m: 3, n: 3 },
    position: [1, 0, 0],
    rendered: "100",
    coins: null,
    moves_made: 0,
    limit: null,
    moves_remaining: null,
    human_role: "both",
    goal_as_start: false,
    awaiting: "prisoner_value",
    legal: { actor: "prisoner", values: [0, 1, 2], may_pass: false },
    outcome: null,
    steps: [],
    ...overrides,
  };
}

interface Scripted {
  name: string;
  state: GameState;
  expectButtons: number[];
  expectPass: boolean;
}

const warden = (values: number[]): LegalDoc => ({ actor: "warden", values, may_pass: true });
const prisoner = (values: number[]): LegalDoc => ({ actor: "prisoner", values, may_pass: false });

// twenty scripted states covering roles, phases, alphabets, and endings
const SCRIPTED: Scripted[] = [
  { name: "hotseat prisoner after forced pass", state: makeState({}), expectButtons: [0, 1, 2], expectPass: false },
  { name: "hotseat warden mid-game", state: makeState({ position: [2, 2, 1], rendered: "221", awaiting: "warden_decision", legal: warden([0]) }), expectButtons: [0], expectPass: true },
  { name: "human prisoner, own turn", state: makeState({ human_role: "prisoner", legal: prisoner([1, 2]) }), expectButtons: [1, 2], expectPass: false },
  { name: "human warden, own turn", state: makeState({ human_role: "warden", awaiting: "warden_decision", legal: warden([0, 1]) }), expectButtons: [0, 1], expectPass: true },
  { name: "human prisoner shown a warden decision", state: makeState({ human_role: "prisoner", awaiting: "warden_decision", legal: warden([0, 1]) }), expectButtons: [], expectPass: false },
  { name: "human warden shown a prisoner decision", state: makeState({ human_role: "warden", legal: prisoner([2]) }), expectButtons: [], expectPass: false },
  { name: "finished game offers nothing", state: makeState({ awaiting: "finished", legal: null, outcome: { result: "prisoner_won", moves: 6 } }), expectButtons: [], expectPass: false },
  { name: "six-sided die, full prisoner range", state: makeState({ spec: { kind: "uniform", m: 6, n: 4 }, position: [2, 2, 5, 0], rendered: "2250", legal: prisoner([0, 1, 2, 3, 4, 5]) }), expectButtons: [0, 1, 2, 3, 4, 5], expectPass: false },
  { name: "six-sided die, warden below a 3", state: makeState({ spec: { kind: "uniform", m: 6, n: 4 }, position: [2, 5, 0, 3], rendered: "2503", awaiting: "warden_decision", legal: warden([0, 1, 2]) }), expectButtons: [0, 1, 2], expectPass: true },
  { name: "coins, prisoner keeps or flips", state: makeState({ spec: { kind: "uniform", m: 2, n: 5 }, position: [1, 0, 1, 1, 0], rendered: "10110", coins: "THTTH", legal: prisoner([0, 1]) }), expectButtons: [0, 1], expectPass: false },
  { name: "coins, warden flips a tail", state: makeState({ spec: { kind: "uniform", m: 2, n: 5 }, position: [0, 1, 1, 0, 1], rendered: "01101", coins: "HTTHT", awaiting: "warden_decision", legal: warden([0]) }), expectButtons: [0], expectPass: true },
  { name: "prime game, prisoner on an 8", state: makeState({ spec: { kind: "prime" }, position: [8, 8], rendered: "88", limit: 19, moves_remaining: 19, legal: prisoner([8, 9]) }), expectButtons: [8, 9], expectPass: false },
  { name: "prime game, warden on a 9", state: makeState({ spec: { kind: "prime" }, position: [4, 9], rendered: "49", limit: 19, moves_remaining: 12, moves_made: 7, awaiting: "warden_decision", legal: warden([0, 1, 2, 3, 4, 5, 6, 7, 8]) }), expectButtons: [0, 1, 2, 3, 4, 5, 6, 7, 8], expectPass: true },
  { name: "goal word, single option", state: makeState({ spec: { kind: "word", goal: [3, 1, 4] }, position: [2, 0, 4], rendered: "204", legal: prisoner([4]) }), expectButtons: [4], expectPass: false },
  { name: "goal word, warden choices", state: makeState({ spec: { kind: "word", goal: [3, 1, 4] }, position: [4, 2, 0, 3], rendered: "4203", awaiting: "warden_decision", legal: warden([0, 1, 2]) }), expectButtons: [0, 1, 2], expectPass: true },
  { name: "limit exceeded shows no buttons", state: makeState({ spec: { kind: "prime" }, limit: 19, moves_remaining: 0, moves_made: 19, awaiting: "finished", legal: null, outcome: { result: "limit_exceeded" } }), expectButtons: [], expectPass: false },
  { name: "abandoned game", state: makeState({ awaiting: "finished", legal: null, outcome: { result: "abandoned" } }), expectButtons: [], expectPass: false },
  { name: "goal as start, warden opens", state: makeState({ position: [2, 2, 2], rendered: "222", goal_as_start: true, awaiting: "warden_decision", legal: warden([0, 1]) }), expectButtons: [0, 1], expectPass: true },
  { name: "engine warden pending for human prisoner", state: makeState({ human_role: "prisoner", position: [0, 0, 2], rendered: "002", awaiting: "warden_decision", legal: warden([0, 1]) }), expectButtons: [], expectPass: false },
  { name: "ten-sided prisoner range", state: makeState({ spec: { kind: "prime" }, position: [3, 0], rendered: "30", limit: 19, moves_remaining: 5, moves_made: 14, legal: prisoner([0, 1, 2, 3, 4, 5, 6, 7, 8, 9]) }), expectButtons: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9], expectPass: false },
];

test("twenty scripted states: buttons equal the server's legal values", () => {
  assert.equal(SCRIPTED.length, 20);
  for (const scripted of SCRIPTED) {
    const vm = buildViewModel(scripted.state);
    assert.deepEqual(vm.buttons, scripted.expectButtons, scripted.name);
    assert.equal(vm.showPass, scripted.expectPass, scripted.name);
  }
});

test("the move counter mirrors the server", () => {
  for (const scripted of SCRIPTED) {
    const vm = buildViewModel(scripted.state);
    assert.equal(vm.movesMade, scripted.state.moves_made, scripted.name);
    assert.equal(vm.counter, scripted.state.moves_remaining, scripted.name);
  }
});

test("tiles render the position with the rightmost highlighted", () => {
  const vm = buildViewModel(makeState({ position: [2, 5, 0, 3], rendered: "2503", spec: { kind: "uniform", m: 6, n: 4 } }));
  assert.deepEqual(vm.tiles.map((t) => t.label), ["2", "5", "0", "3"]);
  assert.deepEqual(vm.tiles.map((t) => t.isRightmost), [false, false, false, true]);
});

test("coins render as H and T", () => {
  const vm = buildViewModel(
    makeState({
      spec: { kind: "uniform", m: 2, n: 5 },
      position: [1, 0, 1, 1, 0],
      coins: "THTTH",
      legal: prisoner([0, 1]),
    }),
  );
  assert.deepEqual(vm.tiles.map((t) => t.label), ["T", "H", "T", "T", "H"]);
  assert.deepEqual(vm.buttonLabels, ["write H", "write T"]);
});

test("the transfer highlight follows the freshly written item", () => {
  const before = buildViewModel(makeState({ moves_made: 0 }));
  assert.equal(before.tiles[0].justWritten, false);
  const after = buildViewModel(makeState({ moves_made: 3 }));
  assert.equal(after.tiles[0].justWritten, true);
});

test("banners for each ending", () => {
  const won = buildViewModel(makeState({ awaiting: "finished", legal: null, outcome: { result: "prisoner_won", moves: 6 } }));
  assert.match(won.banner ?? "", /wins in 6 moves/);
  const lost = buildViewModel(makeState({ awaiting: "finished", legal: null, outcome: { result: "limit_exceeded" } }));
  assert.match(lost.banner ?? "", /warden/);
});
