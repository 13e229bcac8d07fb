// Pure view model: everything the board shows, derived from one server
// state document.  No DOM and no game rules in here, which is what makes
// the UI contract directly testable.

import type { ActorName, GameState } from "./api.js";

export interface Tile {
  label: string;
  isRightmost: boolean;
  justWritten: boolean; // the transfer highlight on the freshly moved item
}

export interface ViewModel {
  tiles: Tile[];
  /** Write buttons offered to the human: exactly the server's legal values
   * for the awaited decision, empty when it is not the human's turn. */
  buttons: number[];
  buttonLabels: string[];
  showPass: boolean;
  decisionActor: ActorName | null;
  humanTurn: boolean;
  movesMade: number;
  /** Moves-remaining countdown; null outside limited games. */
  counter: number | null;
  banner: string | null;
  statusLine: string;
}

function humanControls(state: GameState, actor: ActorName): boolean {
  return state.human_role === "both" || state.human_role === actor;
}

function tileLabel(state: GameState, value: number): string {
  if (state.coins !== null) {
    return value === 0 ? "H" : "T";
  }
  return String(value);
}

export function buildViewModel(state: GameState): ViewModel {
  const n = state.position.length;
  const tiles: Tile[] = state.position.map((value, index) => ({
    label: tileLabel(state, value),
    isRightmost: index === n - 1 && state.awaiting !== "finished",
    justWritten: index === 0 && state.moves_made > 0,
  }));

  const decisionActor = state.legal?.actor ?? null;
  const humanTurn =
    state.awaiting !== "finished" &&
    decisionActor !== null &&
    humanControls(state, decisionActor);
  const buttons = humanTurn && state.legal ? [...state.legal.values] : [];
  const buttonLabels = buttons.map((value) =>
    state.coins !== null ? (value === 0 ? "write H" : "write T") : `write ${value}`,
  );
  const showPass = humanTurn && state.legal !== null && state.legal.may_pass;

  let banner: string | null = null;
  if (state.outcome) {
    if (state.outcome.result === "prisoner_won") {
      banner = `Prisoner wins in ${state.outcome.moves} moves - freedom!`;
    } else if (state.outcome.result === "limit_exceeded") {
      banner = "Out of moves - the warden keeps you.";
    } else {
      banner = "Game abandoned.";
    }
  }

  let statusLine: string;
  if (state.awaiting === "finished") {
    statusLine = "Game over.";
  } else if (humanTurn) {
    statusLine =
      decisionActor === "warden"
        ? "Your call as warden: write a smaller value or pass."
        : "Your move as prisoner: keep or raise the value.";
  } else {
    statusLine = `Waiting for the ${decisionActor ?? "engine"}.`;
  }

  return {
    tiles,
    buttons,
    buttonLabels,
    showPass,
    decisionActor,
    humanTurn,
    movesMade: state.moves_made,
    counter: state.moves_remaining,
    banner,
    statusLine,
  };
}
