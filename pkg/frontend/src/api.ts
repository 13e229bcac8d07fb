// Typed client for the play server's JSON API.  The client never computes
// game legality itself; every transition comes from the server.

export type ActorName = "warden" | "prisoner";
export type HumanRole = ActorName | "both";
export type Awaiting = "warden_decision" | "prisoner_value" | "finished";

export interface SpecDoc {
  kind: "uniform" | "word" | "multi" | "prime";
  m?: number;
  n?: number;
  goal?: number[];
  alphabet?: number;
  goals?: number[][];
  limit?: number | null;
}

export interface LegalDoc {
  actor: ActorName;
  values: number[];
  may_pass: boolean;
}

export interface OutcomeDoc {
  result: "prisoner_won" | "limit_exceeded" | "abandoned";
  moves?: number;
}

export interface StepDoc {
  actor: ActorName;
  value: number;
  position: number[];
}

export interface GameState {
  id: string;
  spec: SpecDoc;
  position: number[];
  rendered: string;
  coins: string | null;
  moves_made: number;
  limit: number | null;
  moves_remaining: number | null;
  human_role: HumanRole;
  goal_as_start: boolean;
  awaiting: Awaiting;
  legal: LegalDoc | null;
  outcome: OutcomeDoc | null;
  steps: StepDoc[];
}

export interface HintDoc {
  remoteness: number | "unwinnable";
  action:
    | { actor: ActorName; type: "write"; value: number }
    | { actor: ActorName; type: "pass" }
    | null;
  note: string | null;
}

export interface NewGameRequest {
  spec: SpecDoc;
  start: string | number[];
  human_role: HumanRole;
  goal_as_start?: boolean;
  warden_engine?: { policy: string; seed?: number };
  prisoner_engine?: { policy: string };
}

export type MoveAction = { action: "pass" } | { action: "write"; value: number };

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export class GameClient {
  constructor(private readonly baseUrl: string = "") {}

  createGame(body: NewGameRequest): Promise<GameState> {
    return this.request("POST", "/api/games", body);
  }

  getGame(id: string): Promise<GameState> {
    return this.request("GET", `/api/games/${id}`);
  }

  move(id: string, action: MoveAction): Promise<GameState> {
    return this.request("POST", `/api/games/${id}/move`, action);
  }

  hint(id: string): Promise<HintDoc> {
    return this.request("GET", `/api/games/${id}/hint`);
  }

  abandon(id: string): Promise<GameState> {
    return this.request("DELETE", `/api/games/${id}`);
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const doc = await response.json();
    if (!response.ok) {
      throw new ApiError(
        response.status,
        typeof doc?.code === "string" ? doc.code : "error",
        typeof doc?.message === "string" ? doc.message : response.statusText,
      );
    }
    return doc as T;
  }
}
