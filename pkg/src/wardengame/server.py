"""Session-based HTTP+JSON play service.

A session holds one live game.  The human controls the prisoner, the
warden, or both; every other decision is made by an engine policy, and the
server auto-advances through engine decisions (and forced passes) until a
human decision is pending or the game has finished.

Endpoints (bodies are JSON):

    POST   /api/games            create a session
    GET    /api/games/{id}       full state
    POST   /api/games/{id}/move  {"action": "pass"} or {"action": "write", "value": v}
    GET    /api/games/{id}/hint  optimal action + remoteness
    DELETE /api/games/{id}       abandon

Errors carry {"code", "message"}: 404 unknown session, 409 out of turn or
finished, 422 illegal value.  Anything not under /api serves static files
from the configured directory (the web UI).

Sessions live in memory and expire after an idle timeout.  Operations on
one session are serialized by a per-session lock; solved tables are built
once per spec and shared.
"""

from __future__ import annotations

import json
import mimetypes
import re
import threading
import time
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from wardengame import agents
from wardengame.core import (
    Actor,
    GoalSpec,
    MoveChoice,
    MultiGoal,
    Position,
    apply_move,
    is_goal,
    format_position,
    legal_values,
    position_to_coins,
    spec_from_doc,
    spec_to_doc,
    validate_position,
)
from wardengame.solver import (
    UNWINNABLE,
    NoWinPath,
    RemotenessTable,
    optimal_move,
    solve,
)

DEFAULT_IDLE_TTL = 3600.0

AWAIT_WARDEN = "warden_decision"
AWAIT_PRISONER = "prisoner_value"
FINISHED = "finished"


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class TableCache:
    """Lazily solved tables, shared across sessions."""

    def __init__(self) -> None:
        self._tables: dict[GoalSpec, RemotenessTable] = {}
        self._lock = threading.Lock()

    def get(self, spec: GoalSpec) -> RemotenessTable:
        with self._lock:
            table = self._tables.get(spec)
            if table is None:
                table = solve(spec)
                self._tables[spec] = table
            return table


@dataclass
class GameSession:
    id: str
    spec: GoalSpec
    position: Position
    human_role: str  # prisoner | warden | both
    goal_as_start: bool
    warden_engine: agents.WardenPolicy | None
    prisoner_engine: agents.PrisonerPolicy | None
    moves_made: int = 0
    awaiting: str = AWAIT_WARDEN
    outcome: dict | None = None
    steps: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)

    def touch(self) -> None:
        self.last_access = time.monotonic()


class PlayService:
    """The game logic behind the HTTP layer (kept separate so it can be
    driven directly)."""

    def __init__(self, idle_ttl: float = DEFAULT_IDLE_TTL):
        self.idle_ttl = idle_ttl
        self.tables = TableCache()
        self._sessions: dict[str, GameSession] = {}
        self._registry_lock = threading.Lock()

    # -- session bookkeeping ------------------------------------------------

    def _sweep(self) -> None:
        deadline = time.monotonic() - self.idle_ttl
        with self._registry_lock:
            stale = [sid for sid, s in self._sessions.items() if s.last_access < deadline]
            for sid in stale:
                del self._sessions[sid]

    def _get(self, session_id: str) -> GameSession:
        with self._registry_lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ApiError(404, "unknown_session", f"no session {session_id!r}")
        return session

    # -- operations -----------------------------------------------------------

    def create(self, doc: dict) -> dict:
        self._sweep()
        try:
            spec = spec_from_doc(doc.get("spec") or {})
        except (ValueError, KeyError, TypeError) as exc:
            raise ApiError(422, "bad_spec", f"bad spec: {exc}")
        human_role = doc.get("human_role", "prisoner")
        if human_role not in ("prisoner", "warden", "both"):
            raise ApiError(422, "bad_role", f"unknown role {human_role!r}")
        raw_start = doc.get("start")
        if raw_start is None:
            raise ApiError(422, "bad_start", "a start position is required")
        try:
            if isinstance(raw_start, str):
                digits = tuple(int(ch) for ch in raw_start) if "," not in raw_start else tuple(
                    int(x) for x in raw_start.split(",")
                )
            else:
                digits = tuple(int(x) for x in raw_start)
            start = validate_position(digits, spec.alphabet)
        except (ValueError, TypeError) as exc:
            raise ApiError(422, "bad_start", f"bad start position: {exc}")
        if len(start) != spec.n:
            raise ApiError(422, "bad_start", "start length does not match the spec")

        single_goal = not isinstance(spec, MultiGoal)
        default_gas = single_goal and is_goal(start, spec)
        goal_as_start = bool(doc.get("goal_as_start", default_gas))
        if goal_as_start and not single_goal:
            raise ApiError(422, "bad_spec", "goal-as-start applies to single-goal specs only")

        warden_engine = prisoner_engine = None
        provider = lambda: self.tables.get(spec)  # noqa: E731
        try:
            if human_role == "prisoner":
                warden_engine = self._engine_warden(doc.get("warden_engine"), provider)
            elif human_role == "warden":
                prisoner_engine = self._engine_prisoner(doc.get("prisoner_engine"), provider)
        except ValueError as exc:
            raise ApiError(422, "bad_engine", str(exc))

        session = GameSession(
            id=uuid.uuid4().hex,
            spec=spec,
            position=start,
            human_role=human_role,
            goal_as_start=goal_as_start,
            warden_engine=warden_engine,
            prisoner_engine=prisoner_engine,
        )
        if warden_engine is not None:
            warden_engine.reset(spec, start)
        if prisoner_engine is not None:
            prisoner_engine.reset(spec, start)
        if is_goal(start, spec) and not goal_as_start:
            session.awaiting = FINISHED
            session.outcome = {"result": "prisoner_won", "moves": 0}
        with session.lock:
            self._advance(session)
        with self._registry_lock:
            self._sessions[session.id] = session
        return self.state_doc(session)

    def _engine_warden(self, doc, provider) -> agents.WardenPolicy:
        doc = doc or {"policy": "optimal"}
        return agents.make_warden_policy(
            doc.get("policy", "optimal"),
            table_provider=provider,
            seed=doc.get("seed"),
        )

    def _engine_prisoner(self, doc, provider) -> agents.PrisonerPolicy:
        doc = doc or {"policy": "optimal"}
        return agents.make_prisoner_policy(
            doc.get("policy", "optimal"), table_provider=provider
        )

    def get_state(self, session_id: str) -> dict:
        self._sweep()
        session = self._get(session_id)
        with session.lock:
            session.touch()
            return self.state_doc(session)

    def delete(self, session_id: str) -> dict:
        self._sweep()
        session = self._get(session_id)
        with session.lock:
            if session.outcome is None:
                session.outcome = {"result": "abandoned"}
                session.awaiting = FINISHED
            doc = self.state_doc(session)
        with self._registry_lock:
            self._sessions.pop(session_id, None)
        return doc

    def move(self, session_id: str, action: dict) -> dict:
        self._sweep()
        session = self._get(session_id)
        with session.lock:
            session.touch()
            self._apply_human_action(session, action)
            self._advance(session)
            return self.state_doc(session)

    def hint(self, session_id: str) -> dict:
        self._sweep()
        session = self._get(session_id)
        with session.lock:
            session.touch()
            return self._hint_doc(session)

    # -- game mechanics -------------------------------------------------------

    def _human_controls(self, session: GameSession, role: str) -> bool:
        return session.human_role == "both" or session.human_role == role

    def _apply_human_action(self, session: GameSession, action: dict) -> None:
        if session.awaiting == FINISHED:
            raise ApiError(409, "finished", "the game is over")
        kind = action.get("action")
        if kind not in ("pass", "write"):
            raise ApiError(422, "bad_action", "action must be 'pass' or 'write'")
        v = session.position[-1]
        if session.awaiting == AWAIT_WARDEN:
            if not self._human_controls(session, "warden"):
                raise ApiError(409, "out_of_turn", "the warden decision is not yours")
            if kind == "pass":
                session.awaiting = AWAIT_PRISONER
                return
            value = self._action_value(action)
            if not 0 <= value < v:
                raise ApiError(422, "illegal_value", f"the warden must write below {v}")
            self._apply(session, MoveChoice(Actor.WARDEN, value))
            return
        # awaiting the prisoner's value
        if not self._human_controls(session, "prisoner"):
            raise ApiError(409, "out_of_turn", "the prisoner decision is not yours")
        if kind == "pass":
            raise ApiError(409, "out_of_turn", "the prisoner may not pass")
        value = self._action_value(action)
        if not v <= value < session.spec.alphabet:
            raise ApiError(
                422,
                "illegal_value",
                f"the prisoner must write {v}..{session.spec.alphabet - 1}",
            )
        self._apply(session, MoveChoice(Actor.PRISONER, value))

    @staticmethod
    def _action_value(action: dict) -> int:
        try:
            return int(action["value"])
        except (KeyError, TypeError, ValueError):
            raise ApiError(422, "illegal_value", "a write action needs an integer value")

    def _apply(self, session: GameSession, choice: MoveChoice) -> None:
        position = apply_move(session.position, choice, session.spec.alphabet)
        session.position = position
        session.moves_made += 1
        session.steps.append(
            {
                "actor": choice.actor.value,
                "value": choice.value,
                "position": list(position),
            }
        )
        for engine in (session.warden_engine, session.prisoner_engine):
            if engine is not None:
                engine.observe(choice.actor, choice.value, position)
        limit = session.spec.limit if isinstance(session.spec, MultiGoal) else None
        if is_goal(position, session.spec):
            session.awaiting = FINISHED
            session.outcome = {"result": "prisoner_won", "moves": session.moves_made}
        elif limit is not None and session.moves_made >= limit:
            session.awaiting = FINISHED
            session.outcome = {"result": "limit_exceeded"}
        else:
            session.awaiting = AWAIT_WARDEN

    def _advance(self, session: GameSession) -> None:
        """Run engine decisions and forced passes until the game needs the
        human or has finished."""
        while session.awaiting != FINISHED:
            v = session.position[-1]
            if session.awaiting == AWAIT_WARDEN:
                if v == 0:
                    session.awaiting = AWAIT_PRISONER
                    continue
                if self._human_controls(session, "warden"):
                    return
                decision = session.warden_engine.choose(session.position)
                if decision is None:
                    session.awaiting = AWAIT_PRISONER
                    continue
                self._apply(session, MoveChoice(Actor.WARDEN, decision))
            else:
                if self._human_controls(session, "prisoner"):
                    return
                value = session.prisoner_engine.choose_value(session.position)
                self._apply(session, MoveChoice(Actor.PRISONER, value))

    # -- documents --------------------------------------------------------------

    def state_doc(self, session: GameSession) -> dict:
        spec = session.spec
        limit = spec.limit if isinstance(spec, MultiGoal) else None
        legal = None
        if session.awaiting == AWAIT_WARDEN:
            warden_set, _ = legal_values(session.position, spec.alphabet)
            legal = {
                "actor": "warden",
                "values": sorted(warden_set),
                "may_pass": True,
            }
        elif session.awaiting == AWAIT_PRISONER:
            _, prisoner_set = legal_values(session.position, spec.alphabet)
            legal = {
                "actor": "prisoner",
                "values": sorted(prisoner_set),
                "may_pass": False,
            }
        return {
            "id": session.id,
            "spec": spec_to_doc(spec),
            "position": list(session.position),
            "rendered": format_position(session.position, spec.alphabet),
            "coins": position_to_coins(session.position) if spec.alphabet == 2 else None,
            "moves_made": session.moves_made,
            "limit": limit,
            "moves_remaining": None if limit is None else max(0, limit - session.moves_made),
            "human_role": session.human_role,
            "goal_as_start": session.goal_as_start,
            "awaiting": session.awaiting,
            "legal": legal,
            "outcome": session.outcome,
            "steps": list(session.steps),
        }

    def _hint_doc(self, session: GameSession) -> dict:
        if session.awaiting == FINISHED:
            raise ApiError(409, "finished", "the game is over")
        table = self.tables.get(session.spec)
        position = session.position
        r = table.remoteness(position)
        at_start_on_goal = (
            session.goal_as_start and session.moves_made == 0 and r == 0
        )
        if at_start_on_goal:
            r = table.goal_as_start
        if r == UNWINNABLE:
            return {"remoteness": "unwinnable", "action": None, "note": "unwinnable"}
        note = None
        limit = session.spec.limit if isinstance(session.spec, MultiGoal) else None
        if limit is not None and r > limit - session.moves_made:
            note = "limit unreachable"
        if session.awaiting == AWAIT_WARDEN:
            try:
                move = optimal_move(position, table)
            except NoWinPath:
                return {"remoteness": r, "action": None, "note": "unwinnable"}
            if move.actor is Actor.WARDEN:
                action = {"actor": "warden", "type": "write", "value": move.value}
            else:
                action = {"actor": "warden", "type": "pass"}
        else:
            value = agents._optimal_prisoner_value(table, position)
            action = {"actor": "prisoner", "type": "write", "value": value}
        return {"remoteness": r, "action": action, "note": note}


# -- HTTP layer -----------------------------------------------------------------

_ROUTE = re.compile(r"^/api/games(?:/(?P<sid>[0-9a-f]+)(?:/(?P<verb>move|hint))?)?/?$")


class PlayRequestHandler(BaseHTTPRequestHandler):
    service: PlayService
    static_dir: Path | None = None
    quiet = True

    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # noqa: D401 - silence the default chatter
        if not self.quiet:
            super().log_message(fmt, *args)

    # -- helpers -----------------------------------------------------------

    def _send_json(self, status: int, doc: dict) -> None:
        body = json.dumps(doc).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_error_doc(self, err: ApiError) -> None:
        self._send_json(err.status, {"code": err.code, "message": err.message})

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        try:
            doc = json.loads(raw)
        except json.JSONDecodeError:
            raise ApiError(400, "bad_json", "the request body is not valid JSON")
        if not isinstance(doc, dict):
            raise ApiError(400, "bad_json", "the request body must be a JSON object")
        return doc

    # -- verbs ---------------------------------------------------------------

    def do_POST(self) -> None:
        match = _ROUTE.match(self.path)
        try:
            if match is None:
                raise ApiError(404, "not_found", f"no route {self.path}")
            sid, verb = match.group("sid"), match.group("verb")
            body = self._read_body()
            if sid is None:
                self._send_json(201, self.service.create(body))
            elif verb == "move":
                self._send_json(200, self.service.move(sid, body))
            else:
                raise ApiError(404, "not_found", f"no route {self.path}")
        except ApiError as err:
            self._send_error_doc(err)

    def do_GET(self) -> None:
        match = _ROUTE.match(self.path)
        try:
            if match is None:
                self._serve_static()
                return
            sid, verb = match.group("sid"), match.group("verb")
            if sid is None:
                raise ApiError(404, "not_found", "list endpoint does not exist")
            if verb == "hint":
                self._send_json(200, self.service.hint(sid))
            elif verb is None:
                self._send_json(200, self.service.get_state(sid))
            else:
                raise ApiError(404, "not_found", f"no route {self.path}")
        except ApiError as err:
            self._send_error_doc(err)

    def do_DELETE(self) -> None:
        match = _ROUTE.match(self.path)
        try:
            if match is None or match.group("sid") is None or match.group("verb"):
                raise ApiError(404, "not_found", f"no route {self.path}")
            self._send_json(200, self.service.delete(match.group("sid")))
        except ApiError as err:
            self._send_error_doc(err)

    # -- static assets ---------------------------------------------------------

    def _serve_static(self) -> None:
        if self.static_dir is None:
            self._send_error_doc(ApiError(404, "not_found", "no static directory configured"))
            return
        path = self.path.split("?", 1)[0]
        if path in ("", "/"):
            path = "/index.html"
        candidate = (self.static_dir / path.lstrip("/")).resolve()
        root = self.static_dir.resolve()
        if not candidate.is_relative_to(root) or not candidate.is_file():
            self._send_error_doc(ApiError(404, "not_found", f"no asset {path}"))
            return
        body = candidate.read_bytes()
        ctype = mimetypes.guess_type(str(candidate))[0] or "application/octet-stream"
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)


def create_server(
    port: int = 8000,
    static_dir: str | None = None,
    idle_ttl: float = DEFAULT_IDLE_TTL,
    quiet: bool = True,
) -> ThreadingHTTPServer:
    service = PlayService(idle_ttl=idle_ttl)
    handler = type(
        "BoundPlayRequestHandler",
        (PlayRequestHandler,),
        {
            "service": service,
            "static_dir": Path(static_dir) if static_dir else None,
            "quiet": quiet,
        },
    )
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def run_server(port: int = 8000, static_dir: str | None = None) -> None:
    server = create_server(port=port, static_dir=static_dir, quiet=False)
    host, bound_port = server.server_address[:2]
    print(f"serving on http://{host}:{bound_port}/ (ctrl-c to stop)", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
