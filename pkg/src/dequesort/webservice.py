"""HTTP service for interactive DEK play and one-off sortability analysis.

JSON over plain stdlib HTTP.  Games live in an in-memory store; the full
deal is server-held and never appears in a response.  Mutations to one game
are serialized by a per-game lock; distinct games proceed independently.
With ``--state-file`` the store snapshots to disk after every mutation and
is rebuilt on start by replaying each game's event log against its deal.

Routes:
  POST /api/games                {n, seed?, deal?}        -> {id, state}
  POST /api/games/{id}/reveal    {}                       -> reveal outcome
  POST /api/games/{id}/place     {end: left|right}        -> new state
  GET  /api/games/{id}                                    -> state + history
  POST /api/analyze  {deque, output_next, input_rest}     -> {sortable}

Errors: 404 unknown game, 409 action illegal in this phase, 422 bad body.
"""

from __future__ import annotations

import json
import random
import secrets
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import dek
from .dek import AdviceUnavailable, DekInfoState, End
from .oracle import DequeState, sortable_from_state
from .perms import NotAPermutation, as_permutation

__all__ = ["GameStore", "make_server", "serve", "DEFAULT_PORT"]

DEFAULT_PORT = 8322


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


@dataclass
class GameRecord:
    """One game: the hidden deal, the visible state, and the event log."""

    id: str
    deal: tuple[int, ...]
    state: DekInfoState
    events: list[dict] = field(default_factory=list)
    drawn: int = 0
    finished: bool = False
    won: bool = False
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def visible(self) -> dict:
        s = self.state
        return {
            "n": s.n,
            "output_next": s.output_next,
            "output_height": s.output_next - 1,
            "deque": list(s.deque),
            "deck_remaining": len(s.hidden),
            "revealed": s.revealed,
            "finished": self.finished,
            "won": self.won,
        }


def _advice_json(advice: dek.Advice) -> dict:
    return {
        "strategy": advice.strategy,
        "substantive": advice.substantive,
        "winnable_left": advice.winnable_left,
        "winnable_right": advice.winnable_right,
        "recommended": advice.recommended.value,
    }


class GameStore:
    """Thread-safe collection of games with optional snapshot persistence."""

    def __init__(self, state_file: str | None = None, advice_budget: int | None = None):
        self._games: dict[str, GameRecord] = {}
        self._lock = threading.Lock()
        self._state_file = Path(state_file) if state_file else None
        self.advice_budget = (
            advice_budget if advice_budget is not None else dek.DEFAULT_ADVICE_BUDGET
        )
        if self._state_file and self._state_file.exists():
            self._load()

    # -- persistence ----------------------------------------------------

    def _load(self) -> None:
        data = json.loads(self._state_file.read_text())
        for gid, entry in data.get("games", {}).items():
            deal = tuple(entry["deal"])
            record = GameRecord(gid, deal, dek.initial_state(len(deal)))
            for event in entry["events"]:
                _apply_event(record, event)
            record.events = entry["events"]
            _refresh_finished(record)
            self._games[gid] = record

    def _snapshot(self) -> None:
        if not self._state_file:
            return
        with self._lock:
            data = {
                "games": {
                    gid: {"deal": list(rec.deal), "events": rec.events}
                    for gid, rec in self._games.items()
                }
            }
        tmp = self._state_file.with_suffix(".tmp")
        tmp.write_text(json.dumps(data))
        tmp.replace(self._state_file)

    # -- game actions ---------------------------------------------------

    def create(self, n: int, seed: int | None, deal) -> GameRecord:
        if deal is not None:
            deal = tuple(deal)
            try:
                as_permutation(deal)
            except NotAPermutation as exc:
                raise ApiError(422, str(exc)) from None
            n = len(deal)
        else:
            if n < 1:
                raise ApiError(422, "n must be at least 1")
            cards = list(range(1, n + 1))
            random.Random(seed).shuffle(cards)
            deal = tuple(cards)
        gid = secrets.token_hex(8)
        record = GameRecord(gid, deal, dek.initial_state(n))
        with self._lock:
            self._games[gid] = record
        self._snapshot()
        return record

    def get(self, gid: str) -> GameRecord:
        with self._lock:
            record = self._games.get(gid)
        if record is None:
            raise ApiError(404, f"no game {gid}")
        return record

    def reveal(self, gid: str) -> dict:
        record = self.get(gid)
        with record.lock:
            if record.finished:
                raise ApiError(409, "game is finished")
            if record.state.revealed is not None:
                raise ApiError(409, "a card is already in hand; place it first")
            value = record.deal[record.drawn]
            event: dict = {"type": "reveal", "value": value}
            record.state = dek.reveal(record.state, value)
            record.drawn += 1
            body: dict = {"revealed": value}
            if value == record.state.output_next:
                # the needed card goes straight to the output
                before = record.state.output_next
                record.state = dek.place(record.state, End.LEFT)
                event["auto_output"] = True
                event["pops"] = record.state.output_next - before
                body["auto_output"] = True
                body["substantive"] = False
            else:
                body["substantive"] = dek.substantive_by_conditions(record.state)
                try:
                    body["substantive_oracle"] = dek.substantive_oracle(
                        record.state, budget=self.advice_budget
                    )
                    s1 = dek.strategy1_advise(record.state, budget=self.advice_budget)
                    s2 = dek.strategy2_advise(record.state, budget=self.advice_budget)
                    body["advice"] = {
                        "s1": _advice_json(s1),
                        "s2": _advice_json(s2),
                    }
                    event["advice"] = body["advice"]
                except AdviceUnavailable:
                    body["advice"] = "unavailable"
            record.events.append(event)
            _refresh_finished(record)
            body["state"] = record.visible()
        self._snapshot()
        return body

    def place(self, gid: str, end_text) -> dict:
        try:
            end = End(end_text)
        except ValueError:
            raise ApiError(422, "end must be 'left' or 'right'") from None
        record = self.get(gid)
        with record.lock:
            if record.finished:
                raise ApiError(409, "game is finished")
            if record.state.revealed is None:
                raise ApiError(409, "nothing revealed; reveal a card first")
            before = record.state.output_next
            value = record.state.revealed
            record.state = dek.place(record.state, end)
            pops = record.state.output_next - before
            record.events.append(
                {"type": "place", "end": end.value, "value": value, "pops": pops}
            )
            _refresh_finished(record)
            body = {
                "state": record.visible(),
                "pops": pops,
                "finished": record.finished,
                "won": record.won,
            }
        self._snapshot()
        return body

    def describe(self, gid: str) -> dict:
        record = self.get(gid)
        with record.lock:
            return {
                "id": record.id,
                "state": record.visible(),
                "history": list(record.events),
                "finished": record.finished,
                "won": record.won,
            }


def _apply_event(record: GameRecord, event: dict) -> None:
    if event["type"] == "reveal":
        expected = record.deal[record.drawn]
        if event["value"] != expected:
            raise ValueError("event log disagrees with the deal")
        record.state = dek.reveal(record.state, expected)
        record.drawn += 1
        if event.get("auto_output"):
            record.state = dek.place(record.state, End.LEFT)
    elif event["type"] == "place":
        record.state = dek.place(record.state, End(event["end"]))
    else:
        raise ValueError(f"unknown event {event['type']!r}")


def _refresh_finished(record: GameRecord) -> None:
    state = record.state
    if state.revealed is None and not state.hidden:
        record.finished = True
        record.won = not state.deque


def _analyze(body: dict) -> dict:
    try:
        state = DequeState(
            int(body["output_next"]),
            tuple(int(v) for v in body["deque"]),
            tuple(int(v) for v in body.get("input_rest", ())),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ApiError(422, f"bad analyze body: {exc}") from None
    return {"sortable": sortable_from_state(state)}


_CONTENT_TYPES = {
    ".html": "text/html",
    ".js": "text/javascript",
    ".css": "text/css",
    ".map": "application/json",
    ".ico": "image/x-icon",
}


class _Handler(BaseHTTPRequestHandler):
    store: GameStore  # assigned by make_server
    ui_dir: Path | None = None

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send_static(self) -> None:
        root = self.ui_dir.resolve()
        relative = self.path.split("?")[0].lstrip("/") or "index.html"
        target = (root / relative).resolve()
        if not target.is_relative_to(root) or not target.is_file():
            self._send(404, {"error": f"no file {relative}"})
            return
        data = target.read_bytes()
        self.send_response(200)
        self.send_header(
            "Content-Type", _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        )
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def _send(self, status: int, payload: dict) -> None:
        data = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        try:
            body = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ApiError(422, f"bad JSON: {exc}") from None
        if not isinstance(body, dict):
            raise ApiError(422, "body must be a JSON object")
        return body

    def do_OPTIONS(self) -> None:
        # CORS preflight, for a front end served from another origin
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        try:
            parts = self.path.strip("/").split("/")
            if len(parts) == 3 and parts[:2] == ["api", "games"]:
                self._send(200, self.store.describe(parts[2]))
            elif self.ui_dir is not None and parts[0] != "api":
                self._send_static()
            else:
                self._send(404, {"error": f"no route {self.path}"})
        except ApiError as exc:
            self._send(exc.status, {"error": exc.message})

    def do_POST(self) -> None:
        try:
            parts = self.path.strip("/").split("/")
            body = self._body()
            if parts == ["api", "games"]:
                record = self.store.create(
                    int(body.get("n", 0)), body.get("seed"), body.get("deal")
                )
                self._send(200, {"id": record.id, "state": record.visible()})
            elif len(parts) == 4 and parts[:2] == ["api", "games"]:
                gid, action = parts[2], parts[3]
                if action == "reveal":
                    self._send(200, self.store.reveal(gid))
                elif action == "place":
                    self._send(200, self.store.place(gid, body.get("end")))
                else:
                    self._send(404, {"error": f"no action {action!r}"})
            elif parts == ["api", "analyze"]:
                self._send(200, _analyze(body))
            else:
                self._send(404, {"error": f"no route {self.path}"})
        except ApiError as exc:
            self._send(exc.status, {"error": exc.message})
        except Exception as exc:  # keep the server alive on surprises
            self._send(500, {"error": f"internal error: {exc}"})


def make_server(
    port: int = DEFAULT_PORT,
    state_file: str | None = None,
    host: str = "127.0.0.1",
    advice_budget: int | None = None,
    ui_dir: str | None = None,
) -> ThreadingHTTPServer:
    handler = type(
        "Handler",
        (_Handler,),
        {
            "store": GameStore(state_file, advice_budget),
            "ui_dir": Path(ui_dir) if ui_dir else None,
        },
    )
    return ThreadingHTTPServer((host, port), handler)


def serve(
    port: int = DEFAULT_PORT,
    state_file: str | None = None,
    ui_dir: str | None = None,
) -> None:
    server = make_server(port, state_file, ui_dir=ui_dir)
    print(f"dequesort service on http://{server.server_address[0]}:{server.server_address[1]}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
