"""Session service: the engine behind a FastAPI app.

The live protocol runs over the /session WebSocket, one JSON object per
text message:

  client -> server   {"type":"hello","version":1,"config":{...}}
                     {"type":"frame", ...tracking frame fields...}
  server -> client   {"type":"event", ...}   zero or more per frame
                     {"type":"state", ...}   exactly one per frame

The server is strictly request-driven and never sends unsolicited
messages; a protocol violation gets {"type":"error",...} and the
connection is closed. Each connection owns an independent session.

REST endpoints wrap the offline harness: POST /scenario synthesizes a
trace, POST /replay runs one and returns the event log and metrics.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field

from . import __version__
from .config import DEFAULT_CONFIG, config_from_dict
from .engine import Session
from .metrics import Metrics
from .replay import replay, score_replay
from .scenarios import SCENARIO_NAMES, generate_scenario, task_for
from .serialize import dumps
from .trace import TraceParseError, _parse_frame, parse_trace, serialize_trace
from .wire import event_to_obj, snapshot_to_obj

app = FastAPI(title="gazemenu", version=__version__)


class HealthResponse(BaseModel):
    status: str
    version: str


class ScenarioRequest(BaseModel):
    name: str
    seed: int = 0
    config: dict = Field(default_factory=dict)


class ReplayRequest(BaseModel):
    trace: str
    config: dict = Field(default_factory=dict)
    expect_goal: str | None = None


class ReplayResponse(BaseModel):
    events: list[dict]
    metrics: dict
    final_app: str


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.get("/scenarios")
def scenarios() -> list[str]:
    return list(SCENARIO_NAMES)


@app.post("/scenario", response_class=PlainTextResponse)
def scenario(request: ScenarioRequest) -> str:
    config = config_from_dict(request.config) if request.config else DEFAULT_CONFIG
    trace = generate_scenario(request.name, request.seed, config)
    return serialize_trace(trace)


@app.post("/replay", response_model=ReplayResponse)
def replay_endpoint(request: ReplayRequest) -> ReplayResponse:
    config = config_from_dict(request.config) if request.config else DEFAULT_CONFIG
    trace = parse_trace(request.trace)
    task = task_for(request.expect_goal, trace.header.seed) if request.expect_goal else None
    result = replay(trace, config, task)
    metrics: Metrics = score_replay(result, task)
    return ReplayResponse(
        events=[event_to_obj(e) for e in result.events],
        metrics=metrics.to_dict(),
        final_app=result.final_state.active_app,
    )


async def _fail(ws: WebSocket, message: str) -> None:
    await ws.send_text(dumps({"type": "error", "message": message}))
    await ws.close()


@app.websocket("/session")
async def session_socket(ws: WebSocket) -> None:
    await ws.accept()
    session: Session | None = None
    try:
        while True:
            raw = await ws.receive_text()
            try:
                msg = json.loads(raw)
            except json.JSONDecodeError:
                await _fail(ws, "message is not valid JSON")
                return
            if not isinstance(msg, dict) or "type" not in msg:
                await _fail(ws, "message must be an object with a type")
                return

            if msg["type"] == "hello":
                if session is not None:
                    await _fail(ws, "duplicate hello")
                    return
                if msg.get("version") != 1:
                    await _fail(ws, "unsupported protocol version")
                    return
                try:
                    config = config_from_dict(msg.get("config") or {})
                except (TypeError, ValueError) as exc:
                    await _fail(ws, f"bad config: {exc}")
                    return
                session = Session(config)
                _, snapshot = _initial_snapshot(session)
                await ws.send_text(dumps(snapshot))
            elif msg["type"] == "frame":
                if session is None:
                    await _fail(ws, "frame before hello")
                    return
                try:
                    frame = _parse_frame(msg, 0)
                except (TraceParseError, KeyError, TypeError, ValueError) as exc:
                    await _fail(ws, f"bad frame: {exc}")
                    return
                events, snapshot = session.step(frame)
                for event in events:
                    await ws.send_text(dumps({"type": "event", **event_to_obj(event)}))
                await ws.send_text(dumps(snapshot_to_obj(snapshot)))
            else:
                await _fail(ws, f"unknown message type {msg['type']!r}")
                return
    except WebSocketDisconnect:
        return


def _initial_snapshot(session: Session) -> tuple[None, dict]:
    """State message before any frame: UI off, defaults everywhere."""
    from .engine import StateSnapshot
    from .frames import resolve_placement
    from .geometry import IDENTITY, Pose, Vec3

    rest = Pose(Vec3(0.0, 0.0, 0.0), IDENTITY)
    placement = resolve_placement(
        session.state.reference_frame, rest, rest, session.config)
    snapshot = StateSnapshot(
        t=0.0,
        fsm="UiOff",
        summon_progress=None,
        placement=placement,
        reference_frame=session.state.reference_frame,
        view_model=session.view_model,
        hover=None,
    )
    return None, snapshot_to_obj(snapshot)
