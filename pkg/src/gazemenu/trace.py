"""Input trace files: one JSON object per line, header first.

Header: {"version":1,"frame_rate":90,"seed":N,"config":"<digest>"}
Frame:  {"t":..,"head":{"p":..,"q":..},"gaze":{"o":..,"d":..,"valid":..},
         "hand":{"p":..,"q":..,"ext":[..4..],"gap":..,"valid":..}}

All floats carry 9 significant digits; traces produced by the scenario
generator quantize at creation, so parse(serialize(trace)) round-trips
exactly and replay output is byte-stable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .geometry import Orientation, Pose, Ray, Vec3
from .inputs import HandSample, TrackingFrame
from .serialize import dumps
from .wire import pose_to_obj, vec_to_list


class TraceParseError(ValueError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class TraceHeader:
    frame_rate: float
    seed: int
    config_digest: str
    version: int = 1


@dataclass
class Trace:
    header: TraceHeader
    frames: list[TrackingFrame]

    def duration(self) -> float:
        return self.frames[-1].t if self.frames else 0.0


def frame_to_obj(frame: TrackingFrame) -> dict:
    return {
        "t": frame.t,
        "head": pose_to_obj(frame.head),
        "gaze": {
            "o": vec_to_list(frame.gaze.origin),
            "d": vec_to_list(frame.gaze.direction),
            "valid": frame.gaze_valid,
        },
        "hand": {
            "p": vec_to_list(frame.hand.palm.position),
            "q": [frame.hand.palm.orientation.w, frame.hand.palm.orientation.x,
                  frame.hand.palm.orientation.y, frame.hand.palm.orientation.z],
            "ext": list(frame.hand.finger_extension),
            "gap": frame.hand.pinch_gap,
            "valid": frame.hand_valid,
        },
    }


def serialize_trace(trace: Trace) -> str:
    lines = [dumps({
        "version": trace.header.version,
        "frame_rate": trace.header.frame_rate,
        "seed": trace.header.seed,
        "config": trace.header.config_digest,
    })]
    lines += [dumps(frame_to_obj(f)) for f in trace.frames]
    return "\n".join(lines) + "\n"


def _vec(obj, line: int, what: str) -> Vec3:
    if not (isinstance(obj, list) and len(obj) == 3):
        raise TraceParseError(line, f"{what} must be a 3-element array")
    v = Vec3(float(obj[0]), float(obj[1]), float(obj[2]))
    if not v.is_finite():
        raise TraceParseError(line, f"{what} has non-finite components")
    return v


# Unit checks validate but never renormalize: the parsed floats must be
# exactly the ones the generator fed its own session.

def _quat(obj, line: int, what: str) -> Orientation:
    if not (isinstance(obj, list) and len(obj) == 4):
        raise TraceParseError(line, f"{what} must be a 4-element array")
    q = Orientation(float(obj[0]), float(obj[1]), float(obj[2]), float(obj[3]))
    if not all(math.isfinite(c) for c in (q.w, q.x, q.y, q.z)):
        raise TraceParseError(line, f"{what} has non-finite components")
    if abs(q.norm() - 1.0) > 1e-6:
        raise TraceParseError(line, f"{what} is not unit length")
    return q


def _unit(obj, line: int, what: str) -> Vec3:
    v = _vec(obj, line, what)
    if abs(v.norm() - 1.0) > 1e-6:
        raise TraceParseError(line, f"{what} is not unit length")
    return v


def parse_trace(text: str) -> Trace:
    lines = text.splitlines()
    if not lines:
        raise TraceParseError(1, "empty trace: missing header")
    try:
        head_obj = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise TraceParseError(1, f"invalid JSON: {exc.msg}") from exc
    if not isinstance(head_obj, dict) or head_obj.get("version") != 1:
        raise TraceParseError(1, "header must be an object with version 1")
    try:
        header = TraceHeader(
            frame_rate=float(head_obj["frame_rate"]),
            seed=int(head_obj["seed"]),
            config_digest=str(head_obj["config"]),
        )
    except KeyError as exc:
        raise TraceParseError(1, f"header missing key {exc.args[0]!r}") from exc

    frames: list[TrackingFrame] = []
    prev_t = -math.inf
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise TraceParseError(i, f"invalid JSON: {exc.msg}") from exc
        try:
            frame = _parse_frame(obj, i)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, TraceParseError):
                raise
            raise TraceParseError(i, f"malformed frame: {exc}") from exc
        if frame.t <= prev_t:
            raise TraceParseError(i, "timestamps must be strictly increasing")
        prev_t = frame.t
        frames.append(frame)
    return Trace(header, frames)


def _parse_frame(obj: dict, line: int) -> TrackingFrame:
    t = float(obj["t"])
    if not math.isfinite(t):
        raise TraceParseError(line, "t must be finite")
    head = obj["head"]
    gaze = obj["gaze"]
    hand = obj["hand"]
    ext = hand["ext"]
    if not (isinstance(ext, list) and len(ext) == 4):
        raise TraceParseError(line, "hand.ext must be a 4-element array")
    ext_t = tuple(float(e) for e in ext)
    if not all(0.0 <= e <= 1.0 for e in ext_t):
        raise TraceParseError(line, "hand.ext values must lie in [0, 1]")
    gap = float(hand["gap"])
    if not (math.isfinite(gap) and gap >= 0.0):
        raise TraceParseError(line, "hand.gap must be finite and non-negative")
    return TrackingFrame(
        t=t,
        head=Pose(_vec(head["p"], line, "head.p"), _quat(head["q"], line, "head.q")),
        gaze=Ray(_vec(gaze["o"], line, "gaze.o"), _unit(gaze["d"], line, "gaze.d")),
        gaze_valid=bool(gaze["valid"]),
        hand=HandSample(
            Pose(_vec(hand["p"], line, "hand.p"), _quat(hand["q"], line, "hand.q")),
            ext_t,
            gap,
        ),
        hand_valid=bool(hand["valid"]),
    )


def write_trace(trace: Trace, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_trace(trace))


def read_trace(path: str) -> Trace:
    with open(path, encoding="utf-8") as fh:
        return parse_trace(fh.read())
