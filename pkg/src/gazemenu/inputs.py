"""Tracking frames and their classification into gesture state.

The raw sensor abstraction is a TrackingFrame per tick. This module
smooths the palm position over a sliding window and derives the two
discrete gesture channels, palm open/closed and pinch up/down, with
hysteresis so sensor noise inside the dead band cannot chatter.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .config import EngineConfig
from .geometry import IDENTITY, Pose, Ray, Vec3, ZERO


@dataclass(frozen=True, slots=True)
class HandSample:
    """Simplified one-hand state: palm pose (+Z = palm normal), extension
    of index/middle/ring/pinky in [0, 1], and the thumb-index gap in m."""

    palm: Pose
    finger_extension: tuple[float, float, float, float]
    pinch_gap: float


@dataclass(frozen=True, slots=True)
class TrackingFrame:
    """One timestamped sensor sample; invalid gaze/hand carry the
    last-known values with the flag set to False."""

    t: float
    head: Pose
    gaze: Ray
    gaze_valid: bool
    hand: HandSample
    hand_valid: bool


class PalmState(Enum):
    OPEN = "Open"
    CLOSED = "Closed"


class PinchPhase(Enum):
    UP = "Up"
    DOWN = "Down"


class GestureKind(Enum):
    CLICK = "Click"
    DRAG = "Drag"


def smooth_position(history: Sequence[tuple[float, Vec3]], window: float = 0.100) -> Vec3:
    """Mean of all samples within `window` seconds of the latest one.

    History must be non-empty with ascending timestamps; the interval is
    closed on both ends.
    """
    t_latest = history[-1][0]
    cutoff = t_latest - window
    sx = sy = sz = 0.0
    n = 0
    for t, p in reversed(history):
        if t < cutoff:
            break
        sx += p.x
        sy += p.y
        sz += p.z
        n += 1
    return Vec3(sx / n, sy / n, sz / n)


def classify_palm(sample: HandSample, previous: PalmState,
                  open_threshold: float = 0.7, close_threshold: float = 0.3) -> PalmState:
    """Open when every finger clears the open threshold, Closed when every
    finger is under the close threshold, otherwise the previous state.

    The thumb takes part in pinching and is deliberately not consulted.
    """
    ext = sample.finger_extension
    if min(ext) >= open_threshold:
        return PalmState.OPEN
    if max(ext) <= close_threshold:
        return PalmState.CLOSED
    return previous


def detect_pinch(sample: HandSample, previous: PinchPhase,
                 down_gap: float = 0.020, up_gap: float = 0.030) -> PinchPhase:
    """Down below down_gap, Up above up_gap, hysteresis in between."""
    if sample.pinch_gap < down_gap:
        return PinchPhase.DOWN
    if sample.pinch_gap > up_gap:
        return PinchPhase.UP
    return previous


def classify_pinch_gesture(duration: float, palm_displacement: float,
                           displacement_bound: float = 0.015,
                           duration_bound: float = 0.300) -> GestureKind:
    """Drag as soon as either bound is reached, Click otherwise."""
    if palm_displacement >= displacement_bound or duration >= duration_bound:
        return GestureKind.DRAG
    return GestureKind.CLICK


class PositionSmoother:
    """Sliding-window mean over a stream of (t, position) samples."""

    def __init__(self, window: float) -> None:
        self.window = window
        self._history: deque[tuple[float, Vec3]] = deque()

    def push(self, t: float, position: Vec3) -> Vec3:
        self._history.append((t, position))
        cutoff = t - self.window
        while self._history[0][0] < cutoff:
            self._history.popleft()
        return smooth_position(self._history, self.window)


@dataclass(slots=True)
class PipelineFrame:
    """Per-frame derived inputs handed to the interaction state machine."""

    t: float
    dt: float
    palm_state: PalmState
    pinch_phase: PinchPhase
    pinch_cancelled: bool  # pinch force-released because the hand dropped out
    hand_lost: bool  # hand invalid beyond the tracking-loss timeout
    palm_pose: Pose  # smoothed position, latest valid orientation
    head: Pose
    gaze: Ray
    gaze_valid: bool


class InputPipeline:
    """Stateful per-session accumulator turning TrackingFrames into
    PipelineFrames. Use from a single logical thread."""

    def __init__(self, config: EngineConfig) -> None:
        self._cfg = config
        self._smoother = PositionSmoother(config.smoothing_window)
        self._palm = PalmState.CLOSED
        self._pinch = PinchPhase.UP
        self._palm_pos = ZERO
        self._palm_orientation = IDENTITY
        self._last_valid_hand_t: float | None = None
        self._prev_t: float | None = None

    def update(self, frame: TrackingFrame) -> PipelineFrame:
        dt = 0.0 if self._prev_t is None else frame.t - self._prev_t
        self._prev_t = frame.t

        cancelled = False
        if frame.hand_valid:
            sample = frame.hand
            self._palm_pos = self._smoother.push(frame.t, sample.palm.position)
            self._palm_orientation = sample.palm.orientation
            self._palm = classify_palm(
                sample, self._palm,
                self._cfg.palm_open_threshold, self._cfg.palm_close_threshold,
            )
            self._pinch = detect_pinch(
                sample, self._pinch,
                self._cfg.pinch_down_gap, self._cfg.pinch_up_gap,
            )
            self._last_valid_hand_t = frame.t
        elif self._pinch is PinchPhase.DOWN:
            self._pinch = PinchPhase.UP
            cancelled = True

        lost = (
            self._last_valid_hand_t is None
            or frame.t - self._last_valid_hand_t > self._cfg.tracking_loss_timeout
        )
        return PipelineFrame(
            t=frame.t,
            dt=dt,
            palm_state=self._palm,
            pinch_phase=self._pinch,
            pinch_cancelled=cancelled,
            hand_lost=lost,
            palm_pose=Pose(self._palm_pos, self._palm_orientation),
            head=frame.head,
            gaze=frame.gaze,
            gaze_valid=frame.gaze_valid,
        )
