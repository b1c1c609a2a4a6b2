"""Core interaction state machine.

States and transitions:

  UiOff        palm opens -> Summoning (UiSummoned)
  Summoning    progress advances by dt / summon_duration, Idle at 1;
               pinch down is accepted early and jumps to PinchPending
  Idle         pinch down -> PinchPending, capturing the hover target
  PinchPending release inside the click bounds -> Selected(captured);
               displacement/duration bound reached -> Dragging (DragStarted)
  Dragging     emits DragUpdated each frame; release -> DragEnded(committed)

A palm-close frame reaches UiOff from any state in one step, committing
an active drag first. Hand tracking lost beyond the timeout forces the
same dismissal. Selection carries the target captured at pinch-down even
if gaze moved before release.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .config import EngineConfig
from .geometry import Vec3
from .inputs import GestureKind, PalmState, PinchPhase, classify_pinch_gesture


# --- events -----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class UiSummoned:
    t: float


@dataclass(frozen=True, slots=True)
class UiDismissed:
    t: float


@dataclass(frozen=True, slots=True)
class HoverChanged:
    t: float
    old: str | None
    new: str | None


@dataclass(frozen=True, slots=True)
class Selected:
    t: float
    target: str


@dataclass(frozen=True, slots=True)
class DragStarted:
    t: float
    target: str | None  # hover target captured at pinch-down


@dataclass(frozen=True, slots=True)
class DragUpdated:
    t: float
    delta: Vec3  # x along panel right, y along panel up, z along head forward


@dataclass(frozen=True, slots=True)
class DragEnded:
    t: float
    committed: bool  # False only when the pinch was lost mid-drag


UiEvent = Union[UiSummoned, UiDismissed, HoverChanged, Selected, DragStarted, DragUpdated, DragEnded]


# --- states -----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class UiOff:
    pass


@dataclass(frozen=True, slots=True)
class Summoning:
    progress: float  # [0, 1]


@dataclass(frozen=True, slots=True)
class Idle:
    pass


@dataclass(frozen=True, slots=True)
class PinchPending:
    t_down: float
    pos_down: Vec3
    target: str | None


@dataclass(frozen=True, slots=True)
class Dragging:
    target: str | None
    last_pos: Vec3


FsmState = Union[UiOff, Summoning, Idle, PinchPending, Dragging]


@dataclass(frozen=True, slots=True)
class StepInputs:
    """Frame-derived inputs; the three axes localize drag deltas."""

    t: float
    dt: float
    palm_state: PalmState
    pinch_phase: PinchPhase
    pinch_cancelled: bool
    hand_lost: bool
    hover: str | None
    palm_pos: Vec3
    panel_right: Vec3
    panel_up: Vec3
    head_forward: Vec3


def _drag_delta(inputs: StepInputs, displacement: Vec3) -> Vec3:
    return Vec3(
        displacement.dot(inputs.panel_right),
        displacement.dot(inputs.panel_up),
        displacement.dot(inputs.head_forward),
    )


def step(state: FsmState, inputs: StepInputs, config: EngineConfig) -> tuple[FsmState, list[UiEvent]]:
    """Advance the machine by one frame. Pure: same inputs, same outputs."""
    events: list[UiEvent] = []

    if inputs.palm_state is PalmState.CLOSED or inputs.hand_lost:
        if isinstance(state, UiOff):
            return state, events
        if isinstance(state, Dragging):
            events.append(DragEnded(inputs.t, committed=True))
        events.append(UiDismissed(inputs.t))
        return UiOff(), events

    if isinstance(state, UiOff):
        # palm is open here (closed handled above)
        return Summoning(0.0), [UiSummoned(inputs.t)]

    if isinstance(state, (Summoning, Idle)):
        if inputs.pinch_phase is PinchPhase.DOWN and not inputs.pinch_cancelled:
            return PinchPending(inputs.t, inputs.palm_pos, inputs.hover), events
        if isinstance(state, Summoning):
            progress = state.progress + inputs.dt / config.summon_duration
            return (Idle() if progress >= 1.0 else Summoning(progress)), events
        return state, events

    if isinstance(state, PinchPending):
        if inputs.pinch_cancelled:
            return Idle(), events
        duration = inputs.t - state.t_down
        travel = inputs.palm_pos - state.pos_down
        kind = classify_pinch_gesture(
            duration, travel.norm(),
            config.drag_displacement, config.drag_duration,
        )
        if kind is GestureKind.DRAG:
            events.append(DragStarted(inputs.t, state.target))
            events.append(DragUpdated(inputs.t, _drag_delta(inputs, travel)))
            if inputs.pinch_phase is PinchPhase.UP:
                events.append(DragEnded(inputs.t, committed=True))
                return Idle(), events
            return Dragging(state.target, inputs.palm_pos), events
        if inputs.pinch_phase is PinchPhase.UP:
            if state.target is not None:
                events.append(Selected(inputs.t, state.target))
            return Idle(), events
        return state, events

    # Dragging
    travel = inputs.palm_pos - state.last_pos
    events.append(DragUpdated(inputs.t, _drag_delta(inputs, travel)))
    if inputs.pinch_cancelled:
        events.append(DragEnded(inputs.t, committed=False))
        return Idle(), events
    if inputs.pinch_phase is PinchPhase.UP:
        events.append(DragEnded(inputs.t, committed=True))
        return Idle(), events
    return Dragging(state.target, inputs.palm_pos), events
