"""Per-session engine: one TrackingFrame in, events and a snapshot out.

Frame order: classify inputs, resolve the panel placement, resolve hover
against the previous view model (the content the user was seeing), then
step the state machine and route its events into the applications.
Hover events precede state-machine events within a frame; a dismissal
clears the hover in the same frame.
"""

from __future__ import annotations

from dataclasses import dataclass

from .apps import GazeContext, SessionState, build_view_model, route_event
from .apps.model import AppViewModel
from .config import DEFAULT_CONFIG, EngineConfig
from .fsm import (
    DragEnded, DragStarted, DragUpdated, FsmState, Selected, Summoning, StepInputs,
    UiEvent, UiOff, step as fsm_step,
)
from .frames import ReferenceFrame, UiPlacement, resolve_placement
from .geometry import Pose, Vec3, ray_panel_intersection
from .inputs import InputPipeline, TrackingFrame
from .navigation import head_motion_scroll_delta, peephole_mode_for
from .targeting import hover_transition, resolve_hover

_ROUTED = (Selected, DragStarted, DragUpdated, DragEnded)


@dataclass
class StateSnapshot:
    """What a renderer needs after a frame."""

    t: float
    fsm: str
    summon_progress: float | None
    placement: UiPlacement
    reference_frame: ReferenceFrame
    view_model: AppViewModel
    hover: str | None


class Session:
    """One interactive session; step() from a single logical thread."""

    def __init__(self, config: EngineConfig = DEFAULT_CONFIG,
                 state: SessionState | None = None) -> None:
        self.config = config
        self.pipeline = InputPipeline(config)
        self.fsm_state: FsmState = UiOff()
        self.state = state or SessionState(
            reference_frame=ReferenceFrame(config.initial_reference_frame))
        self.view_model = build_view_model(self.state, config)
        self.hover: str | None = None
        self._prev_head: Pose | None = None

    def step(self, frame: TrackingFrame) -> tuple[list[UiEvent], StateSnapshot]:
        cfg = self.config
        pframe = self.pipeline.update(frame)
        rf = self.state.reference_frame
        placement = resolve_placement(rf, pframe.palm_pose, pframe.head, cfg)

        point = None
        if pframe.gaze_valid and not isinstance(self.fsm_state, UiOff):
            point = ray_panel_intersection(pframe.gaze, placement.pose, placement.extent)
        new_hover = resolve_hover(point, self.view_model.elements)

        events: list[UiEvent] = []
        changed = hover_transition(pframe.t, self.hover, new_hover)
        if changed is not None:
            events.append(changed)
        self.hover = new_hover

        panel = placement.pose
        inputs = StepInputs(
            t=pframe.t,
            dt=pframe.dt,
            palm_state=pframe.palm_state,
            pinch_phase=pframe.pinch_phase,
            pinch_cancelled=pframe.pinch_cancelled,
            hand_lost=pframe.hand_lost,
            hover=self.hover,
            palm_pos=pframe.palm_pose.position,
            panel_right=panel.right(),
            panel_up=panel.up(),
            head_forward=pframe.head.forward(),
        )
        self.fsm_state, fsm_events = fsm_step(self.fsm_state, inputs, cfg)

        if cfg.head_scroll_enabled and self._prev_head is not None:
            fsm_events = [self._with_head_scroll(ev, pframe.head, placement)
                          for ev in fsm_events]
        self._prev_head = pframe.head

        ctx = GazeContext(self.hover, point, peephole_mode_for(rf))
        routed = False
        for event in fsm_events:
            events.append(event)
            if isinstance(event, _ROUTED):
                route_event(self.state, event, ctx, cfg)
                routed = True
        if routed:
            self.view_model = build_view_model(self.state, cfg)
            if self.state.reference_frame is not rf:
                placement = resolve_placement(
                    self.state.reference_frame, pframe.palm_pose, pframe.head, cfg)

        if isinstance(self.fsm_state, UiOff) and self.hover is not None:
            changed = hover_transition(pframe.t, self.hover, None)
            events.append(changed)
            self.hover = None

        snapshot = StateSnapshot(
            t=pframe.t,
            fsm=type(self.fsm_state).__name__,
            summon_progress=(self.fsm_state.progress
                             if isinstance(self.fsm_state, Summoning) else None),
            placement=placement,
            reference_frame=self.state.reference_frame,
            view_model=self.view_model,
            hover=self.hover,
        )
        return events, snapshot

    def _with_head_scroll(self, event: UiEvent, head: Pose,
                          placement: UiPlacement) -> UiEvent:
        """Fold head yaw/pitch into the drag delta (optional mode)."""
        if not isinstance(event, DragUpdated):
            return event
        distance = (placement.pose.position - head.position).norm()
        dx, dy = head_motion_scroll_delta(self._prev_head, head, distance)
        d = event.delta
        return DragUpdated(event.t, Vec3(d.x + dx, d.y + dy, d.z))
