"""Mapping pinch-drag motion onto content transformations.

Scroll direction depends on the peephole metaphor in effect. A
head-referenced panel is a static peephole: the content follows the
hand, so the offset moves against the hand delta. A hand-attached panel
is a dynamic peephole: the panel itself travels with the hand over
content that stays anchored in world space, so the offset moves with
the hand delta and exactly compensates the panel motion.

Depth navigation maps hand travel linearly onto discrete layers
(layer_spacing apart, rounding at the midpoints). Map zoom halves the
visible scale per zoom_halving_distance of forward travel, keeping the
content point under the gaze pivot fixed while zooming in and pivoting
on the panel center while zooming out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .geometry import PanelPoint, Pose, Vec3
from .frames import ReferenceFrame


class PeepholeMode(Enum):
    STATIC = "Static"
    DYNAMIC = "Dynamic"


def peephole_mode_for(frame: ReferenceFrame) -> PeepholeMode:
    """Dynamic iff the panel is hand-attached."""
    if frame is ReferenceFrame.HEAD_REFERENCED:
        return PeepholeMode.STATIC
    return PeepholeMode.DYNAMIC


def _clamp(value: float, lo: float, hi: float) -> float:
    return min(hi, max(lo, value))


@dataclass(frozen=True, slots=True)
class ScrollState:
    """Content coordinate (meters) of the panel center, with bounds."""

    offset_x: float
    offset_y: float
    min_x: float
    max_x: float
    min_y: float
    max_y: float

    def clamped(self) -> "ScrollState":
        return replace(
            self,
            offset_x=_clamp(self.offset_x, self.min_x, self.max_x),
            offset_y=_clamp(self.offset_y, self.min_y, self.max_y),
        )


def scroll_update(mode: PeepholeMode, state: ScrollState,
                  hand_dx: float, hand_dy: float, gain: float = 1.0) -> ScrollState:
    sign = 1.0 if mode is PeepholeMode.DYNAMIC else -1.0
    return replace(
        state,
        offset_x=state.offset_x + sign * gain * hand_dx,
        offset_y=state.offset_y + sign * gain * hand_dy,
    ).clamped()


@dataclass(frozen=True, slots=True)
class DepthNavState:
    layer: int  # layer at drag start
    layer_count: int
    anchor_forward: float = 0.0  # hand forward position at drag start


def depth_layer_update(state: DepthNavState, hand_forward_displacement: float,
                       layer_spacing: float = 0.05) -> DepthNavState:
    """New layer from total forward travel since the drag anchor.

    Steps are taken at the midpoints between layer positions:
    layer = clamp(start + floor(displacement / spacing + 0.5)).
    """
    steps = math.floor(hand_forward_displacement / layer_spacing + 0.5)
    layer = max(0, min(state.layer_count - 1, state.layer + steps))
    return replace(state, layer=layer)


@dataclass(frozen=True, slots=True)
class MapView:
    """View over unit-square content; scale is content units per panel
    width, so 1.0 shows the full map width."""

    center_x: float
    center_y: float
    scale: float


def _clamp_view(view: MapView, aspect: float, scale_min: float, scale_max: float) -> MapView:
    scale = _clamp(view.scale, scale_min, scale_max)
    half_w = scale / 2.0
    half_h = scale * aspect / 2.0
    return MapView(
        _clamp(view.center_x, half_w, 1.0 - half_w),
        _clamp(view.center_y, half_h, 1.0 - half_h),
        scale,
    )


def content_under(view: MapView, point: PanelPoint, aspect: float) -> tuple[float, float]:
    """Content coordinate visible at a panel point."""
    return (
        view.center_x + (point.u - 0.5) * view.scale,
        view.center_y + (point.v - 0.5) * view.scale * aspect,
    )


def panel_point_of(view: MapView, cx: float, cy: float, aspect: float) -> PanelPoint:
    """Panel point where a content coordinate is shown (may leave [0,1])."""
    return PanelPoint(
        0.5 + (cx - view.center_x) / view.scale,
        0.5 + (cy - view.center_y) / (view.scale * aspect),
    )


def zoom_about(view: MapView, factor: float, pivot: PanelPoint, aspect: float,
               scale_min: float, scale_max: float) -> MapView:
    """Scale by factor keeping the content under the pivot at the pivot."""
    new_scale = _clamp(view.scale * factor, scale_min, scale_max)
    cx, cy = content_under(view, pivot, aspect)
    return _clamp_view(
        MapView(
            cx - (pivot.u - 0.5) * new_scale,
            cy - (pivot.v - 0.5) * new_scale * aspect,
            new_scale,
        ),
        aspect, scale_min, scale_max,
    )


_CENTER = PanelPoint(0.5, 0.5)


def map_pan_zoom_update(view: MapView, hand_delta: Vec3, gaze_pivot: PanelPoint | None,
                        mode: PeepholeMode, panel_width: float, panel_height: float,
                        zoom_halving_distance: float = 0.05,
                        scale_min: float = 0.01, scale_max: float = 1.0,
                        gain: float = 1.0) -> MapView:
    """One drag frame of combined pan (x, y) then zoom (z).

    Pan converts the in-plane hand delta to content units at the current
    scale with the peephole direction rule. Forward travel (z > 0) zooms
    in about the gaze pivot; backward travel zooms out about the panel
    center, where the eyes are not indicative of the intent.
    """
    aspect = panel_height / panel_width
    sign = 1.0 if mode is PeepholeMode.DYNAMIC else -1.0
    per_meter = view.scale / panel_width  # content units per hand meter, both axes
    panned = _clamp_view(
        MapView(
            view.center_x + sign * gain * hand_delta.x * per_meter,
            view.center_y + sign * gain * hand_delta.y * per_meter,
            view.scale,
        ),
        aspect, scale_min, scale_max,
    )
    if hand_delta.z == 0.0:
        return panned
    factor = 2.0 ** (-hand_delta.z / zoom_halving_distance)
    pivot = gaze_pivot if (hand_delta.z > 0.0 and gaze_pivot is not None) else _CENTER
    return zoom_about(panned, factor, pivot, aspect, scale_min, scale_max)


def head_motion_scroll_delta(prev_head: Pose, head: Pose, panel_distance: float) -> tuple[float, float]:
    """Scroll delta equivalent to hand motion, from head yaw/pitch change.

    Turning right or looking up maps to the hand moving right or up, at
    1:1 gain through the panel distance (arc length).
    """
    def angles(pose: Pose) -> tuple[float, float]:
        f = pose.forward()
        yaw = math.atan2(f.x, -f.z)
        pitch = math.asin(_clamp(f.y, -1.0, 1.0))
        return yaw, pitch

    yaw0, pitch0 = angles(prev_head)
    yaw1, pitch1 = angles(head)
    dyaw = math.remainder(yaw1 - yaw0, math.tau)
    return dyaw * panel_distance, (pitch1 - pitch0) * panel_distance
