"""Map viewer: simultaneous pan and zoom over unit-square content."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..config import EngineConfig
from ..fsm import DragUpdated, UiEvent
from ..geometry import PanelPoint
from ..navigation import MapView, PeepholeMode, map_pan_zoom_update, panel_point_of
from ..targeting import Element, ElementKind
from . import content
from .model import clipped_rect


def _default_view() -> MapView:
    return MapView(0.5, 0.5, 1.0)


@dataclass
class MapState:
    view: MapView = field(default_factory=_default_view)

    def to_dict(self) -> dict:
        return {"center": [self.view.center_x, self.view.center_y], "scale": self.view.scale}

    @staticmethod
    def from_dict(data: dict) -> "MapState":
        return MapState(MapView(data["center"][0], data["center"][1], data["scale"]))


def handle(state: MapState, event: UiEvent, gaze_pivot: PanelPoint | None,
           mode: PeepholeMode, config: EngineConfig) -> None:
    if not isinstance(event, DragUpdated):
        return
    state.view = map_pan_zoom_update(
        state.view, event.delta, gaze_pivot, mode,
        config.panel_width, config.panel_height,
        config.zoom_halving_distance, config.map_scale_min, config.map_scale_max,
        config.pan_gain,
    )


def marker_visible(view: MapView, marker_id: str, config: EngineConfig) -> bool:
    cx, cy, _ = content.MAP_MARKERS[marker_id]
    aspect = config.panel_height / config.panel_width
    return (
        abs(cx - view.center_x) <= view.scale / 2.0
        and abs(cy - view.center_y) <= view.scale * aspect / 2.0
    )


def view_elements(state: MapState, config: EngineConfig) -> list[Element]:
    aspect = config.panel_height / config.panel_width
    elements = [Element(
        "map_canvas", clipped_rect(0.0, 0.0, 1.0, 1.0), ElementKind.REGION,
        "map", snap_exempt=True,
    )]
    for marker_id, (cx, cy, radius) in content.MAP_MARKERS.items():
        center = panel_point_of(state.view, cx, cy, aspect)
        du = radius / state.view.scale
        dv = radius / (state.view.scale * aspect)
        rect = clipped_rect(center.u - du, center.v - dv, center.u + du, center.v + dv,
                            min_size=0.001)
        if rect is not None:
            elements.append(Element(
                marker_id, rect, ElementKind.REGION,
                f"Marker ({content.MARKER_NUMBERS[marker_id]})", snap_exempt=True,
            ))
    return elements
