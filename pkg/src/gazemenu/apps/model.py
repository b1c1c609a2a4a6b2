"""Shared view-model types and panel layout helpers.

Every application screen is described as a flat element list in panel
coordinates. The top bar (home and reference-frame toggle) is present in
every view model, first in the element list so it wins hover ties.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..navigation import DepthNavState, MapView, ScrollState
from ..targeting import Element, ElementKind, Rect

HOME_BUTTON = "home_button"
FRAME_TOGGLE = "frame_toggle"
TOP_BAR_IDS = (HOME_BUTTON, FRAME_TOGGLE)

# main content area lives below the top bar
MAIN_VMAX = 0.88


def top_bar() -> list[Element]:
    return [
        Element(HOME_BUTTON, Rect(0.02, 0.90, 0.14, 0.98), ElementKind.BUTTON, "Home"),
        Element(FRAME_TOGGLE, Rect(0.16, 0.90, 0.28, 0.98), ElementKind.BUTTON, "Frame"),
    ]


def clipped_rect(umin: float, vmin: float, umax: float, vmax: float,
                 min_size: float = 0.01) -> Rect | None:
    """Clip to the visible main area; None when nothing useful remains."""
    umin, umax = max(umin, 0.0), min(umax, 1.0)
    vmin, vmax = max(vmin, 0.0), min(vmax, MAIN_VMAX)
    if umax - umin < min_size or vmax - vmin < min_size:
        return None
    return Rect(umin, vmin, umax, vmax)


@dataclass
class AppViewModel:
    app_id: str
    elements: list[Element] = field(default_factory=list)
    top_bar_ids: tuple[str, str] = TOP_BAR_IDS
    scroll: ScrollState | None = None
    depth: DepthNavState | None = None
    map: MapView | None = None

    def element_ids(self) -> list[str]:
        return [e.id for e in self.elements]

    def find(self, element_id: str) -> Element | None:
        for e in self.elements:
            if e.id == element_id:
                return e
        return None
