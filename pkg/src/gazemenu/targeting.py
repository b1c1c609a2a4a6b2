"""Hover resolution with closest-target snapping.

A gaze point anywhere on the panel resolves to the nearest interactive
element, measured as Euclidean distance to the element rectangle (zero
inside). Snap-exempt elements, such as a full-bleed image, are never
returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .fsm import HoverChanged
from .geometry import PanelPoint


class ElementKind(Enum):
    BUTTON = "Button"
    LIST_ITEM = "ListItem"
    GRID_ITEM = "GridItem"
    REGION = "Region"


@dataclass(frozen=True, slots=True)
class Rect:
    """Panel-space rectangle, u/v in [0, 1], min strictly below max."""

    umin: float
    vmin: float
    umax: float
    vmax: float

    def distance_to(self, point: PanelPoint) -> float:
        du = max(self.umin - point.u, 0.0, point.u - self.umax)
        dv = max(self.vmin - point.v, 0.0, point.v - self.vmax)
        return math.hypot(du, dv)

    def center(self) -> PanelPoint:
        return PanelPoint((self.umin + self.umax) / 2.0, (self.vmin + self.vmax) / 2.0)


@dataclass(frozen=True, slots=True)
class Element:
    id: str
    rect: Rect
    kind: ElementKind
    label: str = ""
    snap_exempt: bool = False


def resolve_hover(point: PanelPoint | None, elements: list[Element]) -> str | None:
    """Element under the gaze point, snapped to the nearest interactive
    rect; ties go to the earliest element. None when the gaze is off the
    panel or every element is snap-exempt."""
    if point is None:
        return None
    best_id: str | None = None
    best_d = math.inf
    for element in elements:
        if element.snap_exempt:
            continue
        d = element.rect.distance_to(point)
        if d < best_d:
            best_d = d
            best_id = element.id
            if d == 0.0:
                break
    return best_id


def hover_transition(t: float, old: str | None, new: str | None) -> HoverChanged | None:
    if old == new:
        return None
    return HoverChanged(t, old, new)
