"""Home menu: one icon per application in a 3x2 grid."""

from __future__ import annotations

from ..targeting import Element, ElementKind, Rect
from . import content

_COL_CENTERS = (0.17, 0.50, 0.83)
_ROW_CENTERS = (0.62, 0.24)
_HALF_W = 0.14
_HALF_H = 0.14


def icon_id(app_id: str) -> str:
    return f"icon_{app_id}"


def view_elements() -> list[Element]:
    elements = []
    for i, app_id in enumerate(content.APP_IDS):
        cu = _COL_CENTERS[i % 3]
        cv = _ROW_CENTERS[i // 3]
        elements.append(Element(
            icon_id(app_id),
            Rect(cu - _HALF_W, cv - _HALF_H, cu + _HALF_W, cv + _HALF_H),
            ElementKind.BUTTON,
            content.APP_LABELS[app_id],
        ))
    return elements
