"""Notification list with in-place context menus and drag shortcuts.

Selecting a notification expands it into check/postpone/delete buttons.
With shortcuts enabled, a drag that starts with gaze on a notification
applies check on a net-left drag and delete on a net-right drag once the
travel passes the shortcut threshold at drag end.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..config import EngineConfig
from ..fsm import DragEnded, DragStarted, DragUpdated, Selected, UiEvent
from ..targeting import Element, ElementKind, Rect
from . import content

_ACTIONS = ("check", "postpone", "delete")


@dataclass
class NotificationsState:
    items: list[str] = field(default_factory=lambda: list(content.NOTIFICATION_IDS))
    expanded: str | None = None
    drag_target: str | None = None
    drag_net_x: float = 0.0

    def to_dict(self) -> dict:
        return {
            "items": list(self.items),
            "expanded": self.expanded,
            "drag_target": self.drag_target,
            "drag_net_x": self.drag_net_x,
        }

    @staticmethod
    def from_dict(data: dict) -> "NotificationsState":
        return NotificationsState(
            list(data["items"]), data["expanded"], data["drag_target"], data["drag_net_x"],
        )


def _remove(state: NotificationsState, nid: str) -> None:
    if nid in state.items:
        state.items.remove(nid)
    if state.expanded == nid:
        state.expanded = None


def handle(state: NotificationsState, event: UiEvent, config: EngineConfig) -> None:
    if isinstance(event, Selected):
        target = event.target
        if target in state.items:
            state.expanded = target
            return
        base, _, action = target.rpartition("_")
        if action in _ACTIONS and base in state.items:
            if action == "postpone":
                state.items.remove(base)
                state.items.append(base)
                state.expanded = None
            else:  # check and delete both dismiss the notification
                _remove(state, base)
    elif isinstance(event, DragStarted):
        if config.notification_shortcuts and event.target in state.items:
            state.drag_target = event.target
            state.drag_net_x = 0.0
    elif isinstance(event, DragUpdated):
        if state.drag_target is not None:
            state.drag_net_x += event.delta.x
    elif isinstance(event, DragEnded):
        target, net = state.drag_target, state.drag_net_x
        state.drag_target = None
        state.drag_net_x = 0.0
        if target is None or not event.committed:
            return
        if net <= -config.notification_shortcut_threshold:
            _remove(state, target)  # check
        elif net >= config.notification_shortcut_threshold:
            _remove(state, target)  # delete


def view_elements(state: NotificationsState) -> list[Element]:
    elements = []
    for row, nid in enumerate(state.items):
        vmax = 0.88 - row * 0.105
        vmin = vmax - 0.095
        if state.expanded == nid:
            for i, action in enumerate(_ACTIONS):
                umin = 0.03 + i * 0.32
                elements.append(Element(
                    f"{nid}_{action}",
                    Rect(umin, vmin, umin + 0.30, vmax),
                    ElementKind.BUTTON,
                    action.capitalize(),
                ))
        else:
            elements.append(Element(
                nid,
                Rect(0.03, vmin, 0.97, vmax),
                ElementKind.LIST_ITEM,
                content.NOTIFICATION_LABELS[nid],
            ))
    return elements
