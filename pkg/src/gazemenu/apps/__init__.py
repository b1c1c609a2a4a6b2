from .model import AppViewModel, FRAME_TOGGLE, HOME_BUTTON, TOP_BAR_IDS
from .session import DRAG_AXES, GazeContext, SessionState, build_view_model, route_event

__all__ = [
    "AppViewModel",
    "DRAG_AXES",
    "FRAME_TOGGLE",
    "GazeContext",
    "HOME_BUTTON",
    "SessionState",
    "TOP_BAR_IDS",
    "build_view_model",
    "route_event",
]
