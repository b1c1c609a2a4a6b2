"""Application session: routing of UI events and view-model building.

Top-bar selections are handled globally. Everything else goes to the
active application, with drag deltas masked to the axes that app
actually uses so that, for instance, a depth drag in Downloads is a
no-op. Per-app state survives dismiss/summon cycles; the session only
ever resets when a new one is created.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..config import DEFAULT_CONFIG, EngineConfig
from ..fsm import DragEnded, DragStarted, DragUpdated, Selected, UiEvent
from ..frames import ReferenceFrame, toggle_reference_frame
from ..geometry import PanelPoint, Vec3
from ..navigation import DepthNavState, PeepholeMode
from . import content, folders, gallery, home, mapview, music, notifications
from .model import AppViewModel, FRAME_TOGGLE, HOME_BUTTON, top_bar

log = logging.getLogger(__name__)

# pinch-drag axes each application consumes
DRAG_AXES = {
    "home": "",
    "music": "",
    "notifications": "x",
    "downloads": "x",
    "favorites": "",
    "gallery": "z",
    "map": "xyz",
}


@dataclass
class GazeContext:
    """Gaze-derived inputs an app may need while handling an event."""

    hover: str | None
    panel_point: PanelPoint | None
    peephole: PeepholeMode


@dataclass
class SessionState:
    reference_frame: ReferenceFrame = ReferenceFrame.ON_HAND
    active_app: str = "home"
    music: music.MusicState = field(default_factory=music.MusicState)
    notifications: notifications.NotificationsState = field(
        default_factory=notifications.NotificationsState)
    downloads: folders.FolderState = field(default_factory=folders.FolderState)
    favorites: folders.FolderState = field(default_factory=folders.FolderState)
    gallery: gallery.GalleryState = field(default_factory=gallery.GalleryState)
    map: mapview.MapState = field(default_factory=mapview.MapState)

    def to_dict(self) -> dict:
        return {
            "reference_frame": self.reference_frame.value,
            "active_app": self.active_app,
            "music": self.music.to_dict(),
            "notifications": self.notifications.to_dict(),
            "downloads": self.downloads.to_dict(),
            "favorites": self.favorites.to_dict(),
            "gallery": self.gallery.to_dict(),
            "map": self.map.to_dict(),
        }

    @staticmethod
    def from_dict(data: dict) -> "SessionState":
        return SessionState(
            reference_frame=ReferenceFrame(data["reference_frame"]),
            active_app=data["active_app"],
            music=music.MusicState.from_dict(data["music"]),
            notifications=notifications.NotificationsState.from_dict(data["notifications"]),
            downloads=folders.FolderState.from_dict(data["downloads"]),
            favorites=folders.FolderState.from_dict(data["favorites"]),
            gallery=gallery.GalleryState.from_dict(data["gallery"]),
            map=mapview.MapState.from_dict(data["map"]),
        )


def _mask_delta(delta: Vec3, axes: str) -> Vec3:
    return Vec3(
        delta.x if "x" in axes else 0.0,
        delta.y if "y" in axes else 0.0,
        delta.z if "z" in axes else 0.0,
    )


def route_event(state: SessionState, event: UiEvent, ctx: GazeContext,
                config: EngineConfig = DEFAULT_CONFIG) -> None:
    """Apply one event to the session state (mutates in place)."""
    if isinstance(event, Selected):
        if event.target == HOME_BUTTON:
            state.active_app = "home"
            return
        if event.target == FRAME_TOGGLE:
            state.reference_frame = toggle_reference_frame(state.reference_frame)
            return
        if state.active_app == "home":
            for app_id in content.APP_IDS:
                if event.target == home.icon_id(app_id):
                    state.active_app = app_id
                    return
            log.info("selection of unknown element %r ignored", event.target)
            return

    app = state.active_app
    if isinstance(event, (DragStarted, DragUpdated, DragEnded)):
        axes = DRAG_AXES[app]
        if not axes:
            return
        if isinstance(event, DragUpdated):
            event = DragUpdated(event.t, _mask_delta(event.delta, axes))

    if app == "music":
        music.handle(state.music, event)
    elif app == "notifications":
        notifications.handle(state.notifications, event, config)
    elif app == "downloads":
        folders.handle_downloads(state.downloads, event, ctx.peephole, config)
    elif app == "favorites":
        folders.handle_favorites(state.favorites, event)
    elif app == "gallery":
        gallery.handle(state.gallery, event, ctx.hover, config)
    elif app == "map":
        mapview.handle(state.map, event, ctx.panel_point, ctx.peephole, config)
    elif isinstance(event, Selected):
        log.info("selection of unknown element %r ignored", event.target)


def build_view_model(state: SessionState, config: EngineConfig = DEFAULT_CONFIG) -> AppViewModel:
    vm = AppViewModel(app_id=state.active_app, elements=top_bar())
    app = state.active_app
    if app == "home":
        vm.elements += home.view_elements()
    elif app == "music":
        vm.elements += music.view_elements(state.music)
    elif app == "notifications":
        vm.elements += notifications.view_elements(state.notifications)
    elif app == "downloads":
        elements, scroll = folders.view_downloads(state.downloads, config)
        vm.elements += elements
        vm.scroll = scroll
    elif app == "favorites":
        vm.elements += folders.view_favorites(state.favorites, config)
    elif app == "gallery":
        vm.elements += gallery.view_elements(state.gallery)
        vm.depth = DepthNavState(state.gallery.layer, gallery.LAYER_COUNT)
    elif app == "map":
        vm.elements += mapview.view_elements(state.map, config)
        vm.map = state.map.view
    return vm
