"""Downloads and Favorites: 2D file grids with a detail view.

Downloads holds enough files to overflow horizontally and scrolls on X.
Favorites is the same surface with scrolling disabled and a properties
detail view.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..config import EngineConfig
from ..fsm import DragUpdated, Selected, UiEvent
from ..navigation import PeepholeMode, ScrollState, scroll_update
from ..targeting import Element, ElementKind, Rect
from . import content
from .model import clipped_rect

CELL_PITCH_X = 0.068  # m between grid columns in content space
CELL_PITCH_Y = 0.062
CELL_W = 0.060
CELL_H = 0.054
GRID_V_CENTER = 0.42  # panel v of the content y = 0 line

DOWNLOADS_COLS = 10
DOWNLOADS_SCROLL_MIN = 0.14
DOWNLOADS_SCROLL_MAX = 0.54
BACK_DOWNLOADS = "dl_back"
BACK_FAVORITES = "fav_back"


@dataclass
class FolderState:
    viewing: str | None = None
    scroll_x: float = DOWNLOADS_SCROLL_MIN

    def to_dict(self) -> dict:
        return {"viewing": self.viewing, "scroll_x": self.scroll_x}

    @staticmethod
    def from_dict(data: dict) -> "FolderState":
        return FolderState(data["viewing"], data["scroll_x"])


def _scroll_state(state: FolderState) -> ScrollState:
    return ScrollState(
        state.scroll_x, 0.0,
        DOWNLOADS_SCROLL_MIN, DOWNLOADS_SCROLL_MAX, 0.0, 0.0,
    )


def handle_downloads(state: FolderState, event: UiEvent, mode: PeepholeMode,
                     config: EngineConfig) -> None:
    if isinstance(event, Selected):
        if event.target in content.DOWNLOAD_IDS:
            state.viewing = event.target
        elif event.target == BACK_DOWNLOADS:
            state.viewing = None
    elif isinstance(event, DragUpdated) and state.viewing is None:
        updated = scroll_update(mode, _scroll_state(state), event.delta.x, 0.0,
                                config.pan_gain)
        state.scroll_x = updated.offset_x


def handle_favorites(state: FolderState, event: UiEvent) -> None:
    if not isinstance(event, Selected):
        return
    if event.target in content.FAVORITE_IDS:
        state.viewing = event.target
    elif event.target == BACK_FAVORITES:
        state.viewing = None


def _grid_elements(ids: tuple[str, ...], labels: dict[str, str], cols: int,
                   offset_x: float, panel_w: float, panel_h: float) -> list[Element]:
    n_rows = (len(ids) + cols - 1) // cols
    elements = []
    for i, fid in enumerate(ids):
        col, row = i % cols, i // cols
        # content coordinates of the cell center, rows top to bottom
        x = col * CELL_PITCH_X + CELL_W / 2.0
        y = (n_rows - 1) / 2.0 * CELL_PITCH_Y - row * CELL_PITCH_Y
        cu = 0.5 + (x - offset_x) / panel_w
        cv = GRID_V_CENTER + y / panel_h
        rect = clipped_rect(
            cu - CELL_W / 2.0 / panel_w, cv - CELL_H / 2.0 / panel_h,
            cu + CELL_W / 2.0 / panel_w, cv + CELL_H / 2.0 / panel_h,
        )
        if rect is not None:
            elements.append(Element(fid, rect, ElementKind.GRID_ITEM, labels[fid]))
    return elements


def _detail_elements(back_id: str, title: str, properties: list[str]) -> list[Element]:
    elements = [
        Element(back_id, Rect(0.03, 0.74, 0.17, 0.84), ElementKind.BUTTON, "Back"),
        Element("detail_title", Rect(0.05, 0.55, 0.95, 0.70), ElementKind.REGION,
                title, snap_exempt=True),
    ]
    for i, prop in enumerate(properties):
        vmax = 0.48 - i * 0.13
        elements.append(Element(
            f"detail_prop_{i}", Rect(0.08, vmax - 0.11, 0.92, vmax),
            ElementKind.REGION, prop, snap_exempt=True,
        ))
    return elements


def view_downloads(state: FolderState, config: EngineConfig) -> tuple[list[Element], ScrollState]:
    scroll = _scroll_state(state)
    if state.viewing is not None:
        return _detail_elements(BACK_DOWNLOADS, content.DOWNLOAD_NAMES[state.viewing], []), scroll
    return _grid_elements(
        content.DOWNLOAD_IDS, content.DOWNLOAD_NAMES, DOWNLOADS_COLS,
        state.scroll_x, config.panel_width, config.panel_height,
    ), scroll


def view_favorites(state: FolderState, config: EngineConfig) -> list[Element]:
    if state.viewing is not None:
        name, size, kind, modified = content.FAVORITES[state.viewing]
        return _detail_elements(
            BACK_FAVORITES, name,
            [f"Size: {size}", f"Type: {kind}", f"Modified: {modified}"],
        )
    labels = {fid: content.FAVORITES[fid][0] for fid in content.FAVORITE_IDS}
    # 4x2 grid, centered: content width 4 * pitch, no scrolling
    center = (4 - 1) / 2.0 * CELL_PITCH_X + CELL_W / 2.0
    return _grid_elements(
        content.FAVORITE_IDS, labels, 4, center, config.panel_width, config.panel_height,
    )
