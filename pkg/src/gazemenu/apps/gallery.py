"""Image gallery: three hierarchy levels traversed by depth drags.

Albums (layer 0) open into an image grid (layer 1) and into a single
image (layer 2). Forward hand travel descends one level per layer
spacing of travel, entering the item under gaze at the crossing;
crossings with nothing descendable under gaze are absorbed. Backward
travel ascends. Selection descends as well; the layer-2 image is
snap-exempt and cannot be selected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..config import EngineConfig
from ..fsm import DragStarted, DragUpdated, Selected, UiEvent
from ..targeting import Element, ElementKind, Rect
from . import content

LAYER_COUNT = 3


@dataclass
class GalleryState:
    layer: int = 0
    album: str | None = None
    image: str | None = None
    drag_travel: float = 0.0  # forward travel since drag start
    drag_consumed: float = 0.0  # travel already turned into layer steps

    def to_dict(self) -> dict:
        return {
            "layer": self.layer, "album": self.album, "image": self.image,
            "drag_travel": self.drag_travel, "drag_consumed": self.drag_consumed,
        }

    @staticmethod
    def from_dict(data: dict) -> "GalleryState":
        return GalleryState(
            data["layer"], data["album"], data["image"],
            data["drag_travel"], data["drag_consumed"],
        )


def _descend(state: GalleryState, hover: str | None) -> None:
    """One forward crossing; absorbed when nothing descendable is gazed."""
    if state.layer == 0:
        if hover in content.ALBUM_IDS:
            state.album = hover
            state.layer = 1
    elif state.layer == 1:
        if hover is not None and content.IMAGE_ALBUM.get(hover) == state.album:
            state.image = hover
            state.layer = 2


def _ascend(state: GalleryState) -> None:
    if state.layer == 2:
        state.image = None
        state.layer = 1
    elif state.layer == 1:
        state.album = None
        state.layer = 0


def handle(state: GalleryState, event: UiEvent, hover: str | None,
           config: EngineConfig) -> None:
    if isinstance(event, Selected):
        _select_descend(state, event.target)
    elif isinstance(event, DragStarted):
        state.drag_travel = 0.0
        state.drag_consumed = 0.0
    elif isinstance(event, DragUpdated):
        state.drag_travel += event.delta.z
        spacing = config.layer_spacing
        while True:
            steps = math.floor((state.drag_travel - state.drag_consumed) / spacing + 0.5)
            if steps >= 1:
                _descend(state, hover)
                state.drag_consumed += spacing
            elif steps <= -1:
                _ascend(state)
                state.drag_consumed -= spacing
            else:
                break


def _select_descend(state: GalleryState, target: str) -> None:
    if state.layer == 0 and target in content.ALBUM_IDS:
        state.album = target
        state.layer = 1
    elif state.layer == 1 and content.IMAGE_ALBUM.get(target) == state.album:
        state.image = target
        state.layer = 2


def view_elements(state: GalleryState) -> list[Element]:
    if state.layer == 0:
        return [
            Element(
                album,
                Rect(0.05 + i * 0.32, 0.30, 0.31 + i * 0.32, 0.62),
                ElementKind.GRID_ITEM,
                f"{content.ALBUM_LABELS[album]} (9)",
            )
            for i, album in enumerate(content.ALBUM_IDS)
        ]
    if state.layer == 1:
        elements = []
        for i, img in enumerate(content.ALBUM_IMAGES[state.album]):
            col, row = i % 3, i // 3
            umin = 0.06 + col * 0.32
            vmax = 0.84 - row * 0.28
            elements.append(Element(
                img, Rect(umin, vmax - 0.24, umin + 0.24, vmax),
                ElementKind.GRID_ITEM, img,
            ))
        return elements
    number = content.IMAGE_NUMBERS[state.image]
    return [Element(
        state.image, Rect(0.05, 0.04, 0.95, 0.86), ElementKind.REGION,
        f"{state.image} #{number}", snap_exempt=True,
    )]
