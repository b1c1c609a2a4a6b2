"""Music player: transport controls and a track window, selection only."""

from __future__ import annotations

from dataclasses import dataclass

from ..fsm import Selected, UiEvent
from ..targeting import Element, ElementKind, Rect
from . import content

PLAY_PAUSE = "play_pause"
NEXT = "next_track"


@dataclass
class MusicState:
    now_playing: int | None = None  # index into the track list
    playing: bool = False

    def to_dict(self) -> dict:
        return {"now_playing": self.now_playing, "playing": self.playing}

    @staticmethod
    def from_dict(data: dict) -> "MusicState":
        return MusicState(data["now_playing"], data["playing"])


def handle(state: MusicState, event: UiEvent) -> None:
    if not isinstance(event, Selected):
        return
    target = event.target
    if target in content.TRACK_IDS:
        state.now_playing = content.TRACK_IDS.index(target)
        state.playing = True
    elif target == PLAY_PAUSE:
        if state.now_playing is not None:
            state.playing = not state.playing
    elif target == NEXT:
        if not content.TRACK_IDS:
            return
        if state.now_playing is None:
            state.now_playing = 0
        else:
            state.now_playing = (state.now_playing + 1) % len(content.TRACK_IDS)


def view_elements(state: MusicState) -> list[Element]:
    if state.now_playing is None:
        status = "No track"
    else:
        title = content.TRACK_TITLES[state.now_playing]
        status = f"{'Playing' if state.playing else 'Paused'}: {title}"
    elements = [
        Element(PLAY_PAUSE, Rect(0.04, 0.70, 0.26, 0.84), ElementKind.BUTTON,
                "Pause" if state.playing else "Play"),
        Element(NEXT, Rect(0.30, 0.70, 0.52, 0.84), ElementKind.BUTTON, "Next"),
        Element("now_playing_label", Rect(0.56, 0.70, 0.96, 0.84), ElementKind.REGION,
                status, snap_exempt=True),
    ]
    # track window: 3 columns x 4 rows below the controls
    for i, track_id in enumerate(content.TRACK_IDS):
        col, row = i % 3, i // 3
        umin = 0.04 + col * 0.32
        vmax = 0.66 - row * 0.16
        elements.append(Element(
            track_id,
            Rect(umin, vmax - 0.14, umin + 0.28, vmax),
            ElementKind.LIST_ITEM,
            content.TRACK_TITLES[i],
        ))
    return elements
