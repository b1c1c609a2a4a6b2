"""Menu placement under the three UI reference frames.

OnHand fixes the panel just above the palm and inherits the palm
orientation. AboveHand floats it 30 cm above and 15 cm horizontally away
from the head, billboarded at the user. HeadReferenced keeps it 55 cm
along the head's forward vector, also billboarded, recomputed every
frame (fully head-locked).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .config import EngineConfig
from .geometry import PanelExtent, Pose, UP, billboard_toward, horizontal_away_direction


class ReferenceFrame(Enum):
    ON_HAND = "OnHand"
    ABOVE_HAND = "AboveHand"
    HEAD_REFERENCED = "HeadReferenced"


_TOGGLE_ORDER = [ReferenceFrame.ON_HAND, ReferenceFrame.ABOVE_HAND, ReferenceFrame.HEAD_REFERENCED]


@dataclass(frozen=True, slots=True)
class UiPlacement:
    pose: Pose
    extent: PanelExtent


def resolve_ui_pose(frame: ReferenceFrame, smoothed_palm: Pose, head: Pose,
                    config: EngineConfig) -> Pose:
    """Panel pose for the current frame; palm pose must already be smoothed."""
    if frame is ReferenceFrame.ON_HAND:
        position = smoothed_palm.position + smoothed_palm.normal() * config.on_hand_offset
        return Pose(position, smoothed_palm.orientation)
    if frame is ReferenceFrame.ABOVE_HAND:
        away = horizontal_away_direction(head.position, smoothed_palm.position, head.forward())
        position = (
            smoothed_palm.position
            + UP * config.above_hand_rise
            + away * config.above_hand_away
        )
        return Pose(position, billboard_toward(position, head.position))
    position = head.position + head.forward() * config.head_distance
    return Pose(position, billboard_toward(position, head.position))


def resolve_placement(frame: ReferenceFrame, smoothed_palm: Pose, head: Pose,
                      config: EngineConfig) -> UiPlacement:
    return UiPlacement(
        resolve_ui_pose(frame, smoothed_palm, head, config),
        PanelExtent(config.panel_width, config.panel_height),
    )


def toggle_reference_frame(current: ReferenceFrame) -> ReferenceFrame:
    """Cycle OnHand -> AboveHand -> HeadReferenced -> OnHand."""
    return _TOGGLE_ORDER[(_TOGGLE_ORDER.index(current) + 1) % 3]
