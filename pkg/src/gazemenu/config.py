"""Engine configuration.

Every tunable constant of the interaction model lives here with its
default. A config is hashed into trace headers so a replay can detect
that it runs under different settings than the recording.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass

from .serialize import dumps


@dataclass(frozen=True)
class EngineConfig:
    # input pipeline
    smoothing_window: float = 0.100  # s, sliding mean over palm position
    palm_open_threshold: float = 0.7  # min finger extension to enter Open
    palm_close_threshold: float = 0.3  # max finger extension to enter Closed
    pinch_down_gap: float = 0.020  # m, thumb-index gap to enter Down
    pinch_up_gap: float = 0.030  # m, gap to leave Down
    drag_displacement: float = 0.015  # m, pinch promotes to drag at this travel
    drag_duration: float = 0.300  # s, or at this hold time
    tracking_loss_timeout: float = 0.250  # s of invalid hand before forced dismissal

    # interaction state machine
    summon_duration: float = 0.250  # s, scale-up transition to the active menu

    # reference frames
    on_hand_offset: float = 0.045  # m above the palm along its normal
    above_hand_rise: float = 0.30  # m straight up from the palm
    above_hand_away: float = 0.15  # m horizontally away from the head
    head_distance: float = 0.55  # m in front of the head
    panel_width: float = 0.30  # m
    panel_height: float = 0.22  # m
    initial_reference_frame: str = "OnHand"

    # navigation
    pan_gain: float = 1.0  # content meters per hand meter
    layer_spacing: float = 0.05  # m of hand travel per depth layer
    zoom_halving_distance: float = 0.05  # m of forward travel per halving of scale
    map_scale_min: float = 0.01
    map_scale_max: float = 1.0
    head_scroll_enabled: bool = False  # scroll by turning the head while pinching

    # applications
    notification_shortcuts: bool = True
    notification_shortcut_threshold: float = 0.03  # m net horizontal drag

    # harness
    frame_rate: float = 90.0  # Hz
    gaze_noise_deg: float = 1.0  # fixation noise sigma per axis

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def digest(self) -> str:
        return hashlib.sha256(dumps(self.to_dict()).encode()).hexdigest()[:16]

    def replace(self, **overrides) -> "EngineConfig":
        return dataclasses.replace(self, **overrides)


DEFAULT_CONFIG = EngineConfig()

_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(EngineConfig)}


def config_from_dict(data: dict) -> EngineConfig:
    """Build a config from a partial dict of overrides."""
    unknown = set(data) - set(_FIELD_TYPES)
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    coerced = {}
    for key, value in data.items():
        if _FIELD_TYPES[key] == "float" and isinstance(value, int) and not isinstance(value, bool):
            value = float(value)
        coerced[key] = value
    return EngineConfig(**coerced)


def load_config(path: str) -> EngineConfig:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    return config_from_dict(data)
