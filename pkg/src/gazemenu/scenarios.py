"""Synthetic scenario traces reproducing the harness study tasks.

Generation is closed-loop: an author runs a live session, watches its
snapshots like a user watches the display, and plans the next frame from
them. Gaze is modelled as fixations with a per-saccade Gaussian angular
offset (the tracker accuracy) and instantaneous saccades; the hand moves
along minimum-jerk segments. When a fixation lands so far off that the
wrong element stays hovered, the author re-saccades, like a user
correcting against visible feedback.

Every float is quantized to the trace precision before it enters the
author's own session, so replaying the written file reproduces the
author's run bit for bit.
"""

from __future__ import annotations

import math
import random

from .apps import content
from .apps.mapview import marker_visible
from .config import DEFAULT_CONFIG, EngineConfig
from .engine import Session, StateSnapshot
from .fsm import Selected
from .geometry import (
    Orientation, IDENTITY, PanelPoint, Pose, Ray, Vec3, billboard_toward,
    panel_point_to_world,
)
from .inputs import HandSample, TrackingFrame
from .metrics import GalleryImageGoal, MapMarkerGoal, SelectedGoal, TaskSpec
from .navigation import panel_point_of
from .serialize import q9
from .trace import Trace, TraceHeader

SCENARIO_NAMES = (
    "music-quick-play",
    "favorites-find-file",
    "gallery-find-image",
    "map-find-marker",
    "fuzz-random",
)

_HEAD_POSITION = Vec3(0.0, 1.6, 0.0)
# Held in front of the face so the billboarded panel is nearly
# perpendicular to the viewing axis and forward drags stay forward.
_HAND_REST = Vec3(0.02, 1.60, -0.42)


class ScenarioGenerationError(RuntimeError):
    pass


def _target_rng(name: str, seed: int) -> random.Random:
    return random.Random(f"{name}:{seed}:target")


def task_for(name: str, seed: int) -> TaskSpec:
    """Task spec of a scenario; shared by the generator and the scorer."""
    rng = _target_rng(name, seed)
    if name == "music-quick-play":
        track = content.TRACK_IDS[rng.randrange(len(content.TRACK_IDS))]
        return TaskSpec(name, SelectedGoal(track), ("icon_music", track))
    if name == "favorites-find-file":
        fav = content.FAVORITE_IDS[rng.randrange(len(content.FAVORITE_IDS))]
        return TaskSpec(name, SelectedGoal(fav), ("icon_favorites", fav))
    if name == "gallery-find-image":
        album = content.ALBUM_IDS[rng.randrange(len(content.ALBUM_IDS))]
        image = content.ALBUM_IMAGES[album][rng.randrange(9)]
        return TaskSpec(name, GalleryImageGoal(album, image), ("icon_gallery",))
    if name == "map-find-marker":
        marker = list(content.MAP_MARKERS)[rng.randrange(len(content.MAP_MARKERS))]
        return TaskSpec(name, MapMarkerGoal(marker, 0.25), ("icon_map",))
    if name == "fuzz-random":
        return TaskSpec(name, None, ())
    raise ValueError(f"unknown scenario {name!r}")


def _qvec(v: Vec3) -> Vec3:
    return Vec3(q9(v.x), q9(v.y), q9(v.z))


def _qquat(q: Orientation) -> Orientation:
    return Orientation(q9(q.w), q9(q.x), q9(q.y), q9(q.z))


class _Author:
    def __init__(self, name: str, seed: int, config: EngineConfig) -> None:
        self.cfg = config
        self.rng = random.Random(f"{name}:{seed}:motion")
        self.session = Session(config)
        self.frames: list[TrackingFrame] = []
        self.selected: set[str] = set()
        self.snapshot: StateSnapshot | None = None
        self.n = 0
        self.head = Pose(_HEAD_POSITION, IDENTITY)
        self.hand_pos = _HAND_REST + Vec3(
            self.rng.uniform(-0.015, 0.015), self.rng.uniform(-0.015, 0.015),
            self.rng.uniform(-0.015, 0.015))
        self.hand_valid = True
        self.gaze_valid = True
        self.palm_ext = self._ext(open_palm=False)
        self.pinch_gap = 0.05
        self.fix_mode: tuple = ("point", Vec3(0.0, 1.6, -1.5))
        self.fix_offset = (0.0, 0.0)

    # --- primitive synthesis -------------------------------------------------

    def _ext(self, open_palm: bool) -> tuple[float, float, float, float]:
        lo, hi = (0.82, 0.95) if open_palm else (0.04, 0.16)
        return tuple(q9(self.rng.uniform(lo, hi)) for _ in range(4))

    def _saccade(self) -> None:
        sigma = math.radians(self.cfg.gaze_noise_deg)
        self.fix_offset = (self.rng.gauss(0.0, sigma), self.rng.gauss(0.0, sigma))

    def _fixation_point(self) -> Vec3:
        mode = self.fix_mode
        if mode[0] == "point":
            return mode[1]
        if self.snapshot is None:
            return Vec3(0.0, 1.6, -1.5)
        placement = self.snapshot.placement
        if mode[0] == "element":
            element = self.snapshot.view_model.find(mode[1])
            point = element.rect.center() if element else PanelPoint(0.5, 0.5)
        else:  # map marker
            cx, cy, _ = content.MAP_MARKERS[mode[1]]
            aspect = self.cfg.panel_height / self.cfg.panel_width
            point = panel_point_of(self.session.state.map.view, cx, cy, aspect)
        return panel_point_to_world(placement.pose, placement.extent, point)

    def _gaze_direction(self) -> Vec3:
        target = self._fixation_point()
        d = target - self.head.position
        if d.norm() < 1e-6:
            d = Vec3(0.0, 0.0, -1.0)
        d = d.normalized()
        a1, a2 = self.fix_offset
        if a1 == 0.0 and a2 == 0.0:
            return d
        side = d.cross(Vec3(0.0, 1.0, 0.0))
        if side.norm() < 1e-6:
            side = Vec3(1.0, 0.0, 0.0)
        side = side.normalized()
        up = side.cross(d)
        return (d + side * math.tan(a1) + up * math.tan(a2)).normalized()

    def emit(self) -> None:
        t = q9(self.n / self.cfg.frame_rate)
        self.n += 1
        palm_pose = Pose(
            _qvec(self.hand_pos),
            _qquat(billboard_toward(self.hand_pos, self.head.position)),
        )
        frame = TrackingFrame(
            t=t,
            head=self.head,
            gaze=Ray(self.head.position, _qvec(self._gaze_direction())),
            gaze_valid=self.gaze_valid,
            hand=HandSample(palm_pose, self.palm_ext, q9(self.pinch_gap)),
            hand_valid=self.hand_valid,
        )
        self.frames.append(frame)
        events, self.snapshot = self.session.step(frame)
        for event in events:
            if isinstance(event, Selected):
                self.selected.add(event.target)
        if self.n > 60 * self.cfg.frame_rate:
            raise ScenarioGenerationError("scenario exceeded the 60 s budget")

    # --- user-level actions --------------------------------------------------

    def hold(self, seconds: float) -> None:
        for _ in range(max(1, round(seconds * self.cfg.frame_rate))):
            self.emit()

    def open_palm(self) -> None:
        self.palm_ext = self._ext(open_palm=True)

    def close_palm(self) -> None:
        self.palm_ext = self._ext(open_palm=False)

    def pinch_down(self) -> None:
        self.pinch_gap = 0.012

    def pinch_up(self) -> None:
        self.pinch_gap = 0.05

    def look_at(self, element_id: str) -> None:
        self.fix_mode = ("element", element_id)
        self._saccade()

    def look_at_marker(self, marker_id: str) -> None:
        self.fix_mode = ("marker", marker_id)
        self._saccade()

    def acquire(self, element_id: str, attempts: int = 12) -> None:
        """Fixate until the element is stably hovered, re-saccading when a
        bad fixation offset keeps a neighbour highlighted."""
        self.look_at(element_id)
        for _ in range(attempts):
            settled = 0
            for _ in range(27):
                self.emit()
                if self.snapshot.hover == element_id:
                    settled += 1
                    if settled >= 3:
                        return
                else:
                    settled = 0
            self.look_at(element_id)
        raise ScenarioGenerationError(f"could not acquire {element_id!r}")

    def click(self) -> None:
        self.pinch_down()
        self.hold(0.16)
        self.pinch_up()
        self.hold(0.08)

    def select(self, element_id: str) -> None:
        self.acquire(element_id)
        self.click()
        if element_id not in self.selected:
            raise ScenarioGenerationError(f"click did not select {element_id!r}")

    def move_hand(self, delta: Vec3, seconds: float) -> None:
        start = self.hand_pos
        steps = max(1, round(seconds * self.cfg.frame_rate))
        for k in range(1, steps + 1):
            tau = k / steps
            s = tau * tau * tau * (10.0 + tau * (-15.0 + 6.0 * tau))
            self.hand_pos = start + delta * s
            self.emit()

    def move_forward(self, distance: float, seconds: float) -> None:
        self.move_hand(self.head.forward() * distance, seconds)

    def finish(self) -> None:
        self.pinch_up()
        self.close_palm()
        self.hold(0.08)


def _lead_in(author: _Author) -> None:
    author.hold(0.20)
    author.open_palm()
    author.hold(0.12)


def _author_music(author: _Author, task: TaskSpec) -> None:
    _lead_in(author)
    author.select("icon_music")
    author.hold(0.04)
    author.select(task.goal.target)
    author.finish()


def _author_favorites(author: _Author, task: TaskSpec) -> None:
    _lead_in(author)
    author.select("icon_favorites")
    author.hold(0.04)
    author.select(task.goal.target)
    author.finish()


def _author_gallery(author: _Author, task: TaskSpec) -> None:
    goal: GalleryImageGoal = task.goal
    _lead_in(author)
    author.select("icon_gallery")
    author.hold(0.04)
    author.acquire(goal.album)
    author.pinch_down()
    author.hold(0.08)
    author.move_forward(0.05, 0.45)
    gallery = author.session.state.gallery
    for _ in range(6):
        if gallery.layer == 2 and gallery.image == goal.image:
            break
        if gallery.layer == 0:
            author.acquire(goal.album)
        elif gallery.layer == 1:
            author.acquire(goal.image)
        author.move_forward(0.05, 0.40)
    else:
        raise ScenarioGenerationError("gallery descent did not reach the image")
    author.finish()


def _author_map(author: _Author, task: TaskSpec) -> None:
    goal: MapMarkerGoal = task.goal
    _lead_in(author)
    author.select("icon_map")
    author.hold(0.04)
    author.look_at_marker(goal.marker)
    author.hold(0.10)
    author.pinch_down()
    author.hold(0.08)
    author.move_forward(0.125, 1.10)

    def done() -> bool:
        view = author.session.state.map.view
        return view.scale <= goal.max_scale and marker_visible(view, goal.marker, author.cfg)

    for _ in range(10):
        if done():
            break
        author.move_forward(0.02, 0.20)
    else:
        raise ScenarioGenerationError("map zoom did not reach the marker")
    author.finish()


def _author_fuzz(author: _Author) -> None:
    rng = author.rng
    frames_total = round(10.0 * author.cfg.frame_rate)
    while author.n < frames_total:
        r = rng.random()
        if r < 0.15:
            if min(author.palm_ext) > 0.5:
                author.close_palm()
            else:
                author.open_palm()
            author.hold(rng.uniform(0.05, 0.25))
        elif r < 0.30:
            author.pinch_gap = rng.uniform(0.004, 0.06)
            author.hold(rng.uniform(0.05, 0.30))
        elif r < 0.55:
            delta = Vec3(rng.uniform(-0.08, 0.08), rng.uniform(-0.08, 0.08),
                         rng.uniform(-0.08, 0.08))
            author.move_hand(delta, rng.uniform(0.10, 0.40))
        elif r < 0.70:
            author.fix_mode = ("point", Vec3(
                rng.uniform(-0.6, 0.6), rng.uniform(1.0, 2.0), rng.uniform(-1.5, -0.2)))
            author._saccade()
            author.hold(rng.uniform(0.05, 0.20))
        elif r < 0.78:
            author.hand_valid = False
            author.hold(rng.uniform(0.03, 0.35))
            author.hand_valid = True
        elif r < 0.84:
            author.gaze_valid = False
            author.hold(rng.uniform(0.03, 0.20))
            author.gaze_valid = True
        else:
            author.hold(rng.uniform(0.05, 0.30))


_AUTHORS = {
    "music-quick-play": _author_music,
    "favorites-find-file": _author_favorites,
    "gallery-find-image": _author_gallery,
    "map-find-marker": _author_map,
}


def generate_scenario(name: str, seed: int,
                      config: EngineConfig = DEFAULT_CONFIG) -> Trace:
    """Synthesize a deterministic trace for a named scenario."""
    if name not in SCENARIO_NAMES:
        raise ValueError(f"unknown scenario {name!r}")
    task = task_for(name, seed)
    author = _Author(name, seed, config)
    if name == "fuzz-random":
        _author_fuzz(author)
    else:
        _AUTHORS[name](author, task)
    header = TraceHeader(frame_rate=config.frame_rate, seed=seed,
                         config_digest=config.digest())
    return Trace(header, author.frames)
