"""Builders shared across the test suite.

The canonical directed-test geometry keeps every axis clean: the head
sits at (0, 1.6, 0) looking down -Z, the hand floats at (0, 1.6, -0.45)
with its palm normal pointing straight back at the head, so the OnHand
panel is axis-aligned and its drag axes coincide with world axes.
"""

from __future__ import annotations

from gazemenu.config import DEFAULT_CONFIG, EngineConfig
from gazemenu.engine import Session
from gazemenu.geometry import IDENTITY, Pose, Ray, Vec3
from gazemenu.inputs import HandSample, TrackingFrame

HEAD = Pose(Vec3(0.0, 1.6, 0.0), IDENTITY)
HAND_POS = Vec3(0.0, 1.6, -0.45)

OPEN = (0.9, 0.9, 0.9, 0.9)
CLOSED = (0.1, 0.1, 0.1, 0.1)


def hand_sample(pos: Vec3 = HAND_POS, ext=OPEN, gap: float = 0.05) -> HandSample:
    return HandSample(Pose(pos, IDENTITY), ext, gap)


def frame(t: float, *, hand_pos: Vec3 = HAND_POS, ext=OPEN, gap: float = 0.05,
          gaze_dir: Vec3 = Vec3(0.0, 0.0, -1.0), gaze_valid: bool = True,
          hand_valid: bool = True, head: Pose = HEAD) -> TrackingFrame:
    return TrackingFrame(
        t=t,
        head=head,
        gaze=Ray(head.position, gaze_dir),
        gaze_valid=gaze_valid,
        hand=HandSample(Pose(hand_pos, IDENTITY), ext, gap),
        hand_valid=hand_valid,
    )


class Driver:
    """Feeds a session a synthetic stream at a fixed frame rate."""

    def __init__(self, config: EngineConfig = DEFAULT_CONFIG,
                 session: Session | None = None) -> None:
        self.session = session or Session(config)
        self.rate = config.frame_rate
        self.n = 0
        self.head = HEAD
        self.hand_pos = HAND_POS
        self.ext = CLOSED
        self.gap = 0.05
        self.gaze_dir = Vec3(0.0, 0.0, -1.0)
        self.hand_valid = True
        self.gaze_valid = True
        self.events = []
        self.snapshot = None

    @property
    def t(self) -> float:
        return self.n / self.rate

    def step(self, count: int = 1) -> list:
        new = []
        for _ in range(count):
            f = frame(
                self.t, hand_pos=self.hand_pos, ext=self.ext, gap=self.gap,
                gaze_dir=self.gaze_dir, gaze_valid=self.gaze_valid,
                hand_valid=self.hand_valid, head=self.head,
            )
            events, self.snapshot = self.session.step(f)
            new.extend(events)
            self.n += 1
        self.events.extend(new)
        return new

    def seconds(self, duration: float) -> list:
        return self.step(max(1, round(duration * self.rate)))

    def gaze_at_element(self, element_id: str) -> None:
        """Aim the gaze ray at an element center using the last snapshot."""
        from gazemenu.geometry import panel_point_to_world

        vm = self.snapshot.view_model
        element = vm.find(element_id)
        assert element is not None, f"element {element_id!r} not in view model"
        placement = self.snapshot.placement
        target = panel_point_to_world(
            placement.pose, placement.extent, element.rect.center())
        self.gaze_dir = (target - HEAD.position).normalized()

    def click(self) -> list:
        events = []
        self.gap = 0.012
        events += self.seconds(0.15)
        self.gap = 0.05
        events += self.seconds(0.08)
        return events
