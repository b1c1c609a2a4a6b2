"""Scenario goals and task metrics.

A TaskSpec pairs a scenario with a goal predicate decidable from the
event log plus session state, and with the element ids a completing run
is expected to select (anything else counts as an erroneous selection).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .apps.session import SessionState
from .apps import mapview
from .config import EngineConfig
from .fsm import DragUpdated, Selected, UiEvent


@dataclass(frozen=True)
class SelectedGoal:
    target: str

    def satisfied(self, state: SessionState, new_events: Sequence[UiEvent],
                  config: EngineConfig) -> bool:
        return any(isinstance(e, Selected) and e.target == self.target for e in new_events)


@dataclass(frozen=True)
class GalleryImageGoal:
    album: str
    image: str

    def satisfied(self, state: SessionState, new_events: Sequence[UiEvent],
                  config: EngineConfig) -> bool:
        g = state.gallery
        return g.layer == 2 and g.album == self.album and g.image == self.image


@dataclass(frozen=True)
class MapMarkerGoal:
    marker: str
    max_scale: float

    def satisfied(self, state: SessionState, new_events: Sequence[UiEvent],
                  config: EngineConfig) -> bool:
        view = state.map.view
        return view.scale <= self.max_scale and mapview.marker_visible(
            view, self.marker, config)


Goal = SelectedGoal | GalleryImageGoal | MapMarkerGoal


@dataclass(frozen=True)
class TaskSpec:
    name: str
    goal: Goal | None
    intended_path: tuple[str, ...] = ()


@dataclass(frozen=True)
class Metrics:
    completion: bool
    time_to_complete: float | None  # None when the goal was not reached
    selection_count: int
    erroneous_selection_count: int
    total_drag_path: float

    def to_dict(self) -> dict:
        return {
            "completion": self.completion,
            "time_to_complete": self.time_to_complete,
            "selection_count": self.selection_count,
            "erroneous_selection_count": self.erroneous_selection_count,
            "total_drag_path": self.total_drag_path,
        }


def score(events: Sequence[UiEvent], task: TaskSpec | None,
          first_goal_t: float | None, first_summon_t: float | None) -> Metrics:
    selections = [e for e in events if isinstance(e, Selected)]
    path = set(task.intended_path) if task else set()
    erroneous = sum(1 for e in selections if e.target not in path)
    drag_path = sum((e.delta.norm() for e in events if isinstance(e, DragUpdated)), 0.0)
    completed = first_goal_t is not None
    time_to_complete = None
    if completed and first_summon_t is not None:
        time_to_complete = first_goal_t - first_summon_t
    return Metrics(
        completion=completed,
        time_to_complete=time_to_complete,
        selection_count=len(selections),
        erroneous_selection_count=erroneous,
        total_drag_path=drag_path,
    )
