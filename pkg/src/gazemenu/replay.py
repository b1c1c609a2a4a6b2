"""Deterministic frame-by-frame replay of a trace."""

from __future__ import annotations

from dataclasses import dataclass, field

from .apps.session import SessionState
from .config import DEFAULT_CONFIG, EngineConfig
from .engine import Session
from .fsm import UiEvent, UiSummoned
from .metrics import Metrics, TaskSpec, score
from .serialize import dumps
from .trace import Trace
from .wire import event_to_obj


@dataclass
class ReplayResult:
    events: list[UiEvent] = field(default_factory=list)
    final_state: SessionState | None = None
    first_summon_t: float | None = None
    first_goal_t: float | None = None
    duration: float = 0.0

    def log_lines(self) -> list[str]:
        return [dumps(event_to_obj(e)) for e in self.events]

    def log_text(self) -> str:
        lines = self.log_lines()
        return "\n".join(lines) + "\n" if lines else ""


def replay(trace: Trace, config: EngineConfig = DEFAULT_CONFIG,
           task: TaskSpec | None = None) -> ReplayResult:
    session = Session(config)
    result = ReplayResult(final_state=session.state, duration=trace.duration())
    goal = task.goal if task else None
    for frame in trace.frames:
        events, _ = session.step(frame)
        result.events.extend(events)
        if result.first_summon_t is None:
            for e in events:
                if isinstance(e, UiSummoned):
                    result.first_summon_t = e.t
                    break
        if goal is not None and result.first_goal_t is None:
            if goal.satisfied(session.state, events, config):
                result.first_goal_t = frame.t
    result.final_state = session.state
    return result


def score_replay(result: ReplayResult, task: TaskSpec | None) -> Metrics:
    return score(result.events, task, result.first_goal_t, result.first_summon_t)
