import pytest

from gazemenu.apps import SessionState
from gazemenu.config import DEFAULT_CONFIG
from gazemenu.engine import Session
from gazemenu.fsm import (
    DragEnded, DragStarted, DragUpdated, HoverChanged, Selected, UiDismissed,
    UiSummoned,
)
from gazemenu.geometry import Vec3
from gazemenu.serialize import dumps

from helpers import CLOSED, OPEN, Driver


def names(events):
    return [type(e).__name__ for e in events]


def music_session():
    state = SessionState()
    state.active_app = "music"
    return Session(DEFAULT_CONFIG, state)


def test_compound_open_look_pinch_selects_track():
    driver = Driver(session=music_session())
    driver.seconds(0.10)  # closed palm: UI stays off
    assert all(not isinstance(e, UiSummoned) for e in driver.events)

    driver.ext = OPEN
    driver.seconds(0.27)  # summon and settle
    driver.gaze_at_element("track_04")
    driver.seconds(0.10)
    driver.click()

    kinds = names(driver.events)
    assert kinds.count("UiSummoned") == 1
    assert "HoverChanged" in kinds
    selected = [e for e in driver.events if isinstance(e, Selected)]
    assert [e.target for e in selected] == ["track_04"]
    assert driver.session.state.music.playing
    # order: summon, then hover arrives, then the selection
    assert kinds.index("UiSummoned") < kinds.index("HoverChanged")
    assert kinds.index("HoverChanged") < kinds.index("Selected")


def test_selection_during_summoning_animation():
    driver = Driver(session=music_session())
    driver.seconds(0.05)
    driver.ext = OPEN
    driver.seconds(0.07)  # still summoning (progress < 1)
    assert driver.snapshot.fsm == "Summoning"
    driver.gaze_at_element("track_01")
    driver.seconds(0.03)
    driver.click()
    assert any(isinstance(e, Selected) and e.target == "track_01"
               for e in driver.events)


def test_palm_close_commits_drag_and_dismisses():
    driver = Driver(session=Session(DEFAULT_CONFIG))
    driver.ext = OPEN
    driver.seconds(0.30)
    driver.gap = 0.012
    driver.seconds(0.05)
    # drag beyond the promotion bound, then close the palm mid-drag
    for _ in range(20):
        driver.hand_pos = driver.hand_pos + Vec3(0.002, 0, 0)
        driver.step()
    assert any(isinstance(e, DragStarted) for e in driver.events)
    driver.ext = CLOSED
    new = driver.step()
    kinds = names(new)
    assert kinds[:2] == ["DragEnded", "UiDismissed"] or kinds[:3] == [
        "DragUpdated", "DragEnded", "UiDismissed"]
    assert next(e for e in new if isinstance(e, DragEnded)).committed
    assert driver.snapshot.fsm == "UiOff"


def test_tracking_loss_dismisses_after_timeout():
    driver = Driver(session=Session(DEFAULT_CONFIG))
    driver.ext = OPEN
    driver.seconds(0.30)
    assert driver.snapshot.fsm == "Idle"
    driver.hand_valid = False
    events = driver.seconds(0.30)
    assert any(isinstance(e, UiDismissed) for e in events)
    assert driver.snapshot.fsm == "UiOff"


def test_no_hover_while_ui_off():
    driver = Driver(session=music_session())
    driver.gaze_dir = Vec3(0, 0, -1)  # straight at where the panel would be
    driver.seconds(0.2)
    assert driver.snapshot.hover is None
    driver.ext = OPEN
    driver.step()  # summon frame: hover still resolves next frame
    driver.seconds(0.05)
    assert driver.snapshot.hover is not None


def test_dismissal_clears_hover_same_frame():
    driver = Driver(session=music_session())
    driver.ext = OPEN
    driver.seconds(0.30)
    assert driver.snapshot.hover is not None
    driver.ext = CLOSED
    new = driver.step()
    hover_events = [e for e in new if isinstance(e, HoverChanged)]
    assert hover_events and hover_events[-1].new is None
    assert driver.snapshot.hover is None
    assert names(new).index("UiDismissed") < names(new).index("HoverChanged")


def test_app_state_survives_dismiss_summon_cycles():
    driver = Driver(session=music_session())
    driver.ext = OPEN
    driver.seconds(0.30)
    driver.gaze_at_element("track_07")
    driver.seconds(0.08)
    driver.click()
    snapshot_before = dumps(driver.session.state.to_dict())
    for _ in range(3):
        driver.ext = CLOSED
        driver.seconds(0.20)
        driver.ext = OPEN
        driver.seconds(0.30)
    assert dumps(driver.session.state.to_dict()) == snapshot_before


def test_frame_toggle_selection_switches_placement():
    driver = Driver(session=Session(DEFAULT_CONFIG))
    driver.ext = OPEN
    driver.seconds(0.30)
    driver.gaze_at_element("frame_toggle")
    driver.seconds(0.08)
    driver.click()
    assert driver.snapshot.reference_frame.value == "AboveHand"
    # panel now floats above the hand
    panel_y = driver.snapshot.placement.pose.position.y
    assert panel_y == pytest.approx(driver.hand_pos.y + 0.30, abs=0.02)


def test_drag_updates_flow_every_frame_while_dragging():
    driver = Driver(session=Session(DEFAULT_CONFIG))
    driver.ext = OPEN
    driver.seconds(0.30)
    driver.gap = 0.012
    driver.seconds(0.35)  # promoted by duration while stationary
    updates = [e for e in driver.events if isinstance(e, DragUpdated)]
    assert len(updates) >= 3
    assert all(abs(u.delta.x) < 1e-9 for u in updates)


def test_head_scroll_mode_scrolls_while_pinching():
    import math

    from gazemenu.geometry import Orientation, Pose
    from helpers import HEAD

    config = DEFAULT_CONFIG.replace(head_scroll_enabled=True)
    state = SessionState()
    state.active_app = "downloads"
    driver = Driver(config, session=Session(config, state))
    driver.ext = OPEN
    driver.seconds(0.4)
    driver.gap = 0.012
    driver.seconds(0.35)  # promoted to drag by duration
    before = driver.session.state.downloads.scroll_x
    # turn the head right in small steps while holding the pinch
    for k in range(1, 21):
        half = -0.004 * k
        driver.head = Pose(HEAD.position,
                           Orientation(math.cos(half), 0.0, math.sin(half), 0.0))
        driver.step()
    after = driver.session.state.downloads.scroll_x
    assert after > before + 0.03  # 0.16 rad at 0.405 m panel distance


def test_view_model_ids_unique_for_every_app():
    from gazemenu.apps import build_view_model
    from gazemenu.apps.content import APP_IDS

    for app in APP_IDS + ("home",):
        state = SessionState()
        state.active_app = app
        ids = build_view_model(state).element_ids()
        assert len(ids) == len(set(ids)), app
