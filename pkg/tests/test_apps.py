import random

import pytest

from gazemenu.apps import (
    DRAG_AXES, GazeContext, SessionState, build_view_model, route_event,
)
from gazemenu.apps import content
from gazemenu.apps.folders import DOWNLOADS_SCROLL_MIN
from gazemenu.config import DEFAULT_CONFIG
from gazemenu.frames import ReferenceFrame
from gazemenu.fsm import DragEnded, DragStarted, DragUpdated, Selected
from gazemenu.geometry import PanelPoint, Vec3
from gazemenu.navigation import PeepholeMode
from gazemenu.serialize import dumps

CTX = GazeContext(hover=None, panel_point=None, peephole=PeepholeMode.DYNAMIC)


def ctx(hover=None, point=None, mode=PeepholeMode.DYNAMIC):
    return GazeContext(hover=hover, panel_point=point, peephole=mode)


def select(state, target, context=CTX):
    route_event(state, Selected(0.0, target), context, DEFAULT_CONFIG)


def drag(state, deltas, context=CTX, target=None, committed=True):
    route_event(state, DragStarted(0.0, target), context, DEFAULT_CONFIG)
    for d in deltas:
        route_event(state, DragUpdated(0.0, d), context, DEFAULT_CONFIG)
    route_event(state, DragEnded(0.0, committed), context, DEFAULT_CONFIG)


# --- global routing ---------------------------------------------------------------

def test_home_button_returns_home_and_keeps_app_state():
    state = SessionState()
    state.active_app = "map"
    state.map.view = state.map.view.__class__(0.4, 0.5, 0.25)
    select(state, "home_button")
    assert state.active_app == "home"
    assert state.map.view.scale == 0.25


def test_frame_toggle_cycles_reference_frame():
    state = SessionState()
    assert state.reference_frame is ReferenceFrame.ON_HAND
    select(state, "frame_toggle")
    assert state.reference_frame is ReferenceFrame.ABOVE_HAND


def test_home_icons_launch_apps():
    state = SessionState()
    select(state, "icon_gallery")
    assert state.active_app == "gallery"


def test_unknown_selection_is_noop():
    state = SessionState()
    before = dumps(state.to_dict())
    select(state, "no_such_element")
    assert dumps(state.to_dict()) == before


def test_home_reachable_in_two_selections_from_anywhere():
    for app in content.APP_IDS:
        state = SessionState()
        state.active_app = app
        select(state, "home_button")
        select(state, f"icon_{'music' if app != 'music' else 'map'}")
        assert state.active_app in content.APP_IDS


# --- music -------------------------------------------------------------------------

def test_select_track_plays_it():
    state = SessionState()
    state.active_app = "music"
    select(state, "track_04")
    assert state.music.now_playing == 3
    assert state.music.playing


def test_play_pause_toggles():
    state = SessionState()
    state.active_app = "music"
    select(state, "track_01")
    select(state, "play_pause")
    assert not state.music.playing
    select(state, "play_pause")
    assert state.music.playing


def test_next_wraps_around():
    state = SessionState()
    state.active_app = "music"
    select(state, content.TRACK_IDS[-1])
    select(state, "next_track")
    assert state.music.now_playing == 0


# --- notifications -----------------------------------------------------------------

def test_two_selection_delete():
    state = SessionState()
    state.active_app = "notifications"
    select(state, "n2")
    assert state.notifications.expanded == "n2"
    vm_ids = build_view_model(state).element_ids()
    assert "n2_check" in vm_ids and "n2_delete" in vm_ids and "n2" not in vm_ids
    select(state, "n2_delete")
    assert "n2" not in state.notifications.items


def test_postpone_moves_to_end():
    state = SessionState()
    state.active_app = "notifications"
    select(state, "n3")
    select(state, "n3_postpone")
    assert state.notifications.items == ["n1", "n2", "n4", "n5", "n6", "n7", "n8", "n3"]
    assert state.notifications.expanded is None


def test_shortcut_drag_left_checks_gazed_notification():
    state = SessionState()
    state.active_app = "notifications"
    deltas = [Vec3(-0.01, 0.0, 0.0)] * 5  # net 5 cm left
    drag(state, deltas, target="n1")
    assert "n1" not in state.notifications.items


def test_shortcut_drag_right_deletes():
    state = SessionState()
    state.active_app = "notifications"
    drag(state, [Vec3(0.04, 0.0, 0.0)], target="n5")
    assert "n5" not in state.notifications.items


def test_shortcut_below_threshold_keeps_notification():
    state = SessionState()
    state.active_app = "notifications"
    drag(state, [Vec3(-0.02, 0.0, 0.0)], target="n1")
    assert "n1" in state.notifications.items


def test_shortcut_ignored_when_disabled():
    config = DEFAULT_CONFIG.replace(notification_shortcuts=False)
    state = SessionState()
    state.active_app = "notifications"
    route_event(state, DragStarted(0.0, "n1"), CTX, config)
    route_event(state, DragUpdated(0.0, Vec3(-0.05, 0, 0)), CTX, config)
    route_event(state, DragEnded(0.0, True), CTX, config)
    assert "n1" in state.notifications.items


def test_uncommitted_drag_applies_no_shortcut():
    state = SessionState()
    state.active_app = "notifications"
    drag(state, [Vec3(-0.05, 0.0, 0.0)], target="n1", committed=False)
    assert "n1" in state.notifications.items


def test_action_on_removed_notification_is_noop():
    state = SessionState()
    state.active_app = "notifications"
    select(state, "n2")
    select(state, "n2_delete")
    before = dumps(state.to_dict())
    select(state, "n2_check")
    assert dumps(state.to_dict()) == before


# --- downloads / favorites -----------------------------------------------------------

def test_downloads_drag_scrolls_right():
    state = SessionState()
    state.active_app = "downloads"
    drag(state, [Vec3(0.10, 0.0, 0.0)])
    assert state.downloads.scroll_x == pytest.approx(DOWNLOADS_SCROLL_MIN + 0.10)


def test_downloads_detail_preserves_scroll_offset():
    state = SessionState()
    state.active_app = "downloads"
    drag(state, [Vec3(0.13, 0.0, 0.0)])
    offset = state.downloads.scroll_x
    select(state, "dl_09")
    assert state.downloads.viewing == "dl_09"
    vm_ids = build_view_model(state).element_ids()
    assert "dl_back" in vm_ids
    select(state, "dl_back")
    assert state.downloads.viewing is None
    assert state.downloads.scroll_x == offset


def test_downloads_scroll_reveals_right_columns():
    state = SessionState()
    state.active_app = "downloads"
    assert "dl_10" not in build_view_model(state).element_ids()
    drag(state, [Vec3(0.40, 0.0, 0.0)])
    ids = build_view_model(state).element_ids()
    assert "dl_10" in ids and "dl_01" not in ids


def test_favorites_ignores_drags():
    state = SessionState()
    state.active_app = "favorites"
    before = dumps(state.to_dict())
    drag(state, [Vec3(0.2, 0.1, 0.3)])
    assert dumps(state.to_dict()) == before


def test_favorites_detail_shows_properties():
    state = SessionState()
    state.active_app = "favorites"
    select(state, "fav_01")
    labels = [e.label for e in build_view_model(state).elements]
    assert "Flyer.pdf" in labels
    assert any(lab.startswith("Size:") for lab in labels)


# --- gallery --------------------------------------------------------------------------

def test_gallery_drag_descends_into_gazed_items():
    state = SessionState()
    state.active_app = "gallery"
    route_event(state, DragStarted(0.0, "album_b"), ctx(hover="album_b"), DEFAULT_CONFIG)
    route_event(state, DragUpdated(0.0, Vec3(0, 0, 0.05)), ctx(hover="album_b"),
                DEFAULT_CONFIG)
    assert state.gallery.layer == 1 and state.gallery.album == "album_b"
    route_event(state, DragUpdated(0.0, Vec3(0, 0, 0.05)), ctx(hover="img_b7"),
                DEFAULT_CONFIG)
    assert state.gallery.layer == 2 and state.gallery.image == "img_b7"
    # -0.10 m ascends back to the overview via two crossings
    route_event(state, DragUpdated(0.0, Vec3(0, 0, -0.10)), ctx(), DEFAULT_CONFIG)
    assert state.gallery.layer == 0 and state.gallery.album is None


def test_gallery_crossing_without_gaze_is_absorbed():
    state = SessionState()
    state.active_app = "gallery"
    route_event(state, DragStarted(0.0, None), ctx(), DEFAULT_CONFIG)
    route_event(state, DragUpdated(0.0, Vec3(0, 0, 0.05)), ctx(hover=None),
                DEFAULT_CONFIG)
    assert state.gallery.layer == 0


def test_gallery_selection_descends():
    state = SessionState()
    state.active_app = "gallery"
    select(state, "album_a", ctx(hover="album_a"))
    assert state.gallery.layer == 1
    select(state, "img_a3", ctx(hover="img_a3"))
    assert state.gallery.layer == 2 and state.gallery.image == "img_a3"


def test_gallery_layer2_image_is_snap_exempt():
    state = SessionState()
    state.active_app = "gallery"
    select(state, "album_a")
    select(state, "img_a3")
    vm = build_view_model(state)
    image = vm.find("img_a3")
    assert image is not None and image.snap_exempt
    assert f"#{content.IMAGE_NUMBERS['img_a3']}" in image.label


def test_gallery_layer_stays_in_bounds_under_fuzz():
    rng = random.Random(11)
    state = SessionState()
    state.active_app = "gallery"
    hovers = [None, "album_a", "album_b", "img_a1", "img_b5", "home_button"]
    route_event(state, DragStarted(0.0, None), ctx(), DEFAULT_CONFIG)
    for _ in range(3000):
        d = Vec3(0, 0, rng.uniform(-0.08, 0.08))
        route_event(state, DragUpdated(0.0, d), ctx(hover=rng.choice(hovers)),
                    DEFAULT_CONFIG)
        assert 0 <= state.gallery.layer <= 2


# --- map -------------------------------------------------------------------------------

def test_map_forward_drag_zooms_at_gaze_pivot():
    state = SessionState()
    state.active_app = "map"
    pivot = PanelPoint(0.75, 0.5)
    from gazemenu.navigation import content_under
    aspect = DEFAULT_CONFIG.panel_height / DEFAULT_CONFIG.panel_width
    c0 = content_under(state.map.view, pivot, aspect)
    route_event(state, DragStarted(0.0, None), ctx(point=pivot), DEFAULT_CONFIG)
    route_event(state, DragUpdated(0.0, Vec3(0, 0, 0.05)), ctx(point=pivot),
                DEFAULT_CONFIG)
    assert state.map.view.scale == pytest.approx(0.5)
    c1 = content_under(state.map.view, pivot, aspect)
    assert abs(c0[0] - c1[0]) < 1e-9 and abs(c0[1] - c1[1]) < 1e-9


def test_map_markers_follow_view():
    state = SessionState()
    state.active_app = "map"
    vm = build_view_model(state)
    assert {"marker_1", "marker_2", "marker_3"} <= set(vm.element_ids())
    assert all(vm.find(m).snap_exempt for m in ("marker_1", "marker_2", "marker_3"))


# --- axis conformance matrix ------------------------------------------------------------

@pytest.mark.parametrize("app", content.APP_IDS)
def test_drags_on_unmarked_axes_leave_state_unchanged(app):
    rng = random.Random(hash(app) % 10_000)
    axes = DRAG_AXES[app]
    state = SessionState()
    state.active_app = app
    before = dumps(state.to_dict())
    route_event(state, DragStarted(0.0, None), ctx(), DEFAULT_CONFIG)
    for _ in range(200):
        delta = Vec3(
            0.0 if "x" in axes else rng.uniform(-0.05, 0.05),
            0.0 if "y" in axes else rng.uniform(-0.05, 0.05),
            0.0 if "z" in axes else rng.uniform(-0.05, 0.05),
        )
        route_event(state, DragUpdated(0.0, delta), ctx(), DEFAULT_CONFIG)
    route_event(state, DragEnded(0.0, True), ctx(), DEFAULT_CONFIG)
    assert dumps(state.to_dict()) == before


# --- persistence --------------------------------------------------------------------------

def test_session_round_trips_bit_for_bit():
    state = SessionState()
    state.active_app = "downloads"
    drag(state, [Vec3(0.07, 0, 0)])
    select(state, "dl_03")
    state.active_app = "music"
    select(state, "track_02")
    serialized = dumps(state.to_dict())
    restored = SessionState.from_dict(state.to_dict())
    assert dumps(restored.to_dict()) == serialized
