"""Wire representation of events, view models and state snapshots.

Key names here are the protocol contract shared by event logs, the
session service and its clients; change nothing lightly.
"""

from __future__ import annotations

from .apps.model import AppViewModel
from .engine import StateSnapshot
from .fsm import DragEnded, DragStarted, DragUpdated, HoverChanged, Selected, UiEvent
from .geometry import Orientation, Pose, Vec3
from .targeting import Element


def vec_to_list(v: Vec3) -> list[float]:
    return [v.x, v.y, v.z]


def quat_to_list(q: Orientation) -> list[float]:
    return [q.w, q.x, q.y, q.z]


def pose_to_obj(pose: Pose) -> dict:
    return {"p": vec_to_list(pose.position), "q": quat_to_list(pose.orientation)}


def event_to_obj(event: UiEvent) -> dict:
    obj: dict = {"t": event.t, "event": type(event).__name__}
    if isinstance(event, HoverChanged):
        obj["old"] = event.old
        obj["new"] = event.new
    elif isinstance(event, Selected):
        obj["target"] = event.target
    elif isinstance(event, DragStarted):
        obj["target"] = event.target
    elif isinstance(event, DragUpdated):
        obj["delta"] = vec_to_list(event.delta)
    elif isinstance(event, DragEnded):
        obj["committed"] = event.committed
    return obj


def element_to_obj(element: Element) -> dict:
    return {
        "id": element.id,
        "rect": [element.rect.umin, element.rect.vmin, element.rect.umax, element.rect.vmax],
        "kind": element.kind.value,
        "label": element.label,
        "snap_exempt": element.snap_exempt,
    }


def view_model_to_obj(vm: AppViewModel) -> dict:
    obj: dict = {
        "app_id": vm.app_id,
        "elements": [element_to_obj(e) for e in vm.elements],
        "top_bar": list(vm.top_bar_ids),
        "scroll": None,
        "depth": None,
        "map": None,
    }
    if vm.scroll is not None:
        obj["scroll"] = {"offset": [vm.scroll.offset_x, vm.scroll.offset_y]}
    if vm.depth is not None:
        obj["depth"] = {"layer": vm.depth.layer, "layer_count": vm.depth.layer_count}
    if vm.map is not None:
        obj["map"] = {"center": [vm.map.center_x, vm.map.center_y], "scale": vm.map.scale}
    return obj


def snapshot_to_obj(snapshot: StateSnapshot) -> dict:
    return {
        "type": "state",
        "t": snapshot.t,
        "fsm": snapshot.fsm,
        "summon_progress": snapshot.summon_progress,
        "ui_pose": pose_to_obj(snapshot.placement.pose),
        "extent": [snapshot.placement.extent.width, snapshot.placement.extent.height],
        "reference_frame": snapshot.reference_frame.value,
        "view_model": view_model_to_obj(snapshot.view_model),
        "hover": snapshot.hover,
    }
