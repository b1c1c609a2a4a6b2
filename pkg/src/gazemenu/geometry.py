"""3D math primitives shared by the whole engine.

Conventions, fixed once for engine, traces and clients:
  world frame: right-handed, meters, +Y up, -Z forward at identity orientation
  panel local frame: +X right, +Y up, +Z front normal (toward the viewer)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True, slots=True)
class Vec3:
    x: float
    y: float
    z: float

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, s: float) -> "Vec3":
        return Vec3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def dot(self, other: "Vec3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def normalized(self) -> "Vec3":
        n = self.norm()
        if n < 1e-12:
            raise ValueError("cannot normalize a zero-length vector")
        return Vec3(self.x / n, self.y / n, self.z / n)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)


ZERO = Vec3(0.0, 0.0, 0.0)
UP = Vec3(0.0, 1.0, 0.0)
FORWARD = Vec3(0.0, 0.0, -1.0)


@dataclass(frozen=True, slots=True)
class Orientation:
    """Unit quaternion (w, x, y, z)."""

    w: float
    x: float
    y: float
    z: float

    def norm(self) -> float:
        return math.sqrt(self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z)

    def normalized(self) -> "Orientation":
        n = self.norm()
        if n < 1e-12:
            raise ValueError("cannot normalize a zero quaternion")
        return Orientation(self.w / n, self.x / n, self.y / n, self.z / n)

    def rotate(self, v: Vec3) -> Vec3:
        """Apply the rotation to a vector (local -> world)."""
        # t = 2 q_vec x v; v' = v + w t + q_vec x t
        tx = 2.0 * (self.y * v.z - self.z * v.y)
        ty = 2.0 * (self.z * v.x - self.x * v.z)
        tz = 2.0 * (self.x * v.y - self.y * v.x)
        return Vec3(
            v.x + self.w * tx + (self.y * tz - self.z * ty),
            v.y + self.w * ty + (self.z * tx - self.x * tz),
            v.z + self.w * tz + (self.x * ty - self.y * tx),
        )

    def rotate_inverse(self, v: Vec3) -> Vec3:
        """Apply the inverse rotation (world -> local)."""
        return Orientation(self.w, -self.x, -self.y, -self.z).rotate(v)

    @staticmethod
    def from_basis(x_axis: Vec3, y_axis: Vec3, z_axis: Vec3) -> "Orientation":
        """Quaternion for the rotation whose local axes map onto the given
        orthonormal world vectors (matrix columns x_axis, y_axis, z_axis)."""
        m00, m01, m02 = x_axis.x, y_axis.x, z_axis.x
        m10, m11, m12 = x_axis.y, y_axis.y, z_axis.y
        m20, m21, m22 = x_axis.z, y_axis.z, z_axis.z
        trace = m00 + m11 + m22
        if trace > 0.0:
            s = math.sqrt(trace + 1.0) * 2.0
            q = Orientation(0.25 * s, (m21 - m12) / s, (m02 - m20) / s, (m10 - m01) / s)
        elif m00 > m11 and m00 > m22:
            s = math.sqrt(1.0 + m00 - m11 - m22) * 2.0
            q = Orientation((m21 - m12) / s, 0.25 * s, (m01 + m10) / s, (m02 + m20) / s)
        elif m11 > m22:
            s = math.sqrt(1.0 + m11 - m00 - m22) * 2.0
            q = Orientation((m02 - m20) / s, (m01 + m10) / s, 0.25 * s, (m12 + m21) / s)
        else:
            s = math.sqrt(1.0 + m22 - m00 - m11) * 2.0
            q = Orientation((m10 - m01) / s, (m02 + m20) / s, (m12 + m21) / s, 0.25 * s)
        return q.normalized()


IDENTITY = Orientation(1.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class Pose:
    position: Vec3
    orientation: Orientation

    def right(self) -> Vec3:
        return self.orientation.rotate(Vec3(1.0, 0.0, 0.0))

    def up(self) -> Vec3:
        return self.orientation.rotate(Vec3(0.0, 1.0, 0.0))

    def normal(self) -> Vec3:
        """Local +Z in world coordinates (panel front / palm normal)."""
        return self.orientation.rotate(Vec3(0.0, 0.0, 1.0))

    def forward(self) -> Vec3:
        """Local -Z in world coordinates (head viewing direction)."""
        return self.orientation.rotate(Vec3(0.0, 0.0, -1.0))


@dataclass(frozen=True, slots=True)
class Ray:
    origin: Vec3
    direction: Vec3  # unit length


@dataclass(frozen=True, slots=True)
class PanelExtent:
    width: float
    height: float


class PanelPoint(NamedTuple):
    """Point on a panel: u left->right, v bottom->top, both in [0, 1]."""

    u: float
    v: float


def ray_panel_intersection(ray: Ray, panel: Pose, extent: PanelExtent) -> PanelPoint | None:
    """Intersect a ray with the front face of a panel rectangle.

    Returns None for back-face approaches, rays parallel to the panel
    plane, hits behind the ray origin, and misses of the rectangle.
    """
    normal = panel.normal()
    denom = ray.direction.dot(normal)
    if denom >= -1e-12:  # parallel, or approaching the back face
        return None
    t = (panel.position - ray.origin).dot(normal) / denom
    if t <= 0.0:
        return None
    hit = ray.origin + ray.direction * t
    rel = hit - panel.position
    u = rel.dot(panel.right()) / extent.width + 0.5
    v = rel.dot(panel.up()) / extent.height + 0.5
    if 0.0 <= u <= 1.0 and 0.0 <= v <= 1.0:
        return PanelPoint(u, v)
    return None


def panel_point_to_world(panel: Pose, extent: PanelExtent, point: PanelPoint) -> Vec3:
    """World position of a (u, v) panel point."""
    return (
        panel.position
        + panel.right() * ((point.u - 0.5) * extent.width)
        + panel.up() * ((point.v - 0.5) * extent.height)
    )


def billboard_toward(panel_position: Vec3, head_position: Vec3, world_up: Vec3 = UP) -> Orientation:
    """Orientation whose +Z normal points from the panel at the head.

    Local up is world_up projected perpendicular to the normal; when the
    normal is parallel to world_up the local up falls back to world -Z.

    Raises ValueError when panel and head coincide.
    """
    offset = head_position - panel_position
    if offset.norm() < 1e-12:
        raise ValueError("panel position coincides with head position")
    z_axis = offset.normalized()
    for candidate in (world_up, Vec3(0.0, 0.0, -1.0), Vec3(0.0, 1.0, 0.0)):
        projected = candidate - z_axis * candidate.dot(z_axis)
        if projected.norm() >= 1e-6:
            y_axis = projected.normalized()
            break
    x_axis = y_axis.cross(z_axis)
    return Orientation.from_basis(x_axis, y_axis, z_axis)


def horizontal_away_direction(from_point: Vec3, to_point: Vec3, fallback: Vec3 = FORWARD) -> Vec3:
    """Unit direction from from_point to to_point with Y zeroed.

    Degenerate horizontal offsets fall back to the horizontal projection
    of `fallback` (the engine passes the head's forward vector), and to
    world -Z when that projection is degenerate as well.
    """
    d = Vec3(to_point.x - from_point.x, 0.0, to_point.z - from_point.z)
    if d.norm() >= 1e-6:
        return d.normalized()
    f = Vec3(fallback.x, 0.0, fallback.z)
    if f.norm() >= 1e-6:
        return f.normalized()
    return FORWARD
