"""Local reference frames and spherical/Cartesian conversions.

Every node (base station, reflecting surface, user terminal) owns a local
Cartesian frame. Frames are pure translations of one another: composing a
point across frames is a componentwise sum, never a rotation.

Angle conventions used throughout the package:

* ``theta`` is the azimuth, measured from the +x axis toward +y.
* ``phi`` is the polar elevation, measured from the +z axis, in (0, pi).
  Two nodes at the same height see each other at ``phi = pi/2``.
* Separation distances are horizontal-plane distances. The slant range to
  a node is ``separation / sin(phi)``, which is why ``phi`` may not hit
  0 or pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Position:
    """Cartesian point in meters, relative to the origin of a local frame."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.x, self.y, self.z)):
            raise ValueError("position coordinates must be finite")


@dataclass(frozen=True)
class Direction:
    """Azimuth/elevation couple pointing from a frame origin toward a node.

    ``phi`` is polar (from +z). The open interval keeps the slant range
    ``d / sin(phi)`` defined.
    """

    theta: float  # azimuth, rad
    phi: float  # polar elevation, rad, in (0, pi)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError("direction angles must be finite")
        if not 0.0 < self.phi < math.pi:
            raise ValueError(
                "slant range undefined: polar elevation must lie strictly in (0, pi)"
            )


@dataclass(frozen=True)
class Placement:
    """Horizontal separation plus pointing direction of one node seen from another."""

    separation: float  # m, horizontal-plane distance
    direction: Direction

    def __post_init__(self) -> None:
        if not (math.isfinite(self.separation) and self.separation > 0.0):
            raise ValueError("separation must be positive and finite")


def placement_to_cartesian(placement: Placement) -> Position:
    """Return the Cartesian offset of a placed node in the observer's frame.

    The slant range is ``rho = separation / sin(phi)``; the point is
    ``(rho sin(phi) cos(theta), rho sin(theta) sin(phi), rho cos(phi))``.
    The horizontal distance ``hypot(x, y)`` of the result equals the input
    separation.
    """
    sin_phi = math.sin(placement.direction.phi)
    if sin_phi <= 0.0:
        raise ValueError("slant range undefined: sin(elevation) must be positive")
    theta = placement.direction.theta
    rho = placement.separation / sin_phi
    return Position(
        rho * sin_phi * math.cos(theta),
        rho * math.sin(theta) * sin_phi,
        rho * math.cos(placement.direction.phi),
    )


def compose_frames(inner_origin: Position, point_in_inner: Position) -> Position:
    """Express a point of a translated frame in the outer frame.

    Frames differ by translation only, so this is a componentwise sum:
    given the inner frame's origin in the outer frame and a point in the
    inner frame, the result is the point in the outer frame.
    """
    return Position(
        inner_origin.x + point_in_inner.x,
        inner_origin.y + point_in_inner.y,
        inner_origin.z + point_in_inner.z,
    )


def cartesian_to_placement(position: Position) -> Placement:
    """Recover the (separation, direction) view of a Cartesian offset.

    The azimuth uses the quadrant-aware two-argument arctangent,
    normalized into [0, 2*pi). The returned separation is the horizontal
    distance ``hypot(x, y)``, identical to ``rho * sin(phi)``.
    """
    horizontal = math.hypot(position.x, position.y)
    if horizontal == 0.0:
        raise ValueError("azimuth undefined: position lies on the z-axis")
    rho = math.hypot(position.x, position.y, position.z)
    cos_phi = min(1.0, max(-1.0, position.z / rho))
    theta = math.atan2(position.y, position.x) % TWO_PI
    return Placement(horizontal, Direction(theta, math.acos(cos_phi)))
