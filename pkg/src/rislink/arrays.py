"""Steering vectors for uniform rectangular and linear antenna arrays.

Arrays live in the local yOz plane: ``m_h`` elements run along y and
``m_v`` along z. A uniform linear array is the ``m_v = 1`` special case.

The per-element phase term uses elevation measured from the horizontal
plane, while :mod:`rislink.geometry` measures elevation from +z (polar).
The conversion ``elev = pi/2 - phi`` happens here and only here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import Direction


@dataclass(frozen=True)
class ArrayGeometry:
    """Element grid of a rectangular aperture."""

    m_h: int  # elements along y
    m_v: int  # elements along z
    spacing: float  # inter-element distance, m

    def __post_init__(self) -> None:
        if self.m_h < 1 or self.m_v < 1:
            raise ValueError("element counts must be at least 1")
        if not (math.isfinite(self.spacing) and self.spacing > 0.0):
            raise ValueError("element spacing must be positive and finite")

    @property
    def size(self) -> int:
        return self.m_h * self.m_v


def steering_vector(
    geometry: ArrayGeometry, direction: Direction, wavelength: float
) -> np.ndarray:
    """Per-element phase profile of a plane wave across the array.

    Element ``(p, q)`` with ``p`` horizontal and ``q`` vertical carries
    phase ``-2*pi*(spacing/wavelength) * (p cos(theta) cos(elev) + q sin(elev))``
    where ``elev = pi/2 - phi`` is the from-horizontal elevation. Entries
    are flattened so that index ``i = q * m_h + p``; every entry has unit
    modulus and the ``(0, 0)`` entry is exactly 1.
    """
    if not (math.isfinite(wavelength) and wavelength > 0.0):
        raise ValueError("wavelength must be positive and finite")
    elev = 0.5 * math.pi - direction.phi
    scale = -2.0 * math.pi * geometry.spacing / wavelength
    p = np.arange(geometry.m_h)
    q = np.arange(geometry.m_v)
    phase = scale * (
        q[:, None] * math.sin(elev)
        + p[None, :] * (math.cos(direction.theta) * math.cos(elev))
    )
    return np.exp(1j * phase).ravel()
