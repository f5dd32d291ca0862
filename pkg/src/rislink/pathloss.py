"""Log-distance path loss with shadowing, atmospheric and foliage terms.

Loss bookkeeping is in dB/dBm; a simplified closed form in watts covers
the regime where shadowing, atmospheric and foliage losses are switched
off. Shadow draws are supplied by the caller so that the same environment
stays usable from seeded Monte Carlo code and from pinned-realization
runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# 3.0e8 keeps the 30 GHz carrier at exactly 1 cm, so far-field element
# counts for round geometries come out as round integers.
SPEED_OF_LIGHT = 3.0e8  # m/s


def wavelength(frequency: float) -> float:
    """Carrier wavelength in meters."""
    if not (math.isfinite(frequency) and frequency > 0.0):
        raise ValueError("frequency must be positive and finite")
    return SPEED_OF_LIGHT / frequency


@dataclass(frozen=True)
class LinkEnvironment:
    """Propagation environment shared by every link of one deployment."""

    frequency: float = 30e9  # Hz
    d0: float = 1.0  # reference distance, m
    mu: float = 2.0  # path-loss exponent
    shadow_sigma: float = 4.0  # shadow-factor standard deviation, dB
    atmospheric: float = 0.0  # attenuation coefficient, dB/m
    foliage_rate: float = 0.0  # foliage attenuation, dB/m, in [0, 10]
    foliage_depth: float = 0.0  # distance travelled inside foliage, m

    def __post_init__(self) -> None:
        if not (math.isfinite(self.frequency) and self.frequency > 0.0):
            raise ValueError("frequency must be positive and finite")
        if not (math.isfinite(self.d0) and self.d0 > 0.0):
            raise ValueError("d0 must be positive and finite")
        if not (math.isfinite(self.mu) and self.mu > 0.0):
            raise ValueError("mu must be positive and finite")
        if not (math.isfinite(self.shadow_sigma) and self.shadow_sigma >= 0.0):
            raise ValueError("shadow_sigma must be non-negative and finite")
        if not (math.isfinite(self.foliage_rate) and 0.0 <= self.foliage_rate <= 10.0):
            raise ValueError("foliage_rate must lie in [0, 10] dB/m")
        if not (math.isfinite(self.foliage_depth) and self.foliage_depth >= 0.0):
            raise ValueError("foliage_depth must be non-negative and finite")
        if not math.isfinite(self.atmospheric):
            raise ValueError("atmospheric must be finite")

    @property
    def wavelength(self) -> float:
        return wavelength(self.frequency)


@dataclass(frozen=True)
class ShadowDraw:
    """One dimensionless standard-normal realization of the shadow factor."""

    delta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.delta):
            raise ValueError("shadow draw must be finite")


def free_space_loss(env: LinkEnvironment) -> float:
    """Free-space loss at the reference distance, dB: 20 log10(4 pi d0 / lambda)."""
    return 20.0 * math.log10(4.0 * math.pi * env.d0 / env.wavelength)


def total_path_loss(
    env: LinkEnvironment, distance: float, shadow: ShadowDraw | None = None
) -> float:
    """Total loss in dB at the given TX-RX separation distance.

    Sum of free-space loss at d0, the log-distance term 10 mu log10(d/d0),
    the shadow term sigma*delta (0 when no draw is given), atmospheric
    attenuation over the full distance, and the foliage term.
    """
    if distance < env.d0:
        raise ValueError("inside reference distance: require d >= d0")
    loss = free_space_loss(env)
    loss += 10.0 * env.mu * math.log10(distance / env.d0)
    if shadow is not None:
        loss += env.shadow_sigma * shadow.delta
    loss += env.atmospheric * distance
    loss += env.foliage_rate * env.foliage_depth
    return loss


def received_power_dbm(p_tx_dbm: float, loss_db: float) -> float:
    """Received power in dBm: transmit power minus total loss."""
    return p_tx_dbm - loss_db


def received_power_watts(p_tx_w: float, env: LinkEnvironment, distance: float) -> float:
    """Received power in watts in the simplified regime.

    Valid when shadowing, atmospheric and foliage losses are excluded:
    ``p_tx * (lambda / (4 pi d0))^2 * (d0 / d)^mu``.
    """
    if distance < env.d0:
        raise ValueError("inside reference distance: require d >= d0")
    lam = env.wavelength
    return p_tx_w * (lam / (4.0 * math.pi * env.d0)) ** 2 * (env.d0 / distance) ** env.mu


def dbm_to_watts(p_dbm: float) -> float:
    return 10.0 ** ((p_dbm - 30.0) / 10.0)


def watts_to_dbm(p_w: float) -> float:
    if p_w <= 0.0:
        raise ValueError("power must be positive to convert to dBm")
    return 10.0 * math.log10(p_w) + 30.0
