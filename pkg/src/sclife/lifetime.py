"""Spin-flip lifetime proxy tau ~ sigma2**1.5 / sigma1 = delta**2 / (2 lambda**3 sqrt(omega mu0)).

Only proxies and ratios are computed here. The proportionality constant
(atom-surface distance, matrix elements) is deliberately absent, so no
absolute lifetime in seconds is ever produced.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from .conductivity import (
    ModelKind,
    Sigma2Normalization,
    conductivity,
    dynes_sigma1_ratio,
    mb_sigma1_ratio,
)
from .core import MU0, ComplexConductivity, DomainError, Material, validate_material
from .numerics import maximize_scalar

# sigma2 >= 100 sigma1  <=>  lambda/delta <= sqrt(1/200)
REGIME_FACTOR = 100.0

PEAK_T_RANGE = (0.02, 0.999)
PEAK_X_TOL = 1e-4
DISCREPANCY_T_RANGE = (0.05, 0.999)
DISCREPANCY_GRID = 201


@dataclass(frozen=True)
class LifetimeProxy:
    value: float  # (S/m)**0.5
    regime_valid: bool  # lambda_L << delta, i.e. the asymptotic formula applies


@dataclass(frozen=True)
class LifetimeRatio:
    value: float
    regime_valid: bool

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class PeakReport:
    t_peak: float
    height: float
    gamma_ratio: float


def lifetime_proxy(sigma: ComplexConductivity) -> LifetimeProxy:
    if not sigma.sigma1 > 0:
        raise DomainError("sigma1", "lifetime proxy needs sigma1 > 0")
    if sigma.sigma2 < 0:
        raise DomainError("sigma2", "sigma2 must be non-negative")
    return LifetimeProxy(
        value=sigma.sigma2**1.5 / sigma.sigma1,
        regime_valid=sigma.sigma2 >= REGIME_FACTOR * sigma.sigma1,
    )


def lifetime_ratio(
    model: ModelKind,
    T1: float,
    T2: float,
    omega: float,
    m: Material,
    norm: Sigma2Normalization = Sigma2Normalization.NONE,
) -> LifetimeRatio:
    """tau(T1) / tau(T2) under ``model``; the flag is set only if both
    temperatures are in the thin-London-layer regime."""
    p1 = lifetime_proxy(conductivity(model, T1, omega, m, norm))
    p2 = p1 if T2 == T1 else lifetime_proxy(conductivity(model, T2, omega, m, norm))
    return LifetimeRatio(p1.value / p2.value, p1.regime_valid and p2.regime_valid)


def coherence_peak(m: Material, omega: float, gamma_ratio: float = 0.0) -> PeakReport:
    """Locate the maximum of sigma1/sigma_n below Tc (the coherence peak)."""
    if not gamma_ratio >= 0:
        raise DomainError("gamma_ratio", f"must be non-negative, got {gamma_ratio!r}")
    m = validate_material(dataclasses.replace(m, dynes_gamma_ratio=gamma_ratio))
    if gamma_ratio == 0:
        ratio = mb_sigma1_ratio
    else:
        ratio = dynes_sigma1_ratio

    t_peak, height = maximize_scalar(
        lambda t: ratio(omega, t * m.tc, m), *PEAK_T_RANGE, PEAK_X_TOL
    )
    return PeakReport(t_peak=t_peak, height=height, gamma_ratio=gamma_ratio)


def sigma1_model_discrepancy(m: Material, omega: float) -> float:
    """Largest factor by which Mattis-Bardeen sigma1 exceeds the t**4 law.

    At fixed sigma2 the lifetime scales as 1/sigma1, so this bounds the
    multiplicative lifetime change from swapping the sigma1 model.
    """
    validate_material(m)

    def excess(t: float) -> float:
        return mb_sigma1_ratio(omega, t * m.tc, m) / t**4

    _, worst = maximize_scalar(
        excess, *DISCREPANCY_T_RANGE, PEAK_X_TOL, grid_points=DISCREPANCY_GRID
    )
    return worst


def depth_form(skin_depth: float, london_depth: float, omega: float) -> float:
    """delta**2 / (2 lambda**3 sqrt(omega mu0)); equals the sigma form exactly."""
    if math.isinf(london_depth):
        return 0.0
    return skin_depth**2 / (2.0 * london_depth**3 * math.sqrt(omega * MU0))
