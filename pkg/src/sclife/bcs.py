"""BCS thermodynamics: overflow-free Fermi factors and the gap Delta(T)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .core import KB, DomainError, Material, validate_material
from .numerics import bisect_root, integrate_adaptive

# Weak-coupling ratio Delta(0) / (kB Tc) = pi / exp(Euler gamma).
BCS_WEAK_COUPLING_RATIO = math.pi / math.exp(0.57721566490153286061)

GAP_FLOOR = 1e-8
GAP_X_TOL = 1e-10
TC_WINDOW = 1e-6
# Fermi factors below exp(-45) are dropped from the gap integral.
_CUTOFF = 45.0


@dataclass(frozen=True)
class GapSolution:
    delta: float  # J
    delta0: float  # J
    reduced_gap: float
    converged: bool


def fermi_reduced(x: float) -> float:
    """1 / (exp(x) + 1) for a dimensionless argument, without overflow."""
    if x >= 0:
        e = math.exp(-x)
        return e / (1.0 + e)
    return 1.0 / (1.0 + math.exp(x))


def fermi_difference_reduced(x: float, h: float) -> float:
    """f(x) - f(x + h) for dimensionless x = E/kT and h = hbar*omega/kT.

    Written as f(x) * (1 - f(x + h)) * (1 - exp(-h)); every factor is
    evaluated without cancellation, so tiny ``h`` keeps full relative
    precision.
    """
    if h == 0.0:
        return 0.0
    return fermi_reduced(x) * fermi_reduced(-(x + h)) * -math.expm1(-h)


def fermi_occupation(E: float, T: float) -> float:
    """Fermi-Dirac occupation of energy ``E`` (J, relative to the Fermi level)
    at temperature ``T`` (K)."""
    if not T > 0:
        raise DomainError("T", f"temperature must be positive, got {T!r}")
    return fermi_reduced(E / (KB * T))


def fermi_difference(E: float, hw: float, T: float) -> float:
    """f(E) - f(E + hw) at temperature ``T``; energies in J."""
    if not T > 0:
        raise DomainError("T", f"temperature must be positive, got {T!r}")
    if hw < 0:
        raise DomainError("hw", f"photon energy must be non-negative, got {hw!r}")
    beta = 1.0 / (KB * T)
    return fermi_difference_reduced(E * beta, hw * beta)


def gap_zero_temperature(m: Material) -> float:
    """Zero-temperature gap Delta(0) = delta0_ratio * kB * tc, in J."""
    validate_material(m)
    return m.delta0_ratio * KB * m.tc


def _gap_integral(y: float, t: float) -> float:
    # 2 * int_0^inf f(E)/E dxi with xi = y sinh(u), energies in units of
    # the weak-coupling Delta(0); the 1/E factor cancels the Jacobian.
    b = BCS_WEAK_COUPLING_RATIO / t
    by = b * y
    if by >= _CUTOFF:
        return 0.0
    u_max = math.acosh(_CUTOFF / by)
    res = integrate_adaptive(
        lambda u: fermi_reduced(by * math.cosh(u)), 0.0, u_max, 1e-12, 1e-15
    )
    return 2.0 * res.value


@lru_cache(maxsize=8192)
def reduced_gap(t: float) -> float:
    """Delta(T)/Delta(0) at reduced temperature ``t = T/Tc``.

    The weak-coupling gap equation ``ln(1/y) = 2 int f(E)/E dxi`` is solved
    with the gap scale fixed so that the solution closes exactly at ``t = 1``.
    Results are cached; the function is pure, so concurrent use is safe.
    """
    if t <= 0.0:
        return 1.0
    if t >= 1.0 - TC_WINDOW:
        return 0.0

    def residual(y: float) -> float:
        return -math.log(y) - _gap_integral(y, t)

    if residual(GAP_FLOOR) <= 0.0:
        return 0.0
    y = bisect_root(residual, GAP_FLOOR, 1.0, GAP_X_TOL)
    return 0.0 if y < GAP_FLOOR else y


def gap(T: float, m: Material) -> GapSolution:
    """Self-consistent BCS gap at temperature ``T`` (K).

    The temperature dependence is the universal weak-coupling curve; its
    amplitude is ``delta0_ratio * kB * tc``, so strong-coupling materials can
    be described by raising ``delta0_ratio`` without moving the gap closing
    point away from ``tc``.
    """
    validate_material(m)
    if T < 0 or math.isnan(T):
        raise DomainError("T", f"temperature must be non-negative, got {T!r}")
    delta0 = m.delta0_ratio * KB * m.tc
    y = reduced_gap(T / m.tc)
    return GapSolution(delta=y * delta0, delta0=delta0, reduced_gap=y, converged=True)
