"""Physical constants, shared value types and error classes.

All quantities are SI: kelvin, siemens per metre, metres, joules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""

    def __init__(self, field: str, message: str | None = None):
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}" if message else field)

    def __reduce__(self):
        return type(self), (self.field, self.message)


class ConvergenceError(ArithmeticError):
    """A numerical routine did not reach its tolerance within budget."""


class PhysicalConstants(NamedTuple):
    mu0: float
    hbar: float
    kB: float


CONSTANTS = PhysicalConstants(
    mu0=4.0e-7 * math.pi,  # H/m
    hbar=1.054571817e-34,  # J s
    kB=1.380649e-23,  # J/K
)

MU0 = CONSTANTS.mu0
HBAR = CONSTANTS.hbar
KB = CONSTANTS.kB


@dataclass(frozen=True)
class Material:
    """Superconductor parameters.

    Attributes:
        tc: Critical temperature (K).
        sigma_n: Normal-state conductivity at ``tc`` (S/m).
        lambda_l0: Zero-temperature London penetration depth (m).
        delta0_ratio: Zero-temperature gap in units of ``kB * tc``.
        dynes_gamma_ratio: Quasiparticle broadening in units of the
            zero-temperature gap.
    """

    tc: float
    sigma_n: float
    lambda_l0: float
    delta0_ratio: float = 1.764
    dynes_gamma_ratio: float = 0.0


# sigma_n is a placeholder; override it with a measured value.
NIOBIUM = Material(tc=9.25, sigma_n=2.0e8, lambda_l0=35e-9)


@dataclass(frozen=True)
class ComplexConductivity:
    sigma1: float  # S/m
    sigma2: float  # S/m


@dataclass(frozen=True)
class Depths:
    """Skin depth and London depth (m); ``math.inf`` when the matching
    conductivity component vanishes."""

    skin_depth: float
    london_depth: float


def validate_material(m: Material) -> Material:
    """Return ``m`` unchanged if every field is in range.

    Raises DomainError naming the first offending field otherwise.
    """
    checks = (
        ("tc", m.tc > 0),
        ("sigma_n", m.sigma_n > 0),
        ("lambda_l0", m.lambda_l0 > 0),
        ("delta0_ratio", m.delta0_ratio > 0),
        ("dynes_gamma_ratio", m.dynes_gamma_ratio >= 0),
    )
    for name, ok in checks:
        value = getattr(m, name)
        # NaN fails every comparison, infinity is rejected explicitly
        if not ok or not math.isfinite(value):
            raise DomainError(name, f"invalid value {value!r}")
    return m
