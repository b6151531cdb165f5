"""Superconductor optical conductivity and atom-chip spin-lifetime scaling."""

from .bcs import GapSolution, fermi_difference, fermi_occupation, gap, gap_zero_temperature
from .conductivity import (
    ModelKind,
    Sigma2Normalization,
    depths_from_sigma,
    dynes_sigma1_ratio,
    gorter_casimir_sigma,
    mb_sigma1_ratio,
    mb_sigma2_ratio,
    two_fluid_sigma,
)
from .core import (
    CONSTANTS,
    NIOBIUM,
    ComplexConductivity,
    ConvergenceError,
    Depths,
    DomainError,
    Material,
    PhysicalConstants,
    validate_material,
)
from .lifetime import (
    LifetimeProxy,
    LifetimeRatio,
    PeakReport,
    coherence_peak,
    lifetime_proxy,
    lifetime_ratio,
    sigma1_model_discrepancy,
)
from .numerics import (
    QuadratureResult,
    bisect_root,
    integrate_adaptive,
    integrate_semi_infinite,
    maximize_scalar,
)
from .sweep import (
    ConfigError,
    RunConfig,
    SweepError,
    SweepResult,
    emit_csv,
    emit_svg,
    parse_config,
    run_sweep,
)

__version__ = "0.1.0"
