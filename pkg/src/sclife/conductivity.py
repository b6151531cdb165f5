"""Complex conductivity models and conversions to skin / London depths.

Three models are provided:

* the Gorter-Casimir two-fluid laws, closed form;
* local (dirty-limit) Mattis-Bardeen, by quadrature;
* Mattis-Bardeen with Dynes quasiparticle broadening for sigma1.

Mattis-Bardeen integrals are evaluated in reduced units where energies are
measured in Delta(0), so results depend only on hbar*omega/Delta(0) and T/Tc.
"""

from __future__ import annotations

import cmath
import enum
import math

from .bcs import fermi_difference_reduced, fermi_reduced, reduced_gap
from .core import (
    HBAR,
    KB,
    MU0,
    ComplexConductivity,
    Depths,
    DomainError,
    Material,
    validate_material,
)
from .numerics import integrate_adaptive, integrate_semi_infinite

MB_REL_TOL = 1e-8
_MB_ABS_TOL = 1e-300


class ModelKind(enum.Enum):
    GORTER_CASIMIR = "gc"
    MATTIS_BARDEEN = "mb"
    MATTIS_BARDEEN_DYNES = "mb_dynes"


class Sigma2Normalization(enum.Enum):
    NONE = "none"
    MATCH_LAMBDA0 = "lambda0"


def _check_omega(omega: float) -> None:
    if not omega > 0 or not math.isfinite(omega):
        raise DomainError("omega", f"angular frequency must be positive, got {omega!r}")


def two_fluid_sigma(depths: Depths, omega: float) -> ComplexConductivity:
    """sigma = 2/(omega mu0 delta^2) + i/(omega mu0 lambda^2).

    An infinite depth gives a zero component.
    """
    _check_omega(omega)
    for name in ("skin_depth", "london_depth"):
        if not getattr(depths, name) > 0:
            raise DomainError(name, "depth must be positive")
    s1 = 0.0 if math.isinf(depths.skin_depth) else 2.0 / (omega * MU0 * depths.skin_depth**2)
    s2 = 0.0 if math.isinf(depths.london_depth) else 1.0 / (omega * MU0 * depths.london_depth**2)
    return ComplexConductivity(s1, s2)


def depths_from_sigma(sigma: ComplexConductivity, omega: float) -> Depths:
    """Inverse of :func:`two_fluid_sigma`; zero components map to ``inf``."""
    _check_omega(omega)
    if sigma.sigma1 < 0 or sigma.sigma2 < 0:
        raise DomainError("sigma", "conductivity components must be non-negative")
    skin = math.inf if sigma.sigma1 == 0 else math.sqrt(2.0 / (MU0 * omega * sigma.sigma1))
    london = math.inf if sigma.sigma2 == 0 else math.sqrt(1.0 / (MU0 * omega * sigma.sigma2))
    return Depths(skin, london)


def sigma2_zero_temperature(m: Material, omega: float) -> float:
    """1/(omega mu0 lambda_L(0)^2), the superfluid response set by the material."""
    return 1.0 / (omega * MU0 * m.lambda_l0**2)


def gorter_casimir_sigma(T: float, m: Material, omega: float) -> ComplexConductivity:
    """Two-fluid conductivity with the t**4 normal fraction, valid for 0 <= T <= Tc."""
    validate_material(m)
    _check_omega(omega)
    if not 0 <= T <= m.tc:
        raise DomainError("T", f"Gorter-Casimir laws need 0 <= T <= Tc, got {T!r}")
    t4 = (T / m.tc) ** 4
    return ComplexConductivity(t4 * m.sigma_n, (1.0 - t4) * sigma2_zero_temperature(m, omega))


def _reduced_state(omega: float, T: float, m: Material) -> tuple[float, float, float]:
    """(gap, beta, photon energy) in units of Delta(0); beta is inf at T = 0."""
    validate_material(m)
    _check_omega(omega)
    if T < 0 or math.isnan(T):
        raise DomainError("T", f"temperature must be non-negative, got {T!r}")
    d0 = m.delta0_ratio * KB * m.tc
    w = HBAR * omega / d0
    d = reduced_gap(T / m.tc)
    if d > 0 and w >= 2 * d:
        raise DomainError(
            "omega", "hbar*omega >= 2*Delta(T): pair-breaking regime is not supported"
        )
    b = math.inf if T == 0 else m.delta0_ratio * m.tc / T
    return d, b, w


def _mb_sigma1_reduced(d: float, b: float, w: float, rel_tol: float) -> float:
    # sigma1/sigma_n = 2 int_d^inf [f(E)-f(E+w)]/w * g(E) dE
    bw = b * w
    scale = -math.expm1(-bw) / w  # (1 - exp(-beta w)) / w

    def thermal(E: float) -> float:
        return fermi_reduced(b * E) * fermi_reduced(-b * (E + w)) * scale

    def near_edge(u: float) -> float:
        # E = d cosh(u); dE / sqrt(E^2 - d^2) = du
        s = math.sinh(0.5 * u)
        e_minus = 2.0 * d * s * s
        E = d + e_minus
        num = E * E + d * d + w * E
        return thermal(E) * num / math.sqrt((e_minus + w) * (E + d + w))

    def tail(E: float) -> float:
        th = thermal(E)
        if th == 0.0:
            return 0.0
        em = E - d
        num = E * E + d * d + w * E
        return th * num / math.sqrt(em * (E + d) * (em + w) * (E + d + w))

    kt = 1.0 / b
    u_split = math.log1p(kt / d + math.sqrt(kt / d * (2.0 + kt / d)))
    head = integrate_adaptive(near_edge, 0.0, u_split, rel_tol, _MB_ABS_TOL).value
    rest = integrate_semi_infinite(tail, d + kt, kt, rel_tol, _MB_ABS_TOL).value
    return 2.0 * (head + rest)


def mb_sigma1_ratio(
    omega: float, T: float, m: Material, *, rel_tol: float = MB_REL_TOL
) -> float:
    """Mattis-Bardeen sigma1/sigma_n (dirty limit, hbar*omega < 2*Delta).

    Exactly 1 at and above Tc, exactly 0 at T = 0.
    """
    d, b, w = _reduced_state(omega, T, m)
    if d == 0.0:
        return 1.0
    if math.isinf(b):
        return 0.0
    return _mb_sigma1_reduced(d, b, w, rel_tol)


def _mb_sigma2_reduced(d: float, b: float, w: float, rel_tol: float) -> float:
    # sigma2/sigma_n = (1/w) int_{d-w}^{d} tanh(b(E+w)/2) g(E) dE, split at the
    # midpoint; on each half the singular end is removed by E = end -/+ u^2.
    def occupancy(E: float) -> float:
        return 1.0 if math.isinf(b) else math.tanh(0.5 * b * (E + w))

    def upper(u: float) -> float:
        uu = u * u
        E = d - uu
        num = E * E + d * d + w * E
        return 2.0 * occupancy(E) * num / math.sqrt((d + E) * (w - uu) * (E + w + d))

    def lower(u: float) -> float:
        uu = u * u
        E = d - w + uu
        num = E * E + d * d + w * E
        return 2.0 * occupancy(E) * num / math.sqrt((E + w + d) * (w - uu) * (d + E))

    u_half = math.sqrt(0.5 * w)
    hi = integrate_adaptive(upper, 0.0, u_half, rel_tol, _MB_ABS_TOL).value
    lo = integrate_adaptive(lower, 0.0, u_half, rel_tol, _MB_ABS_TOL).value
    return (hi + lo) / w


def mb_sigma2_ratio(
    omega: float, T: float, m: Material, *, rel_tol: float = MB_REL_TOL
) -> float:
    """Mattis-Bardeen sigma2/sigma_n; zero at and above Tc. ``T = 0`` is allowed."""
    d, b, w = _reduced_state(omega, T, m)
    if d == 0.0:
        return 0.0
    return _mb_sigma2_reduced(d, b, w, rel_tol)


def _dynes_factors(z_minus: complex, z_plus: complex, d: float) -> tuple[float, float]:
    """Broadened density-of-states and coherence factors, Re[z/s] and Re[d/s],
    for z = E + i*gamma given as z - d and z + d (s = sqrt(z^2 - d^2), Im s >= 0)."""
    s = cmath.sqrt(z_minus * z_plus)
    if s.imag < 0:
        s = -s
    z = z_minus + d
    return (z / s).real, (d / s).real


def _dynes_sigma1_reduced(
    d: float, b: float, w: float, g: float, rel_tol: float
) -> float:
    # (1/w) int_{-inf}^{inf} [f(E)-f(E+w)] [n(E)n(E+w) + p(E)p(E+w)] dE.
    # The integrand is symmetric under E -> -E - w, so integrate from -w/2
    # and double.
    bw = b * w

    def kernel(e_minus: float, jac: float) -> float:
        E = d + e_minus
        th = fermi_difference_reduced(b * E, bw)
        if th == 0.0:
            return 0.0
        n1, p1 = _dynes_factors(complex(e_minus, g), complex(E + d, g), d)
        n2, p2 = _dynes_factors(complex(e_minus + w, g), complex(E + w + d, g), d)
        return th / w * (n1 * n2 + p1 * p2) * jac

    def near_edge(u: float) -> float:
        s = math.sinh(0.5 * u)
        return kernel(2.0 * d * s * s, d * math.sinh(u))

    def tail(E: float) -> float:
        return kernel(E - d, 1.0)

    def below_edge(x: float) -> float:
        # E = d - x^2 covers [-w/2, d]
        return kernel(-x * x, 2.0 * x)

    kt = 1.0 / b
    u_split = math.log1p(kt / d + math.sqrt(kt / d * (2.0 + kt / d)))
    total = integrate_adaptive(near_edge, 0.0, u_split, rel_tol, _MB_ABS_TOL).value
    total += integrate_semi_infinite(tail, d + kt, kt, rel_tol, _MB_ABS_TOL).value
    if g > 0:
        x_max = math.sqrt(d + 0.5 * w)
        total += integrate_adaptive(below_edge, 0.0, x_max, rel_tol, _MB_ABS_TOL).value
    return 2.0 * total


def dynes_sigma1_ratio(
    omega: float, T: float, m: Material, *, rel_tol: float = MB_REL_TOL
) -> float:
    """Mattis-Bardeen sigma1/sigma_n with Dynes broadening E -> E + i*Gamma,
    Gamma = dynes_gamma_ratio * Delta(0). Gamma = 0 reproduces
    :func:`mb_sigma1_ratio`."""
    d, b, w = _reduced_state(omega, T, m)
    if d == 0.0:
        return 1.0
    g = m.dynes_gamma_ratio
    if math.isinf(b):
        if g == 0:
            return 0.0
        raise DomainError("T", "broadened conductivity needs T > 0")
    return _dynes_sigma1_reduced(d, b, w, g, rel_tol)


def lambda0_scale(m: Material, omega: float, *, rel_tol: float = MB_REL_TOL) -> float:
    """Factor mapping the Mattis-Bardeen sigma2 onto 1/(omega mu0 lambda_L(0)^2) at T = 0."""
    return sigma2_zero_temperature(m, omega) / (
        m.sigma_n * mb_sigma2_ratio(omega, 0.0, m, rel_tol=rel_tol)
    )


def conductivity(
    model: ModelKind,
    T: float,
    omega: float,
    m: Material,
    norm: Sigma2Normalization = Sigma2Normalization.NONE,
) -> ComplexConductivity:
    """Evaluate ``model`` at (T, omega).

    For the Mattis-Bardeen models sigma2 always comes from the unbroadened
    expression; ``MATCH_LAMBDA0`` rescales it so its T = 0 value equals
    1/(omega mu0 lambda_L(0)^2). The Gorter-Casimir model already carries
    that scale and ignores ``norm``.
    """
    if model is ModelKind.GORTER_CASIMIR:
        return gorter_casimir_sigma(T, m, omega)
    if model is ModelKind.MATTIS_BARDEEN:
        s1 = mb_sigma1_ratio(omega, T, m)
    elif model is ModelKind.MATTIS_BARDEEN_DYNES:
        s1 = dynes_sigma1_ratio(omega, T, m)
    else:
        raise DomainError("model", f"unknown model {model!r}")
    s2 = mb_sigma2_ratio(omega, T, m) * m.sigma_n
    if norm is Sigma2Normalization.MATCH_LAMBDA0 and s2 != 0.0:
        s2 *= lambda0_scale(m, omega)
    return ComplexConductivity(s1 * m.sigma_n, s2)
