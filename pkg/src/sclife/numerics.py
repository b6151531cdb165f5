"""Numerical kernels: adaptive open quadrature, semi-infinite integration,
bisection and scalar maximization.

Everything here is deterministic; repeated calls return bit-identical results.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

from .core import ConvergenceError, DomainError

__all__ = [
    "QuadratureResult",
    "integrate_adaptive",
    "integrate_semi_infinite",
    "bisect_root",
    "maximize_scalar",
]

DEFAULT_REL_TOL = 1e-8
DEFAULT_ABS_TOL = 1e-12
DEFAULT_MAX_EVALUATIONS = 1_000_000

# 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
# Nodes are strictly interior, so endpoint values are never requested.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)
_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


def _gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """Kronrod estimate on [a, b] and |Kronrod - Gauss| as its error."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    try:
        fc = f(center)
        resk = fc * _WGK[7]
        resg = fc * _WG[3]
        resabs = abs(resk)
        for j in range(7):
            dx = half * _XGK[j]
            pair = f(center - dx) + f(center + dx)
            resk += _WGK[j] * pair
            resabs += _WGK[j] * abs(pair)
            if j % 2 == 1:
                resg += _WG[j // 2] * pair
    except (ZeroDivisionError, OverflowError) as exc:
        raise ConvergenceError(f"integrand failed on [{a!r}, {b!r}]: {exc}") from exc
    result = resk * half
    # roundoff floor
    err = max(abs((resk - resg) * half), 50.0 * _EPS * resabs * abs(half))
    if not (math.isfinite(result) and math.isfinite(err)):
        raise ConvergenceError(f"non-finite integrand value on [{a!r}, {b!r}]")
    return result, err


def integrate_adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_tol: float = DEFAULT_ABS_TOL,
    max_evaluations: int = DEFAULT_MAX_EVALUATIONS,
) -> QuadratureResult:
    """Globally adaptive Gauss-Kronrod (7/15) quadrature of ``f`` over [a, b].

    The interval with the largest error estimate is bisected until the summed
    error satisfies ``max(abs_tol, rel_tol * |value|)``. The rule is open, so
    integrable endpoint singularities such as ``x**-0.5`` are tolerated.

    Raises:
        DomainError: if ``a >= b``.
        ConvergenceError: if the evaluation budget is exhausted or the
            worst interval can no longer be split in floating point.
    """
    if not a < b:
        raise DomainError("a", f"need a < b, got [{a!r}, {b!r}]")
    value, err = _gk15(f, a, b)
    evaluations = 15
    # heap entries: (-err, left, right, value, err)
    heap = [(-err, a, b, value, err)]
    total, total_err = value, err
    iteration = 0
    while total_err > max(abs_tol, rel_tol * abs(total)):
        if evaluations + 30 > max_evaluations:
            raise ConvergenceError(
                f"tolerance not met after {evaluations} evaluations "
                f"(value {total!r}, error {total_err!r})"
            )
        _, lo, hi, v, e = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise ConvergenceError(f"interval [{lo!r}, {hi!r}] cannot be subdivided")
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        evaluations += 30
        heapq.heappush(heap, (-e1, lo, mid, v1, e1))
        heapq.heappush(heap, (-e2, mid, hi, v2, e2))
        iteration += 1
        if iteration % 64 == 0:
            total = math.fsum(item[3] for item in heap)
            total_err = math.fsum(item[4] for item in heap)
        else:
            total += v1 + v2 - v
            total_err += e1 + e2 - e
    total = math.fsum(item[3] for item in heap)
    total_err = math.fsum(item[4] for item in heap)
    return QuadratureResult(total, total_err, evaluations)


def integrate_semi_infinite(
    f: Callable[[float], float],
    a: float,
    decay_scale: float,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_tol: float = DEFAULT_ABS_TOL,
    max_evaluations: int = DEFAULT_MAX_EVALUATIONS,
) -> QuadratureResult:
    """Integrate ``f`` over [a, inf).

    The substitution ``u = (x - a) / (x - a + decay_scale)`` maps the range
    onto (0, 1), which is then handed to :func:`integrate_adaptive`.
    """
    if not decay_scale > 0:
        raise DomainError("decay_scale", f"must be positive, got {decay_scale!r}")

    def mapped(u: float) -> float:
        one_minus = 1.0 - u
        x = a + decay_scale * u / one_minus
        fx = f(x)
        if fx == 0.0:
            return 0.0
        return fx * decay_scale / (one_minus * one_minus)

    return integrate_adaptive(mapped, 0.0, 1.0, rel_tol, abs_tol, max_evaluations)


def bisect_root(
    f: Callable[[float], float], lo: float, hi: float, x_tol: float = 1e-12
) -> float:
    """Plain bisection. Only the sign of ``f`` is ever inspected."""
    if not lo < hi:
        raise DomainError("lo", f"need lo < hi, got [{lo!r}, {hi!r}]")
    flo = f(lo)
    if flo == 0.0:
        return lo
    fhi = f(hi)
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise DomainError("bracket", f"no sign change on [{lo!r}, {hi!r}]")
    lo_positive = flo > 0
    while hi - lo > x_tol:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == lo_positive:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def maximize_scalar(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    x_tol: float = 1e-8,
    grid_points: int = 200,
) -> tuple[float, float]:
    """Maximize ``f`` on [lo, hi].

    A uniform scan of ``grid_points`` points locates the best sample; a
    golden-section search on its two neighbouring cells then refines it.
    Returns ``(x_star, f(x_star))``, where ``f_star`` is the value actually
    computed at ``x_star``.
    """
    if not lo < hi:
        raise DomainError("lo", f"need lo < hi, got [{lo!r}, {hi!r}]")
    if grid_points < 2:
        raise DomainError("grid_points", "need at least 2 points")
    step = (hi - lo) / (grid_points - 1)
    xs = [lo + i * step for i in range(grid_points - 1)] + [hi]
    values = [f(x) for x in xs]
    best = max(range(grid_points), key=lambda i: (values[i], -i))
    best_x, best_f = xs[best], values[best]

    a = xs[max(best - 1, 0)]
    b = xs[min(best + 1, grid_points - 1)]
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    candidates = [(c, fc), (d, fd)]
    while b - a > x_tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
            candidates.append((c, fc))
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
            candidates.append((d, fd))
    for x, fx in candidates:
        if fx > best_f:
            best_x, best_f = x, fx
    return best_x, best_f
