"""Run configuration, temperature sweeps and CSV / SVG emission.

Config files are flat ``key = value`` documents::

    # niobium at the atomic transition frequency
    material.tc_kelvin = 9.25
    material.sigma_n_s_per_m = 2e8
    material.lambda_l0_m = 35e-9
    run.frequency_hz = 560e3
    run.model = mb
    sweep.t_min_kelvin = 0.925
    sweep.t_max_kelvin = 9.24
    sweep.points = 60
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields

from .conductivity import (
    ModelKind,
    Sigma2Normalization,
    conductivity,
    depths_from_sigma,
)
from .core import ConvergenceError, DomainError, Material, validate_material
from .lifetime import lifetime_proxy


class ConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None, key: str | None = None):
        self.line = line
        self.key = key
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key {key!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


class SweepError(ArithmeticError):
    """A grid point failed; ``temperature`` is the offending value (K)."""

    def __init__(self, temperature: float, cause: Exception):
        self.temperature = temperature
        self.cause = cause
        super().__init__(f"T = {temperature!r} K: {cause}")


@dataclass(frozen=True)
class SweepSpec:
    t_min_kelvin: float
    t_max_kelvin: float
    points: int
    spacing: str = "linear"

    def temperatures(self) -> list[float]:
        n = self.points
        lo, hi = self.t_min_kelvin, self.t_max_kelvin
        if self.spacing == "log":
            grid = [lo * (hi / lo) ** (i / (n - 1)) for i in range(n - 1)]
        else:
            grid = [lo + (hi - lo) * i / (n - 1) for i in range(n - 1)]
        return grid + [hi]


@dataclass(frozen=True)
class OutputSpec:
    csv_path: str | None = None
    svg_path: str | None = None


@dataclass(frozen=True)
class RunConfig:
    material: Material
    frequency_hz: float
    model: ModelKind
    normalization: Sigma2Normalization = Sigma2Normalization.NONE
    sweep: SweepSpec | None = None
    output: OutputSpec = OutputSpec()

    @property
    def omega(self) -> float:
        return 2.0 * math.pi * self.frequency_hz


@dataclass(frozen=True)
class SweepRow:
    temperature_K: float
    t_reduced: float
    sigma1_S_per_m: float
    sigma2_S_per_m: float
    skin_depth_m: float
    london_depth_m: float
    lifetime_proxy: float
    regime_valid: bool


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]


CSV_HEADER = ",".join(f.name for f in fields(SweepRow))
NUMERIC_FIELDS = tuple(f.name for f in fields(SweepRow) if f.name != "regime_valid")

_FLOAT_KEYS = {
    "material.tc_kelvin",
    "material.sigma_n_s_per_m",
    "material.lambda_l0_m",
    "material.delta0_over_kbtc",
    "material.dynes_gamma_over_delta0",
    "run.frequency_hz",
    "sweep.t_min_kelvin",
    "sweep.t_max_kelvin",
}
_KNOWN_KEYS = _FLOAT_KEYS | {
    "run.model",
    "run.normalize_sigma2",
    "sweep.points",
    "sweep.spacing",
    "output.csv_path",
    "output.svg_path",
}
_REQUIRED = (
    "material.tc_kelvin",
    "material.sigma_n_s_per_m",
    "material.lambda_l0_m",
    "run.frequency_hz",
    "run.model",
)
_MATERIAL_KEYS = {
    "tc": "material.tc_kelvin",
    "sigma_n": "material.sigma_n_s_per_m",
    "lambda_l0": "material.lambda_l0_m",
    "delta0_ratio": "material.delta0_over_kbtc",
    "dynes_gamma_ratio": "material.dynes_gamma_over_delta0",
}


def _enum_value(enum_cls, raw: str, line: int, key: str):
    try:
        return enum_cls(raw)
    except ValueError:
        allowed = ", ".join(e.value for e in enum_cls)
        raise ConfigError(f"expected one of {{{allowed}}}, got {raw!r}", line, key) from None


def parse_config(text: str) -> RunConfig:
    """Parse a ``key = value`` run configuration.

    Unknown and duplicate keys are rejected; every error carries the line
    number and key.
    """
    values: dict[str, object] = {}
    lines: dict[str, int] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep:
            raise ConfigError("expected 'key = value'", lineno, key or None)
        if key not in _KNOWN_KEYS:
            raise ConfigError("unknown key", lineno, key)
        if key in values:
            raise ConfigError(f"duplicate key (first set on line {lines[key]})", lineno, key)
        if not raw:
            raise ConfigError("empty value", lineno, key)
        if key in _FLOAT_KEYS:
            try:
                value: object = float(raw)
            except ValueError:
                raise ConfigError(f"not a number: {raw!r}", lineno, key) from None
            if not math.isfinite(value):
                raise ConfigError(f"not a finite number: {raw!r}", lineno, key)
        elif key == "sweep.points":
            try:
                value = int(raw)
            except ValueError:
                raise ConfigError(f"not an integer: {raw!r}", lineno, key) from None
        elif key == "run.model":
            value = _enum_value(ModelKind, raw, lineno, key)
        elif key == "run.normalize_sigma2":
            value = _enum_value(Sigma2Normalization, raw, lineno, key)
        elif key == "sweep.spacing":
            if raw not in ("linear", "log"):
                raise ConfigError(f"expected linear or log, got {raw!r}", lineno, key)
            value = raw
        else:
            value = raw
        values[key] = value
        lines[key] = lineno

    for key in _REQUIRED:
        if key not in values:
            raise ConfigError("missing required key", key=key)

    material = Material(
        tc=values["material.tc_kelvin"],
        sigma_n=values["material.sigma_n_s_per_m"],
        lambda_l0=values["material.lambda_l0_m"],
        delta0_ratio=values.get("material.delta0_over_kbtc", 1.764),
        dynes_gamma_ratio=values.get("material.dynes_gamma_over_delta0", 0.0),
    )
    try:
        validate_material(material)
    except DomainError as exc:
        key = _MATERIAL_KEYS[exc.field]
        raise ConfigError(str(exc), lines.get(key), key) from None

    if not values["run.frequency_hz"] > 0:
        raise ConfigError("must be positive", lines["run.frequency_hz"], "run.frequency_hz")
    model = values["run.model"]

    sweep = None
    sweep_keys = [k for k in values if k.startswith("sweep.")]
    if sweep_keys:
        for key in ("sweep.t_min_kelvin", "sweep.t_max_kelvin", "sweep.points"):
            if key not in values:
                raise ConfigError("missing required key", key=key)
        sweep = SweepSpec(
            t_min_kelvin=values["sweep.t_min_kelvin"],
            t_max_kelvin=values["sweep.t_max_kelvin"],
            points=values["sweep.points"],
            spacing=values.get("sweep.spacing", "linear"),
        )
        _check_sweep(sweep, material, model, lines)

    return RunConfig(
        material=material,
        frequency_hz=values["run.frequency_hz"],
        model=model,
        normalization=values.get("run.normalize_sigma2", Sigma2Normalization.NONE),
        sweep=sweep,
        output=OutputSpec(values.get("output.csv_path"), values.get("output.svg_path")),
    )


def _check_sweep(sweep: SweepSpec, m: Material, model: ModelKind, lines: dict[str, int]):
    def fail(message, key):
        raise ConfigError(message, lines.get(key), key)

    if sweep.points < 2:
        fail("need at least 2 points", "sweep.points")
    if not sweep.t_min_kelvin > 0:
        fail("must be positive", "sweep.t_min_kelvin")
    if not sweep.t_min_kelvin < sweep.t_max_kelvin:
        fail("t_max must exceed t_min", "sweep.t_max_kelvin")
    if model is ModelKind.GORTER_CASIMIR and sweep.t_max_kelvin > m.tc:
        fail("Gorter-Casimir sweeps must stay at or below tc", "sweep.t_max_kelvin")


def evaluate_row(
    T: float, model: ModelKind, omega: float, m: Material, norm: Sigma2Normalization
) -> SweepRow:
    sigma = conductivity(model, T, omega, m, norm)
    depths = depths_from_sigma(sigma, omega)
    proxy = lifetime_proxy(sigma)
    return SweepRow(
        temperature_K=T,
        t_reduced=T / m.tc,
        sigma1_S_per_m=sigma.sigma1,
        sigma2_S_per_m=sigma.sigma2,
        skin_depth_m=depths.skin_depth,
        london_depth_m=depths.london_depth,
        lifetime_proxy=proxy.value,
        regime_valid=proxy.regime_valid,
    )


def _safe_row(args) -> SweepRow | tuple[float, Exception]:
    # failures come back as values so worker processes never unwind mid-map
    try:
        return evaluate_row(*args)
    except (DomainError, ConvergenceError, ArithmeticError) as exc:
        return args[0], exc


def map_ordered(func, jobs: list, workers: int) -> list:
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(func, jobs))
    return [func(job) for job in jobs]


def run_sweep(cfg: RunConfig, workers: int = 1) -> SweepResult:
    """Evaluate conductivity, depths and lifetime proxy on the sweep grid.

    With ``workers > 1`` grid points are computed in worker processes; rows
    are always returned in grid order, so output does not depend on
    scheduling. The first failing temperature (in grid order) raises
    :class:`SweepError`.
    """
    if cfg.sweep is None:
        raise ConfigError("configuration has no sweep section", key="sweep.points")
    jobs = [
        (T, cfg.model, cfg.omega, cfg.material, cfg.normalization)
        for T in cfg.sweep.temperatures()
    ]
    rows = []
    for item in map_ordered(_safe_row, jobs, workers):
        if isinstance(item, tuple):
            raise SweepError(*item)
        rows.append(item)
    return SweepResult(tuple(rows))


def format_float(x: float) -> str:
    """Lowercase scientific notation, 9 significant digits, bare exponent
    (``6.09371000e20``); infinities render as ``inf``."""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    mantissa, exponent = f"{x:.8e}".split("e")
    return f"{mantissa}e{int(exponent)}"


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return format_float(value)


def emit_table(header: list[str], rows: list[tuple]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_format_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def emit_csv(result: SweepResult) -> str:
    return emit_table(CSV_HEADER.split(","), [astuple(row) for row in result.rows])


def parse_csv(text: str) -> list[dict[str, float | bool]]:
    """Read a document produced by :func:`emit_csv` back into dictionaries."""
    header, *body = text.rstrip("\n").split("\n")
    names = header.split(",")
    out = []
    for line in body:
        row: dict[str, float | bool] = {}
        for name, cell in zip(names, line.split(","), strict=True):
            row[name] = cell == "true" if cell in ("true", "false") else float(cell)
        out.append(row)
    return out


_SVG_W, _SVG_H = 800, 600
_PLOT = (90.0, 40.0, 760.0, 520.0)  # left, top, right, bottom


def _axis_range(values: list[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if lo == hi:
        return lo - 1.0, hi + 1.0
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def emit_svg(result: SweepResult, series: str = "sigma1_S_per_m") -> str:
    """Standalone SVG line plot of ``series`` against temperature.

    Non-finite samples (e.g. an infinite London depth at Tc) are left out of
    the polyline.
    """
    if series not in NUMERIC_FIELDS:
        raise DomainError("series", f"unknown numeric field {series!r}")
    pts = [
        (row.temperature_K, getattr(row, series))
        for row in result.rows
        if math.isfinite(getattr(row, series))
    ]
    left, top, right, bottom = _PLOT
    coords = ""
    x_lo = x_hi = y_lo = y_hi = 0.0
    if pts:
        x_lo, x_hi = _axis_range([p[0] for p in pts])
        y_lo, y_hi = _axis_range([p[1] for p in pts])
        coords = " ".join(
            f"{left + (x - x_lo) / (x_hi - x_lo) * (right - left):.3f},"
            f"{bottom - (y - y_lo) / (y_hi - y_lo) * (bottom - top):.3f}"
            for x, y in pts
        )
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_W}" height="{_SVG_H}" '
        f'viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f'<rect x="0" y="0" width="{_SVG_W}" height="{_SVG_H}" fill="white"/>',
        f'<path d="M{left:.0f},{top:.0f} L{left:.0f},{bottom:.0f} L{right:.0f},{bottom:.0f}" '
        'fill="none" stroke="black" stroke-width="1"/>',
        f'<polyline fill="none" stroke="#1f4e9c" stroke-width="2" points="{coords}"/>',
        f'<text x="{(left + right) / 2:.0f}" y="{_SVG_H - 20}" text-anchor="middle" '
        'font-family="sans-serif" font-size="14">temperature_K</text>',
        f'<text x="20" y="{(top + bottom) / 2:.0f}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="14" transform="rotate(-90 20 {(top + bottom) / 2:.0f})">{series}</text>',
        f'<text x="{left:.0f}" y="{bottom + 18:.0f}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="11">{format_float(x_lo)}</text>',
        f'<text x="{right:.0f}" y="{bottom + 18:.0f}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="11">{format_float(x_hi)}</text>',
        f'<text x="{left - 6:.0f}" y="{bottom:.0f}" text-anchor="end" font-family="sans-serif" '
        f'font-size="11">{format_float(y_lo)}</text>',
        f'<text x="{left - 6:.0f}" y="{top + 4:.0f}" text-anchor="end" font-family="sans-serif" '
        f'font-size="11">{format_float(y_hi)}</text>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
