"""Command-line entry point.

Exit codes: 0 success, 2 configuration or usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from .conductivity import ModelKind, gorter_casimir_sigma, mb_sigma1_ratio
from .core import ConvergenceError, DomainError
from .lifetime import coherence_peak, lifetime_ratio
from .sweep import (
    ConfigError,
    OutputSpec,
    RunConfig,
    SweepError,
    SweepResult,
    emit_csv,
    emit_svg,
    emit_table,
    evaluate_row,
    format_float,
    map_ordered,
    parse_config,
    run_sweep,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sclife",
        description="Superconductor conductivity models and spin-lifetime proxies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--config", required=True, type=Path, help="key = value config file")
        return p

    p = command("sigma", "print conductivity, depths and lifetime proxy at one temperature")
    p.add_argument("--temp", required=True, type=float, help="temperature (K)")
    p.add_argument("--freq", type=float, help="frequency (Hz), overrides run.frequency_hz")

    p = command("sweep", "evaluate the configured temperature sweep")
    p.add_argument("--out", help="CSV output path (default: stdout)")
    p.add_argument("--svg", help="SVG output path")
    p.add_argument("--series", default="sigma1_S_per_m", help="column plotted in the SVG")
    p.add_argument("--workers", type=int, default=1, help="worker processes")

    p = command("peak", "locate the coherence peak of sigma1/sigma_n")
    p.add_argument("--gamma", type=float, help="Dynes broadening Gamma/Delta(0)")

    p = command("ratio", "lifetime ratio tau(T1)/tau(T2) under the configured model")
    p.add_argument("--t1", required=True, type=float, help="first temperature (K)")
    p.add_argument("--t2", required=True, type=float, help="second temperature (K)")

    p = command("compare", "Gorter-Casimir versus Mattis-Bardeen sigma1 along the sweep")
    p.add_argument("--out", help="CSV output path (default: stdout)")
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    return parser


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def _cmd_sigma(cfg: RunConfig, args) -> None:
    row = evaluate_row(args.temp, cfg.model, cfg.omega, cfg.material, cfg.normalization)
    sys.stdout.write(emit_csv(SweepResult((row,))))


def _cmd_sweep(cfg: RunConfig, args) -> None:
    output = OutputSpec(
        csv_path=args.out if args.out is not None else cfg.output.csv_path,
        svg_path=args.svg if args.svg is not None else cfg.output.svg_path,
    )
    result = run_sweep(cfg, workers=args.workers)
    svg = emit_svg(result, args.series) if output.svg_path else None
    _write(output.csv_path, emit_csv(result))
    if svg is not None:
        _write(output.svg_path, svg)


def _cmd_peak(cfg: RunConfig, args) -> None:
    gamma = cfg.material.dynes_gamma_ratio if args.gamma is None else args.gamma
    report = coherence_peak(cfg.material, cfg.omega, gamma)
    sys.stdout.write(
        f"t_peak = {format_float(report.t_peak)}\n"
        f"T_peak_K = {format_float(report.t_peak * cfg.material.tc)}\n"
        f"height = {format_float(report.height)}\n"
        f"gamma_ratio = {format_float(report.gamma_ratio)}\n"
    )


def _cmd_ratio(cfg: RunConfig, args) -> None:
    r = lifetime_ratio(cfg.model, args.t1, args.t2, cfg.omega, cfg.material, cfg.normalization)
    flag = "true" if r.regime_valid else "false"
    sys.stdout.write(f"ratio = {format_float(r.value)}\nregime_valid = {flag}\n")


def _compare_row(job):
    T, omega, m = job
    try:
        gc = gorter_casimir_sigma(T, m, omega).sigma1
        mb = mb_sigma1_ratio(omega, T, m) * m.sigma_n
    except (DomainError, ConvergenceError) as exc:
        return T, exc
    return (T, T / m.tc, gc, mb, mb / gc)


def _cmd_compare(cfg: RunConfig, args) -> None:
    if cfg.sweep is None:
        raise ConfigError("compare needs a sweep section", key="sweep.points")
    if cfg.sweep.t_max_kelvin > cfg.material.tc:
        raise ConfigError("compare sweeps must stay at or below tc", key="sweep.t_max_kelvin")
    jobs = [(T, cfg.omega, cfg.material) for T in cfg.sweep.temperatures()]
    rows = []
    for item in map_ordered(_compare_row, jobs, args.workers):
        if len(item) == 2:
            raise SweepError(*item)
        rows.append(item)
    header = ["temperature_K", "t_reduced", "sigma1_gc_S_per_m", "sigma1_mb_S_per_m", "mb_over_gc"]
    out = args.out if args.out is not None else cfg.output.csv_path
    _write(out, emit_table(header, rows))


_COMMANDS = {
    "sigma": _cmd_sigma,
    "sweep": _cmd_sweep,
    "peak": _cmd_peak,
    "ratio": _cmd_ratio,
    "compare": _cmd_compare,
}


def dispatch(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_CONFIG
    try:
        cfg = parse_config(args.config.read_text(encoding="utf-8"))
        if getattr(args, "freq", None) is not None:
            if not args.freq > 0:
                raise ConfigError("--freq must be positive", key="run.frequency_hz")
            cfg = dataclasses.replace(cfg, frequency_hz=args.freq)
        if getattr(args, "workers", 1) < 1:
            raise ConfigError("--workers must be at least 1")
        _COMMANDS[args.command](cfg, args)
    except (ConfigError, OSError) as exc:
        print(f"sclife: config error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_CONFIG
    except SweepError as exc:
        print(f"sclife: numerical failure at {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (DomainError, ConvergenceError) as exc:
        print(f"sclife: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def main() -> None:
    sys.exit(dispatch())
