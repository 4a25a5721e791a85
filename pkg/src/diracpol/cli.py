"""Command-line interface: spectrum | alpha | sweep | converge.

Exit codes are a stable API: 0 ok, 2 config error, 3 spectral gap collapse,
4 degenerate denominator, 5 no sign change in the bracketing run.  The
DIRAC_POL_THREADS environment variable caps sweep worker concurrency.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

import numpy as np

from .errors import (ConfigError, DegenerateDenominator, DiracPolError,
                     NoSignChange, SpectralGapCollapse)
from .config import RunConfig, load_config
from .basis import BoxBasis, assemble_dipole, assemble_hamiltonian
from .potential import PotentialSpec, validate_spec
from .spectrum import dipole_in_eigenbasis, solve_spectrum
from .shifts import shift_report
from .oracle import ht_occupied_sum_fit, stark_fit_ground
from .experiments import bracket_sign_change, convergence_study, depth_sweep
from . import serialization

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_GAP_COLLAPSE = 3
EXIT_DEGENERATE = 4
EXIT_NO_SIGN_CHANGE = 5


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-c", "--config", help="INI or JSON config file")
    parser.add_argument("--error-json", action="store_true",
                        help="emit machine-readable error JSON on failure")
    over = parser.add_argument_group("config overrides")
    over.add_argument("--depth-vector", type=float)
    over.add_argument("--depth-scalar", type=float)
    over.add_argument("--width", type=float)
    over.add_argument("--box-length", type=float)
    over.add_argument("--modes", type=int)
    over.add_argument("--quadrature-nodes", type=int)
    over.add_argument("--mass", type=float)
    over.add_argument("--charge", type=float)
    over.add_argument("--gap-tol", type=float)
    over.add_argument("--fields", help="comma-separated field strengths")
    over.add_argument("--format", choices=("csv", "json"), dest="out_format")
    over.add_argument("-o", "--output", dest="out_path")
    over.add_argument("--precision", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirac-pol",
        description="Polarizability of a 1D Dirac bound state, with and "
                    "without the Dirac-sea background",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues with sign classification")
    _add_common(p)

    p = sub.add_parser("alpha", help="reduced shifts and polarizabilities")
    _add_common(p)
    p.add_argument("--oracle", action="store_true",
                   help="append nonperturbative Stark-fit comparison")

    p = sub.add_parser("sweep", help="depth sweep of the polarizabilities")
    _add_common(p)
    p.add_argument("--depth-min", type=float, default=0.0)
    p.add_argument("--depth-max", type=float, required=True)
    p.add_argument("--depth-steps", type=int, default=16)
    p.add_argument("--bracket", action="store_true",
                   help="bisect the alpha_qm sign change and record the bracket")
    p.add_argument("--bracket-tol", type=float, default=1e-3)

    p = sub.add_parser("converge", help="truncation convergence table")
    _add_common(p)
    p.add_argument("--modes-list", required=True,
                   help="comma-separated sine-mode counts, e.g. 100,200,400")
    p.add_argument("--box-lengths", default="",
                   help="comma-separated box lengths (default: config value)")
    return parser


def _apply_overrides(cfg: RunConfig, args) -> RunConfig:
    pot = {}
    for key in ("depth_vector", "depth_scalar", "width"):
        if getattr(args, key) is not None:
            pot[key] = getattr(args, key)
    if pot:
        cfg = dataclasses.replace(cfg, potential=dataclasses.replace(cfg.potential, **pot))
    bas = {}
    for key in ("box_length", "modes", "quadrature_nodes"):
        if getattr(args, key) is not None:
            bas[key] = getattr(args, key)
    if bas:
        cfg = dataclasses.replace(cfg, basis=dataclasses.replace(cfg.basis, **bas))
    plain = {}
    for key in ("mass", "charge", "gap_tol", "out_format", "out_path", "precision"):
        if getattr(args, key) is not None:
            plain[key] = getattr(args, key)
    if args.fields is not None:
        plain["fields"] = tuple(float(t) for t in args.fields.split(",") if t.strip())
    if plain:
        cfg = dataclasses.replace(cfg, **plain)
    return cfg


def _load(args) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()
    cfg = _apply_overrides(cfg, args)
    report = validate_spec(cfg.potential, cfg.basis)
    if not report.ok:
        raise ConfigError("; ".join(report.errors))
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return cfg


def _workers() -> int | None:
    raw = os.environ.get("DIRAC_POL_THREADS")
    return int(raw) if raw else None


def cmd_spectrum(args) -> int:
    cfg = _load(args)
    h = assemble_hamiltonian(cfg.potential, cfg.basis, cfg.mass)
    spectrum = solve_spectrum(h, cfg.gap_tol)
    serialization.atomic_write(cfg.out_path,
                               serialization.spectrum_text(spectrum, cfg))
    return EXIT_OK


def cmd_alpha(args) -> int:
    cfg = _load(args)
    h = assemble_hamiltonian(cfg.potential, cfg.basis, cfg.mass)
    x = assemble_dipole(cfg.basis)
    spectrum = solve_spectrum(h, cfg.gap_tol)
    x_eig = dipole_in_eigenbasis(spectrum, x)
    report = shift_report(
        spectrum, x_eig, cfg.charge,
        truncation=(cfg.basis.modes, cfg.basis.box_length, cfg.basis.dimension),
    )
    comparison = None
    if args.oracle:
        fields = np.asarray(cfg.fields)
        fit_qm = stark_fit_ground(h, x, cfg.charge, fields)
        fit_ht = ht_occupied_sum_fit(h, x, cfg.charge, fields)
        q2 = cfg.charge**2 if cfg.charge else 1.0
        comparison = {
            "oracle_s_qm": fit_qm.quadratic_coeff / q2,
            "oracle_s_ht": fit_ht.quadratic_coeff / q2,
            "oracle_s_qm_deviation": abs(fit_qm.quadratic_coeff / q2 - report.s_qm),
            "oracle_s_ht_deviation": abs(fit_ht.quadratic_coeff / q2 - report.s_ht),
        }
    serialization.atomic_write(cfg.out_path,
                               serialization.report_text(report, cfg, comparison))
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = _load(args)
    depths = np.linspace(args.depth_min, args.depth_max, args.depth_steps)
    result = depth_sweep(cfg.potential, depths, cfg.basis, cfg.charge,
                         cfg.mass, workers=_workers())
    bracket = None
    if args.bracket:
        rows = result.rows
        lo = next((r.depth_vector for r in rows if r.alpha_qm > 0), None)
        hi = next((r.depth_vector for r in rows if r.alpha_qm < 0), None)
        if lo is None or hi is None or hi <= lo:
            raise NoSignChange(
                "sweep rows show no alpha_qm sign change to bracket"
            )
        bracket = bracket_sign_change(cfg.potential, lo, hi, cfg.basis,
                                      cfg.charge, args.bracket_tol, cfg.mass)
    serialization.atomic_write(
        cfg.out_path,
        serialization.sweep_text(result.rows, cfg, result.stop_reason, bracket),
    )
    return EXIT_OK


def cmd_converge(args) -> int:
    cfg = _load(args)
    n_list = [int(t) for t in args.modes_list.split(",") if t.strip()]
    if args.box_lengths:
        l_list = [float(t) for t in args.box_lengths.split(",") if t.strip()]
    else:
        l_list = [cfg.basis.box_length]
    rows = convergence_study(cfg.potential, cfg.charge, n_list, l_list, cfg.mass)
    serialization.atomic_write(cfg.out_path,
                               serialization.converge_text(rows, cfg))
    return EXIT_OK


_HANDLERS = {
    "spectrum": cmd_spectrum,
    "alpha": cmd_alpha,
    "sweep": cmd_sweep,
    "converge": cmd_converge,
}

_EXIT_CODES = (
    (ConfigError, EXIT_CONFIG),
    (SpectralGapCollapse, EXIT_GAP_COLLAPSE),
    (DegenerateDenominator, EXIT_DEGENERATE),
    (NoSignChange, EXIT_NO_SIGN_CHANGE),
)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except DiracPolError as exc:
        code = next((c for cls, c in _EXIT_CODES if isinstance(exc, cls)),
                    EXIT_CONFIG)
        if args.error_json:
            print(json.dumps({"error": type(exc).__name__,
                              "message": str(exc), "exit_code": code}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
