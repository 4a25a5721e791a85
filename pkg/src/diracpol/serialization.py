"""CSV/JSON output for spectra, shift reports and sweep tables.

Files are written atomically (temp file + rename).  CSV uses RFC-4180
quoting via the csv module; JSON output is a single object with `meta` and
either `rows` or `report`.  Floats are rendered at the configured number of
significant digits (default 17, which round-trips doubles exactly).
"""
from __future__ import annotations

import csv
import io
import json
import os
import sys
import tempfile

from .config import RunConfig, config_to_dict
from .shifts import ShiftReport

SWEEP_COLUMNS = ("depth_vector", "epsilon_1", "alpha_qm", "alpha",
                 "alpha_vac_prime", "identity_residual", "D", "L")
CONVERGE_COLUMNS = ("modes", "L", "alpha_qm", "alpha", "alpha_vac_prime",
                    "diff_alpha_qm", "diff_alpha", "diff_alpha_vac_prime",
                    "flags")


def _render(value, precision: int):
    if isinstance(value, float):
        return format(value, f".{precision}g")
    return value


def atomic_write(path: str, text: str) -> None:
    """Write text to path via a temp file in the same directory."""
    if not path:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv_text(header, rows, precision, footer_comments=()):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_render(v, precision) for v in row])
    for comment in footer_comments:
        buf.write(f"# {comment}\n")
    return buf.getvalue()


def _json_text(meta: dict, payload_key: str, payload) -> str:
    return json.dumps({"meta": meta, payload_key: payload}, indent=2) + "\n"


def _meta(cfg: RunConfig, extra: dict | None = None) -> dict:
    meta = {"config": config_to_dict(cfg)}
    if extra:
        meta.update(extra)
    return meta


def spectrum_text(spectrum, cfg: RunConfig) -> str:
    rows = []
    for i, energy in enumerate(spectrum.energies):
        kind = "negative" if i in spectrum.negative_indices else "positive"
        rows.append({"index": i, "energy": float(energy),
                     "classification": kind,
                     "is_ground": i == spectrum.ground_index})
    if cfg.out_format == "json":
        for row in rows:
            row["energy"] = float(format(row["energy"], f".{cfg.precision}g"))
        return _json_text(_meta(cfg), "rows", rows)
    return _csv_text(
        ("index", "energy", "classification", "is_ground"),
        [(r["index"], r["energy"], r["classification"], r["is_ground"])
         for r in rows],
        cfg.precision,
    )


def report_dict(report: ShiftReport) -> dict:
    return {
        "s_qm": report.s_qm,
        "s_one": report.s_one,
        "s_vac": report.s_vac,
        "s_vac_prime": report.s_vac_prime,
        "s_ht": report.s_ht,
        "identity_residual": report.identity_residual,
        "alpha_qm": report.alpha_qm,
        "alpha": report.alpha,
        "alpha_vac_prime": report.alpha_vac_prime,
        "charge": report.charge,
        "truncation_modes": report.truncation[0],
        "truncation_box_length": report.truncation[1],
        "truncation_dimension": report.truncation[2],
    }


def report_text(report: ShiftReport, cfg: RunConfig,
                oracle_comparison: dict | None = None) -> str:
    data = report_dict(report)
    if oracle_comparison:
        data.update(oracle_comparison)
    if cfg.out_format == "json":
        return _json_text(_meta(cfg), "report", data)
    return _csv_text(("key", "value"),
                     list(data.items()), cfg.precision)


def sweep_text(rows, cfg: RunConfig, stop_reason: str = "",
               bracket: tuple | None = None) -> str:
    table = [(r.depth_vector, r.epsilon_1, r.alpha_qm, r.alpha,
              r.alpha_vac_prime, r.identity_residual, r.D, r.L)
             for r in rows]
    if cfg.out_format == "json":
        payload = [dict(zip(SWEEP_COLUMNS, row)) for row in table]
        extra = {}
        if stop_reason:
            extra["stop_reason"] = stop_reason
        if bracket is not None:
            extra["bracket"] = list(bracket)
        return _json_text(_meta(cfg, extra), "rows", payload)
    comments = []
    if stop_reason:
        comments.append(f"stop_reason: {stop_reason}")
    if bracket is not None:
        p = cfg.precision
        comments.append(
            f"bracket: [{format(bracket[0], f'.{p}g')}, "
            f"{format(bracket[1], f'.{p}g')}]"
        )
    return _csv_text(SWEEP_COLUMNS, table, cfg.precision, comments)


def converge_text(rows, cfg: RunConfig) -> str:
    table = [(r.modes, r.L, r.alpha_qm, r.alpha, r.alpha_vac_prime,
              r.diff_alpha_qm, r.diff_alpha, r.diff_alpha_vac_prime, r.flags)
             for r in rows]
    if cfg.out_format == "json":
        payload = [dict(zip(CONVERGE_COLUMNS, row)) for row in table]
        return _json_text(_meta(cfg), "rows", payload)
    return _csv_text(CONVERGE_COLUMNS, table, cfg.precision)
