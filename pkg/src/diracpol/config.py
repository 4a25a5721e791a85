"""Run configuration: strict key=value files with section headers, or JSON.

Unknown sections or keys are rejected so that a typo cannot silently fall
back to a default.  Serialization uses 17 significant digits by default,
which round-trips IEEE doubles bit-for-bit.
"""
from __future__ import annotations

import configparser
import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError
from .potential import PotentialSpec
from .basis import BoxBasis
from .oracle import DEFAULT_FIELDS
from .spectrum import DEFAULT_GAP_TOL

_SCHEMA = {
    "potential": {"shape", "depth_vector", "depth_scalar", "width"},
    "basis": {"box_length", "modes", "quadrature_nodes"},
    "physics": {"mass", "charge", "gap_tol"},
    "oracle": {"fields"},
    "output": {"format", "path", "precision"},
}


@dataclass
class RunConfig:
    potential: PotentialSpec = field(default_factory=PotentialSpec)
    basis: BoxBasis = field(default_factory=BoxBasis)
    mass: float = 1.0
    charge: float = 1.0
    gap_tol: float = DEFAULT_GAP_TOL
    fields: tuple = DEFAULT_FIELDS
    out_format: str = "csv"
    out_path: str = ""
    precision: int = 17

    def __post_init__(self):
        if self.out_format not in ("csv", "json"):
            raise ConfigError(f"output format must be csv or json, got {self.out_format!r}")
        if self.mass <= 0:
            raise ConfigError("mass must be positive")
        if not 1 <= self.precision <= 17:
            raise ConfigError("precision must be between 1 and 17 significant digits")


def _check_sections(data: dict) -> None:
    for section, keys in data.items():
        if section not in _SCHEMA:
            raise ConfigError(f"unknown config section [{section}]")
        unknown = set(keys) - _SCHEMA[section]
        if unknown:
            raise ConfigError(
                f"unknown keys in [{section}]: {', '.join(sorted(unknown))}"
            )


def _build(data: dict) -> RunConfig:
    _check_sections(data)
    pot = data.get("potential", {})
    bas = data.get("basis", {})
    phy = data.get("physics", {})
    ora = data.get("oracle", {})
    out = data.get("output", {})
    try:
        potential = PotentialSpec(
            shape=str(pot.get("shape", "square_well")),
            depth_vector=float(pot.get("depth_vector", 0.0)),
            depth_scalar=float(pot.get("depth_scalar", 0.0)),
            width=float(pot.get("width", 2.0)),
        )
        basis = BoxBasis(
            box_length=float(bas.get("box_length", 20.0)),
            modes=int(bas.get("modes", 200)),
            quadrature_nodes=int(bas.get("quadrature_nodes", 0)),
        )
        fields = ora.get("fields", DEFAULT_FIELDS)
        if isinstance(fields, str):
            fields = tuple(float(tok) for tok in fields.split(",") if tok.strip())
        else:
            fields = tuple(float(v) for v in fields)
        return RunConfig(
            potential=potential,
            basis=basis,
            mass=float(phy.get("mass", 1.0)),
            charge=float(phy.get("charge", 1.0)),
            gap_tol=float(phy.get("gap_tol", DEFAULT_GAP_TOL)),
            fields=fields,
            out_format=str(out.get("format", "csv")),
            out_path=str(out.get("path", "")),
            precision=int(out.get("precision", 17)),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid config value: {exc}") from exc


def parse_config(text: str, fmt: str = "ini") -> RunConfig:
    """Parse a config from its INI or JSON text form."""
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed JSON config: {exc}") from exc
        if not isinstance(data, dict) or not all(isinstance(v, dict) for v in data.values()):
            raise ConfigError("JSON config must be an object of section objects")
        return _build(data)
    parser = configparser.ConfigParser()
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}") from exc
    data = {s: dict(parser.items(s)) for s in parser.sections()}
    return _build(data)


def load_config(path: str | Path) -> RunConfig:
    path = Path(path)
    fmt = "json" if path.suffix.lower() == ".json" else "ini"
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text, fmt)


def _fmt(value: float, precision: int = 17) -> str:
    return format(value, f".{precision}g")


def config_to_dict(cfg: RunConfig) -> dict:
    return {
        "potential": {
            "shape": cfg.potential.shape,
            "depth_vector": cfg.potential.depth_vector,
            "depth_scalar": cfg.potential.depth_scalar,
            "width": cfg.potential.width,
        },
        "basis": {
            "box_length": cfg.basis.box_length,
            "modes": cfg.basis.modes,
            "quadrature_nodes": cfg.basis.quadrature_nodes,
        },
        "physics": {"mass": cfg.mass, "charge": cfg.charge, "gap_tol": cfg.gap_tol},
        "oracle": {"fields": list(cfg.fields)},
        "output": {"format": cfg.out_format, "path": cfg.out_path,
                   "precision": cfg.precision},
    }


def serialize_config(cfg: RunConfig, fmt: str = "ini") -> str:
    """Render a config back to text; parse(serialize(cfg)) == cfg."""
    data = config_to_dict(cfg)
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    lines = []
    for section, items in data.items():
        lines.append(f"[{section}]")
        for key, value in items.items():
            if isinstance(value, float):
                value = _fmt(value, cfg.precision)
            elif isinstance(value, list):
                value = ",".join(_fmt(v, cfg.precision) for v in value)
            lines.append(f"{key} = {value}")
        lines.append("")
    return "\n".join(lines)
