"""Binding potential of the unperturbed Hamiltonian.

Natural units throughout the package: hbar = c = 1, energies in units of the
particle mass m, lengths in 1/m.  The well is attractive by convention; the
vector depth enters as -V_v times the spinor identity inside the well, the
scalar depth as -V_s added to the mass term.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError

SUPPORTED_SHAPES = ("square_well",)


@dataclass(frozen=True)
class PotentialSpec:
    """Square-well binding potential centered at x = 0.

    depth_vector and depth_scalar are the (non-negative) well depths for the
    time-component vector and Lorentz-scalar couplings; width is the full
    well width a.
    """

    depth_vector: float = 0.0
    depth_scalar: float = 0.0
    width: float = 2.0
    shape: str = "square_well"

    def __post_init__(self):
        if self.shape not in SUPPORTED_SHAPES:
            raise ConfigError(f"unsupported potential shape {self.shape!r}")
        if not self.width > 0:
            raise ConfigError(f"well width must be positive, got {self.width}")
        if self.depth_vector < 0 or self.depth_scalar < 0:
            raise ConfigError(
                "repulsive (negative) depths are rejected; depths encode "
                "attractive wells and must be >= 0"
            )


@dataclass
class ValidationReport:
    ok: bool
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)


def evaluate_potential(spec: PotentialSpec, x):
    """Evaluate (vector_part, scalar_part) of the potential at x.

    Returns (-depth_vector, -depth_scalar) for |x| <= width/2 and exactly
    (0, 0) outside.  Accepts scalars or arrays.
    """
    inside = np.abs(np.asarray(x, dtype=float)) <= spec.width / 2.0
    vector_part = np.where(inside, -spec.depth_vector, 0.0)
    scalar_part = np.where(inside, -spec.depth_scalar, 0.0)
    if np.isscalar(x) or np.ndim(x) == 0:
        return float(vector_part), float(scalar_part)
    return vector_part, scalar_part


def validate_spec(spec: PotentialSpec, box) -> ValidationReport:
    """Check a potential against a box discretization.

    Errors are geometric impossibilities; warnings flag regimes where either
    box-confinement artifacts or supercriticality may distort results.
    """
    errors = []
    warnings = []
    if not spec.width > 0:
        errors.append("well width must be positive")
    if spec.depth_vector < 0 or spec.depth_scalar < 0:
        errors.append("well depths must be non-negative")
    if spec.width >= box.box_length:
        errors.append(
            f"well width {spec.width} must be smaller than the box length "
            f"{box.box_length}"
        )
    elif spec.width > 0.5 * box.box_length:
        warnings.append(
            "well wider than half the box; confinement artifacts may dominate"
        )
    if spec.depth_vector >= 2.0:
        warnings.append(
            "vector depth >= 2m: approaching supercriticality, the lowest "
            "positive level may dive toward zero"
        )
    return ValidationReport(ok=not errors, errors=errors, warnings=warnings)
