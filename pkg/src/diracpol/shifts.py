"""Second-order energy shifts and the two polarizabilities.

All sums are "reduced": the external-field factor (qE)^2 is divided out, so
each shift S satisfies W = (qE)^2 * S and the polarizabilities follow as
alpha = -2 q^2 S.  Five shifts are computed:

  s_qm        bound particle, negative-energy intermediates allowed
  s_one       bound particle, Pauli-blocked (positive intermediates only)
  s_vac       occupied sea, intermediate i = 1 excluded (it is occupied)
  s_vac_prime sea shift with the i = 1 restriction removed
  s_ht        s_one + s_vac, the vacuum-inclusive total

They satisfy the exact algebraic identity s_ht = s_qm + s_vac_prime: the
Pauli-violating terms that appear on the right cancel pairwise because the
dipole matrix is symmetric while the energy denominators flip sign.

Terms are accumulated with math.fsum in ascending |denominator| order, so
results are exactly rounded and independent of term ordering.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDenominator
from .spectrum import Spectrum, DipoleEigenMatrix


@dataclass
class ShiftReport:
    """All reduced shifts, derived polarizabilities and the identity residual."""

    s_qm: float
    s_one: float
    s_vac: float
    s_vac_prime: float
    s_ht: float
    per_level_vac: list
    identity_residual: float
    alpha_qm: float
    alpha: float
    alpha_vac_prime: float
    charge: float
    truncation: tuple  # (modes, box_length, dimension)


def _compensated_sum(numerators: np.ndarray, denominators: np.ndarray,
                     gap_tol: float) -> float:
    """Exactly rounded sum of numerators/denominators, smallest |den| first."""
    if numerators.size == 0:
        return 0.0
    small = np.abs(denominators) < gap_tol
    if np.any(small):
        worst = denominators[np.argmin(np.abs(denominators))]
        raise DegenerateDenominator(
            f"energy denominator {worst:.3e} below gap_tol {gap_tol:.1e}"
        )
    order = np.argsort(np.abs(denominators), kind="stable")
    return math.fsum((numerators[order] / denominators[order]).tolist())


def reduced_w_qm(spec: Spectrum, x: DipoleEigenMatrix) -> float:
    """Single-particle shift: all intermediates except the ground state itself."""
    g = spec.ground_index
    eg = spec.energies[g]
    pos = spec.positive_indices[spec.positive_indices != g]
    neg = spec.negative_indices
    inter = np.concatenate([pos, neg])
    num = x.matrix[inter, g] ** 2
    den = eg - spec.energies[inter]
    return _compensated_sum(num, den, spec.gap_tol)


def reduced_w_one(spec: Spectrum, x: DipoleEigenMatrix) -> float:
    """Pauli-blocked particle shift: positive intermediates only; always <= 0."""
    g = spec.ground_index
    eg = spec.energies[g]
    pos = spec.positive_indices[spec.positive_indices != g]
    num = x.matrix[pos, g] ** 2
    den = eg - spec.energies[pos]
    return _compensated_sum(num, den, spec.gap_tol)


def reduced_w_vac(spec: Spectrum, x: DipoleEigenMatrix):
    """Sea shift with the occupied ground state excluded as intermediate.

    Returns (total, per_level) where per_level is index-aligned with
    negative_indices; every entry is <= 0.
    """
    g = spec.ground_index
    pos = spec.positive_indices[spec.positive_indices != g]
    per_level = []
    for j in spec.negative_indices:
        num = x.matrix[pos, j] ** 2
        den = spec.energies[j] - spec.energies[pos]
        per_level.append(_compensated_sum(num, den, spec.gap_tol))
    return math.fsum(per_level), per_level


def reduced_w_vac_prime(spec: Spectrum, x: DipoleEigenMatrix) -> float:
    """Sea shift without the bound particle: all positive intermediates."""
    pos = spec.positive_indices
    parts = []
    for j in spec.negative_indices:
        num = x.matrix[pos, j] ** 2
        den = spec.energies[j] - spec.energies[pos]
        parts.append(_compensated_sum(num, den, spec.gap_tol))
    return math.fsum(parts)


def reduced_w_ht(s_one: float, s_vac: float) -> float:
    """Vacuum-inclusive total: blocked particle shift plus sea shift."""
    return s_one + s_vac


def polarizabilities(s_qm: float, s_ht: float, s_vac_prime: float,
                     q: float = 1.0):
    """alpha = -2 q^2 S for each definition of the shifted system."""
    return (-2.0 * q * q * s_qm,
            -2.0 * q * q * s_ht,
            -2.0 * q * q * s_vac_prime)


def shift_report(spec: Spectrum, x: DipoleEigenMatrix, q: float = 1.0,
                 truncation: tuple = (0, 0.0, 0)) -> ShiftReport:
    """Evaluate every reduced shift and package the derived quantities."""
    s_qm = reduced_w_qm(spec, x)
    s_one = reduced_w_one(spec, x)
    s_vac, per_level = reduced_w_vac(spec, x)
    s_vac_prime = reduced_w_vac_prime(spec, x)
    s_ht = reduced_w_ht(s_one, s_vac)
    alpha_qm, alpha, alpha_vac_prime = polarizabilities(s_qm, s_ht, s_vac_prime, q)
    return ShiftReport(
        s_qm=s_qm,
        s_one=s_one,
        s_vac=s_vac,
        s_vac_prime=s_vac_prime,
        s_ht=s_ht,
        per_level_vac=per_level,
        identity_residual=abs(s_ht - (s_qm + s_vac_prime)),
        alpha_qm=alpha_qm,
        alpha=alpha,
        alpha_vac_prime=alpha_vac_prime,
        charge=q,
        truncation=truncation,
    )
