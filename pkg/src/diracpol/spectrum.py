"""Eigendecomposition of H0 and the dipole operator in its eigenbasis."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import NumericalDegradation, SpectralGapCollapse
from .basis import OperatorMatrix

DEFAULT_GAP_TOL = 1e-8
GROUND_DEGENERACY_TOL = 1e-10
SYMMETRY_TOL = 1e-11


@dataclass
class Spectrum:
    """Full spectrum of H0, partitioned into negative and positive states.

    energies are ascending; states holds the orthonormal eigenvectors as
    columns, in the same order.  ground_index points at the lowest positive
    eigenvalue, the unperturbed bound state.
    """

    energies: np.ndarray
    states: np.ndarray
    negative_indices: np.ndarray
    positive_indices: np.ndarray
    ground_index: int
    gap_tol: float = DEFAULT_GAP_TOL
    ground_degenerate: bool = False

    def __post_init__(self):
        for arr in (self.energies, self.states,
                    self.negative_indices, self.positive_indices):
            arr.setflags(write=False)

    @property
    def dimension(self) -> int:
        return len(self.energies)

    @property
    def ground_energy(self) -> float:
        return float(self.energies[self.ground_index])


@dataclass
class DipoleEigenMatrix:
    """Position matrix elements <a|x|b> in the eigenbasis of H0."""

    matrix: np.ndarray

    def __post_init__(self):
        self.matrix.setflags(write=False)


def solve_spectrum(h: OperatorMatrix | np.ndarray,
                   gap_tol: float = DEFAULT_GAP_TOL) -> Spectrum:
    """Dense symmetric eigendecomposition with sign classification.

    Eigenvector signs are fixed deterministically (largest-magnitude
    coefficient positive).  Any eigenvalue within gap_tol of zero raises
    SpectralGapCollapse: the positive/negative partition that the
    perturbation sums rely on no longer exists.
    """
    m = h.matrix if isinstance(h, OperatorMatrix) else np.asarray(h)
    if isinstance(h, OperatorMatrix) and h.kind != "hamiltonian":
        raise ValueError(f"expected a hamiltonian-tagged operator, got {h.kind!r}")
    energies, states = scipy.linalg.eigh(m)

    # deterministic sign convention
    lead = np.argmax(np.abs(states), axis=0)
    signs = np.sign(states[lead, np.arange(states.shape[1])])
    signs[signs == 0] = 1.0
    states = states * signs

    if np.any(np.abs(energies) <= gap_tol):
        worst = energies[np.argmin(np.abs(energies))]
        raise SpectralGapCollapse(
            f"eigenvalue {worst:.3e} inside the zero-energy band (tol {gap_tol:.1e})"
        )
    negative = np.flatnonzero(energies < -gap_tol)
    positive = np.flatnonzero(energies > gap_tol)
    ground = int(positive[0])

    degenerate = (len(positive) > 1 and
                  energies[positive[1]] - energies[ground] < GROUND_DEGENERACY_TOL)
    if degenerate:
        warnings.warn(
            "lowest positive level is (near-)degenerate; second-order "
            "perturbation theory of the bound state is unreliable",
            stacklevel=2,
        )
    return Spectrum(
        energies=energies,
        states=states,
        negative_indices=negative,
        positive_indices=positive,
        ground_index=ground,
        gap_tol=gap_tol,
        ground_degenerate=degenerate,
    )


def dipole_in_eigenbasis(spec: Spectrum,
                         x_basis: OperatorMatrix | np.ndarray) -> DipoleEigenMatrix:
    """Congruence transform of the dipole matrix into the eigenbasis.

    The result is symmetrized by averaging; an asymmetry above 1e-11 before
    averaging signals numerical degradation and is an error.
    """
    x = x_basis.matrix if isinstance(x_basis, OperatorMatrix) else np.asarray(x_basis)
    if x.shape != spec.states.shape:
        raise ValueError("dipole and spectrum dimensions do not match")
    y = spec.states.T @ x @ spec.states
    asym = np.abs(y - y.T).max()
    if asym > SYMMETRY_TOL:
        raise NumericalDegradation(
            f"eigenbasis dipole asymmetry {asym:.3e} exceeds {SYMMETRY_TOL:.1e}"
        )
    return DipoleEigenMatrix(matrix=(y + y.T) / 2.0)
