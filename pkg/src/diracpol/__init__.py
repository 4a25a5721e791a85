"""Electric polarizability of a 1D Dirac bound state.

Two definitions are computed side by side: the single-particle value
(negative-energy intermediates allowed) and the vacuum-inclusive value
(Pauli-blocked particle shift plus the shift of the occupied sea), together
with the exact identity connecting them and nonperturbative Stark-fit
cross-checks.
"""
from .errors import (ConfigError, CrossingDetected, DegenerateDenominator,
                     DiracPolError, FieldTooStrong, NoSignChange,
                     NumericalDegradation, QuadratureDivergence,
                     SpectralGapCollapse, TrackingLost)
from .potential import PotentialSpec, ValidationReport, evaluate_potential, validate_spec
from .basis import BoxBasis, OperatorMatrix, assemble_dipole, assemble_hamiltonian
from .spectrum import (DipoleEigenMatrix, Spectrum, dipole_in_eigenbasis,
                       solve_spectrum)
from .shifts import (ShiftReport, polarizabilities, reduced_w_ht, reduced_w_one,
                     reduced_w_qm, reduced_w_vac, reduced_w_vac_prime,
                     shift_report)
from .oracle import StarkFit, ht_occupied_sum_fit, stark_fit_ground, synthetic_spectrum
from .experiments import (ConvergenceRow, SweepResult, SweepRow,
                          bracket_sign_change, convergence_study, depth_sweep,
                          evaluate_point)
from .config import RunConfig, load_config, parse_config, serialize_config

__version__ = "0.1.0"
