import numpy as np
import pytest

from diracpol import (BoxBasis, PotentialSpec, SpectralGapCollapse,
                      assemble_dipole, assemble_hamiltonian,
                      dipole_in_eigenbasis, solve_spectrum)
from diracpol.basis import OperatorMatrix, gauss_legendre


@pytest.fixture(scope="module")
def well_case():
    basis = BoxBasis(box_length=20.0, modes=80)
    h = assemble_hamiltonian(PotentialSpec(depth_vector=1.0, width=2.0), basis)
    x = assemble_dipole(basis)
    spectrum = solve_spectrum(h)
    return basis, h, x, spectrum


def test_free_classification():
    basis = BoxBasis(box_length=20.0, modes=2)
    h = assemble_hamiltonian(PotentialSpec(0.0, 0.0, 2.0), basis)
    s = solve_spectrum(h)
    assert list(s.negative_indices) == [0, 1, 2]
    assert list(s.positive_indices) == [3, 4]
    assert s.ground_index == 3
    assert abs(s.ground_energy - 1.0122618292728) < 1e-10
    assert abs(s.energies[2] - (-1.0)) < 1e-12


def test_binding_lowers_ground_level(well_case):
    _, _, _, spectrum = well_case
    assert spectrum.ground_energy < 1.0


def test_completeness_and_orthonormality(well_case):
    _, h, _, s = well_case
    assert len(s.negative_indices) + len(s.positive_indices) == s.dimension
    gram = s.states.T @ s.states
    np.testing.assert_allclose(gram, np.eye(s.dimension), atol=1e-10)
    residual = h.matrix @ s.states - s.states * s.energies
    scale = 1.0 + np.abs(s.energies)
    assert (np.linalg.norm(residual, axis=0) / scale).max() <= 1e-9


def test_gap_collapse_raised():
    h = OperatorMatrix(np.diag([-1.0, 1e-12, 1.0]), "hamiltonian",
                       BoxBasis(20.0, 2))
    with pytest.raises(SpectralGapCollapse):
        solve_spectrum(h.matrix)


def test_sign_convention_deterministic(well_case):
    _, h, _, s1 = well_case
    s2 = solve_spectrum(h)
    np.testing.assert_array_equal(s1.states, s2.states)
    lead = np.argmax(np.abs(s1.states), axis=0)
    assert np.all(s1.states[lead, np.arange(s1.dimension)] > 0)


def test_identity_congruence():
    # H already diagonal: eigenvectors are the identity, X must be unchanged
    d = np.diag([-2.0, -1.0, 1.0, 2.0])
    s = solve_spectrum(d)
    rng = np.random.default_rng(7)
    x = rng.normal(size=(4, 4))
    x = (x + x.T) / 2
    np.fill_diagonal(x, 0.0)
    got = dipole_in_eigenbasis(s, x).matrix
    np.testing.assert_allclose(np.abs(got), np.abs(x), atol=1e-14)


def test_parity_kills_ground_diagonal(well_case):
    _, _, x, s = well_case
    xe = dipole_in_eigenbasis(s, x)
    assert abs(xe.matrix[s.ground_index, s.ground_index]) <= 1e-10
    assert np.abs(np.diag(xe.matrix)).max() <= 1e-10


def test_eigenbasis_dipole_against_real_space_quadrature(well_case):
    basis, _, x, s = well_case
    xe = dipole_in_eigenbasis(s, x)
    xq, w = gauss_legendre(-10.0, 10.0, 1200)
    sines = basis.sine_modes(xq)
    coss = basis.cosine_modes(xq)
    rng = np.random.default_rng(3)
    pairs = rng.integers(0, s.dimension, size=(3, 2))
    n = basis.modes
    for a, b in pairs:
        ua = s.states[:n, a] @ sines
        la = s.states[n:, a] @ coss
        ub = s.states[:n, b] @ sines
        lb = s.states[n:, b] @ coss
        direct = float(np.sum(w * xq * (ua * ub + la * lb)))
        assert abs(direct - xe.matrix[a, b]) <= 1e-8


def test_dipole_sum_rule(well_case):
    # Parseval: sum_b X_ab^2 = <a|x^2|a> by independent quadrature
    basis, _, x, s = well_case
    xe = dipole_in_eigenbasis(s, x)
    xq, w = gauss_legendre(-10.0, 10.0, 1200)
    sines = basis.sine_modes(xq)
    coss = basis.cosine_modes(xq)
    n = basis.modes
    # interior states only: the truncation edge is not complete
    for a in [s.ground_index, s.ground_index + 3, s.ground_index - 3]:
        ua = s.states[:n, a] @ sines
        la = s.states[n:, a] @ coss
        x2 = float(np.sum(w * xq**2 * (ua**2 + la**2)))
        assert abs(np.sum(xe.matrix[a] ** 2) - x2) <= 1e-6 * max(1.0, x2)


def test_degenerate_ground_warning():
    h = np.diag([-1.0, 1.0, 1.0 + 1e-12])
    with pytest.warns(UserWarning, match="degenerate"):
        s = solve_spectrum(h)
    assert s.ground_degenerate
