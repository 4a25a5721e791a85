import numpy as np
import pytest

from diracpol import BoxBasis, PotentialSpec, assemble_dipole, assemble_hamiltonian
from diracpol.basis import gauss_legendre


def free_dirac_levels(basis: BoxBasis, mass: float = 1.0) -> np.ndarray:
    """Analytic spectrum of the free Dirac box: +-sqrt(k_n^2+m^2) and one -m."""
    k = basis.wavenumbers()
    e = np.sqrt(k**2 + mass**2)
    return np.sort(np.concatenate([-e, e, [-mass]]))


def test_free_spectrum_small():
    basis = BoxBasis(box_length=20.0, modes=2)
    h = assemble_hamiltonian(PotentialSpec(0.0, 0.0, 2.0), basis, mass=1.0)
    got = np.linalg.eigvalsh(h.matrix)
    np.testing.assert_allclose(got, free_dirac_levels(basis), atol=1e-13)
    assert abs(got[2] - (-1.0)) < 1e-13  # the constant-mode level


def test_hamiltonian_symmetric():
    basis = BoxBasis(box_length=20.0, modes=30)
    h = assemble_hamiltonian(PotentialSpec(1.0, 0.5, 2.0), basis).matrix
    np.testing.assert_array_equal(h, h.T)


def test_basis_orthonormality_by_quadrature():
    basis = BoxBasis(box_length=20.0, modes=25)
    x, w = gauss_legendre(-10.0, 10.0, 400)
    s = basis.sine_modes(x)
    c = basis.cosine_modes(x)
    np.testing.assert_allclose((s * w) @ s.T, np.eye(25), atol=1e-12)
    np.testing.assert_allclose((c * w) @ c.T, np.eye(26), atol=1e-12)


def test_well_eigenvalue_against_fine_quadrature():
    # independent rebuild of the same operator with 10x quadrature nodes
    spec = PotentialSpec(depth_vector=1.0, width=2.0)
    coarse = BoxBasis(box_length=20.0, modes=60)
    fine = BoxBasis(box_length=20.0, modes=60, quadrature_nodes=2400)
    e1 = np.linalg.eigvalsh(assemble_hamiltonian(spec, coarse).matrix)
    e2 = np.linalg.eigvalsh(assemble_hamiltonian(spec, fine).matrix)
    ground1 = e1[e1 > 0][0]
    ground2 = e2[e2 > 0][0]
    assert abs(ground1 - ground2) <= 1e-8


def test_quadrature_convergence_of_entries():
    spec = PotentialSpec(depth_vector=1.0, depth_scalar=0.3, width=2.0)
    basis = BoxBasis(box_length=20.0, modes=40)
    doubled = BoxBasis(box_length=20.0, modes=40, quadrature_nodes=2 * basis.nodes)
    h1 = assemble_hamiltonian(spec, basis).matrix
    h2 = assemble_hamiltonian(spec, doubled).matrix
    assert np.abs(h1 - h2).max() <= 1e-10


def test_dipole_diagonal_zero_and_symmetric():
    basis = BoxBasis(box_length=20.0, modes=20)
    x = assemble_dipole(basis).matrix
    np.testing.assert_array_equal(np.diag(x), 0.0)
    np.testing.assert_array_equal(x, x.T)


def test_dipole_sine_block_closed_form():
    # oracle: Gauss-Legendre quadrature of the s_1 x s_2 integrand
    basis = BoxBasis(box_length=20.0, modes=4)
    xq, w = gauss_legendre(-10.0, 10.0, 200)
    s = basis.sine_modes(xq)
    oracle = float(np.sum(w * xq * s[0] * s[1]))
    expected = -16.0 * 20.0 / (9.0 * np.pi**2)
    assert abs(oracle - expected) < 1e-12
    assert abs(assemble_dipole(basis).matrix[0, 1] - expected) < 1e-12


def test_dipole_parity_selection_rule():
    basis = BoxBasis(box_length=20.0, modes=12)
    x = assemble_dipole(basis).matrix
    for m in range(1, 13):
        for n in range(1, 13):
            if (m + n) % 2 == 0 and m != n:
                assert x[m - 1, n - 1] == 0.0


def test_dipole_matches_quadrature_everywhere():
    basis = BoxBasis(box_length=20.0, modes=15)
    x = assemble_dipole(basis).matrix
    xq, w = gauss_legendre(-10.0, 10.0, 300)
    s = basis.sine_modes(xq)
    c = basis.cosine_modes(xq)
    np.testing.assert_allclose(x[:15, :15], (s * (w * xq)) @ s.T, atol=1e-11)
    np.testing.assert_allclose(x[15:, 15:], (c * (w * xq)) @ c.T, atol=1e-11)


@pytest.mark.parametrize("modes", [2, 50, 150])
def test_free_spectrum_exact_across_sizes(modes):
    basis = BoxBasis(box_length=20.0, modes=modes)
    h = assemble_hamiltonian(PotentialSpec(0.0, 0.0, 2.0), basis)
    got = np.linalg.eigvalsh(h.matrix)
    np.testing.assert_allclose(got, free_dirac_levels(basis), atol=1e-12)
