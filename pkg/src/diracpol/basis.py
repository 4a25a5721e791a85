"""Spectral discretization of the 1D Dirac Hamiltonian on a hard-wall box.

The upper spinor component is expanded in sine modes that vanish at the
walls, the lower component in cosine modes (including the constant mode)
with matched wavenumbers k_n = n*pi/L.  The momentum operator maps one
family exactly onto the other, so the free spectrum is reproduced exactly
and no spurious doubler states appear.  A factor i is absorbed into the
lower basis so every matrix in the package is real symmetric.

Basis ordering: rows 0..N-1 are sine modes n = 1..N (upper component),
rows N..2N are cosine modes n = 0..N (lower component); dimension
D = 2N + 1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, QuadratureDivergence
from .potential import PotentialSpec

QUADRATURE_TOL = 1e-10


@dataclass(frozen=True)
class BoxBasis:
    """Hard-wall box [-L/2, L/2] with N sine / N+1 cosine modes."""

    box_length: float = 20.0
    modes: int = 200
    quadrature_nodes: int = 0  # 0 means the default 4*modes

    def __post_init__(self):
        if not self.box_length > 0:
            raise ConfigError(f"box length must be positive, got {self.box_length}")
        if self.modes < 2:
            raise ConfigError(f"need at least 2 modes, got {self.modes}")
        if self.quadrature_nodes < 0:
            raise ConfigError("quadrature node count must be non-negative")

    @property
    def dimension(self) -> int:
        return 2 * self.modes + 1

    @property
    def nodes(self) -> int:
        return self.quadrature_nodes if self.quadrature_nodes else 4 * self.modes

    def wavenumbers(self) -> np.ndarray:
        """k_n = n*pi/L for n = 1..N."""
        return np.arange(1, self.modes + 1) * np.pi / self.box_length

    def sine_modes(self, x) -> np.ndarray:
        """s_n(x), shape (N, len(x)); zero at both walls."""
        L = self.box_length
        u = np.atleast_1d(np.asarray(x, dtype=float)) + L / 2.0
        n = np.arange(1, self.modes + 1)
        return np.sqrt(2.0 / L) * np.sin(np.outer(n, u) * np.pi / L)

    def cosine_modes(self, x) -> np.ndarray:
        """c_n(x) for n = 0..N, shape (N+1, len(x))."""
        L = self.box_length
        u = np.atleast_1d(np.asarray(x, dtype=float)) + L / 2.0
        n = np.arange(0, self.modes + 1)
        out = np.cos(np.outer(n, u) * np.pi / L) * np.sqrt(2.0 / L)
        out[0] = np.sqrt(1.0 / L)
        return out


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense real-symmetric operator in the discretization basis."""

    matrix: np.ndarray
    kind: str  # "hamiltonian" | "dipole"
    basis: BoxBasis

    def __post_init__(self):
        self.matrix.setflags(write=False)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


def gauss_legendre(a: float, b: float, n: int):
    """Gauss-Legendre nodes and weights mapped to [a, b]."""
    x, w = np.polynomial.legendre.leggauss(n)
    mid, half = (a + b) / 2.0, (b - a) / 2.0
    return mid + half * x, half * w


def _well_overlaps(basis: BoxBasis, width: float, n_nodes: int):
    """Overlap matrices of the basis families restricted to the well.

    Returns (O_ss, O_cc) with O_ss[m, n] = integral over [-a/2, a/2] of
    s_m s_n, and likewise for the cosine family.
    """
    x, w = gauss_legendre(-width / 2.0, width / 2.0, n_nodes)
    s = basis.sine_modes(x)
    c = basis.cosine_modes(x)
    o_ss = (s * w) @ s.T
    o_cc = (c * w) @ c.T
    # matmul rounding breaks exact symmetry at the 1e-17 level
    return (o_ss + o_ss.T) / 2.0, (o_cc + o_cc.T) / 2.0


def free_hamiltonian(basis: BoxBasis, mass: float) -> np.ndarray:
    """Free 1D Dirac matrix: exact kinetic coupling plus the mass term."""
    N = basis.modes
    D = basis.dimension
    h = np.zeros((D, D))
    k = basis.wavenumbers()
    rows = np.arange(N)
    # kinetic block: <c_n| p |s_n> = k_n under the real phase convention;
    # the constant c_0 mode (row N) is annihilated by p
    h[N + 1 + rows, rows] = k
    h[rows, N + 1 + rows] = k
    h[rows, rows] = mass
    h[N + np.arange(N + 1), N + np.arange(N + 1)] -= mass
    return h


def assemble_hamiltonian(
    spec: PotentialSpec, basis: BoxBasis, mass: float = 1.0
) -> OperatorMatrix:
    """Assemble H0 = sigma_x p + sigma_z (m + U_s) + U_v in the mixed basis.

    Potential integrals are done by Gauss-Legendre quadrature restricted to
    the well (the potential vanishes identically outside, so the outer
    panels contribute nothing).  Assembly fails with QuadratureDivergence if
    doubling the node count moves any entry by more than 1e-10.

    Raises ConfigError when the well does not fit inside the box.
    """
    from .potential import validate_spec

    report = validate_spec(spec, basis)
    if not report.ok:
        raise ConfigError("; ".join(report.errors))

    h = free_hamiltonian(basis, mass)
    if spec.depth_vector or spec.depth_scalar:
        N = basis.modes
        o_ss, o_cc = _well_overlaps(basis, spec.width, basis.nodes)
        o_ss2, o_cc2 = _well_overlaps(basis, spec.width, 2 * basis.nodes)
        drift = max(np.abs(o_ss - o_ss2).max(), np.abs(o_cc - o_cc2).max())
        if drift > QUADRATURE_TOL:
            raise QuadratureDivergence(
                f"potential quadrature not converged: entry drift {drift:.3e} "
                f"on doubling {basis.nodes} nodes"
            )
        # vector coupling: -V_v on both spinor components inside the well
        h[:N, :N] -= spec.depth_vector * o_ss
        h[N:, N:] -= spec.depth_vector * o_cc
        # scalar coupling: mass shifts by -V_s inside the well, signed by sigma_z
        h[:N, :N] -= spec.depth_scalar * o_ss
        h[N:, N:] += spec.depth_scalar * o_cc
    return OperatorMatrix(matrix=h, kind="hamiltonian", basis=basis)


def _dipole_closed_form(basis: BoxBasis) -> np.ndarray:
    """Analytic position matrix in the mixed basis.

    The position operator is spinor-scalar, so the matrix is block diagonal:
    a sine-sine block and a cosine-cosine block.  All diagonal entries are
    zero by the parity of the modes about x = 0, and entries with m + n even
    vanish by the same parity selection rule.
    """
    N = basis.modes
    L = basis.box_length
    D = basis.dimension
    x = np.zeros((D, D))

    n = np.arange(1, N + 1)
    m_col, n_col = np.meshgrid(n, n, indexing="ij")
    odd = (m_col + n_col) % 2 == 1
    diff2 = np.where(odd, (m_col - n_col) ** 2, 1)
    summ2 = (m_col + n_col) ** 2
    ss = np.where(odd, -(2.0 * L / np.pi**2) * (1.0 / diff2 - 1.0 / summ2), 0.0)
    cc = np.where(odd, -(2.0 * L / np.pi**2) * (1.0 / diff2 + 1.0 / summ2), 0.0)
    x[:N, :N] = ss
    x[N + 1 :, N + 1 :] = cc
    # constant cosine mode against c_n: nonzero for odd n only
    c0 = np.where(n % 2 == 1, -2.0 * np.sqrt(2.0) * L / (n**2 * np.pi**2), 0.0)
    x[N, N + 1 :] = c0
    x[N + 1 :, N] = c0
    return x


def _dipole_quadrature(basis: BoxBasis, n_nodes: int) -> np.ndarray:
    """Position matrix by Gauss-Legendre quadrature over the whole box."""
    N = basis.modes
    D = basis.dimension
    xq, w = gauss_legendre(-basis.box_length / 2.0, basis.box_length / 2.0, n_nodes)
    s = basis.sine_modes(xq)
    c = basis.cosine_modes(xq)
    out = np.zeros((D, D))
    out[:N, :N] = (s * (w * xq)) @ s.T
    out[N:, N:] = (c * (w * xq)) @ c.T
    return out


def assemble_dipole(basis: BoxBasis, cross_check: bool = True) -> OperatorMatrix:
    """Position operator x in the mixed basis, from closed forms.

    With cross_check the analytic entries are compared against a
    high-order quadrature rebuild; disagreement raises QuadratureDivergence.
    """
    x = _dipole_closed_form(basis)
    if cross_check:
        xq = _dipole_quadrature(basis, max(8 * basis.modes, 64))
        drift = np.abs(x - xq).max()
        if drift > QUADRATURE_TOL:
            raise QuadratureDivergence(
                f"analytic dipole disagrees with quadrature by {drift:.3e}"
            )
    return OperatorMatrix(matrix=x, kind="dipole", basis=basis)
