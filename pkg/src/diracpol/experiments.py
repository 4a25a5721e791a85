"""Parameter sweeps and truncation-convergence studies.

The depth sweep exhibits the headline effect: the single-particle
polarizability alpha_qm turns negative once the binding is strong enough,
while the vacuum-inclusive alpha stays positive throughout.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace, field

import math

from .errors import NoSignChange, SpectralGapCollapse
from .potential import PotentialSpec
from .basis import BoxBasis, assemble_hamiltonian, assemble_dipole
from .spectrum import solve_spectrum, dipole_in_eigenbasis
from .shifts import ShiftReport, shift_report


@dataclass
class SweepRow:
    depth_vector: float
    epsilon_1: float
    alpha_qm: float
    alpha: float
    alpha_vac_prime: float
    identity_residual: float
    D: int
    L: float


@dataclass
class SweepResult:
    rows: list
    stop_reason: str = ""


@dataclass
class ConvergenceRow:
    modes: int
    L: float
    alpha_qm: float
    alpha: float
    alpha_vac_prime: float
    diff_alpha_qm: float  # relative change from the previous N at the same L
    diff_alpha: float
    diff_alpha_vac_prime: float
    flags: str = ""


def evaluate_point(spec: PotentialSpec, basis: BoxBasis, mass: float = 1.0,
                   q: float = 1.0, gap_tol: float = 1e-8,
                   dipole=None) -> tuple:
    """Full pipeline for one parameter point: (Spectrum, ShiftReport).

    Pass a pre-assembled dipole operator to amortize it across a sweep
    (it does not depend on the potential).
    """
    h = assemble_hamiltonian(spec, basis, mass)
    if dipole is None:
        dipole = assemble_dipole(basis)
    spectrum = solve_spectrum(h, gap_tol)
    x_eig = dipole_in_eigenbasis(spectrum, dipole)
    report = shift_report(
        spectrum, x_eig, q,
        truncation=(basis.modes, basis.box_length, basis.dimension),
    )
    return spectrum, report


def _row(depth: float, spectrum, report: ShiftReport, basis: BoxBasis) -> SweepRow:
    return SweepRow(
        depth_vector=depth,
        epsilon_1=spectrum.ground_energy,
        alpha_qm=report.alpha_qm,
        alpha=report.alpha,
        alpha_vac_prime=report.alpha_vac_prime,
        identity_residual=report.identity_residual,
        D=basis.dimension,
        L=basis.box_length,
    )


def _truncate_at_dive(rows: list, stop_reason: str) -> SweepResult:
    # On a finite depth grid the bound level rarely lands inside the
    # zero-energy band exactly; it jumps across it between grid points and
    # the next box level takes over as "lowest positive", which shows up as
    # an increase of epsilon_1.  Rows at and past that dive are outside the
    # framework and dropped.
    for i in range(1, len(rows)):
        if rows[i].epsilon_1 > rows[i - 1].epsilon_1 + 1e-12:
            return SweepResult(
                rows=rows[:i],
                stop_reason=(
                    f"bound level left the positive spectrum between depths "
                    f"{rows[i - 1].depth_vector} and {rows[i].depth_vector} "
                    f"(supercritical)"
                ),
            )
    return SweepResult(rows=rows, stop_reason=stop_reason)


def depth_sweep(base: PotentialSpec, depths, basis: BoxBasis,
                q: float = 1.0, mass: float = 1.0,
                workers: int | None = None) -> SweepResult:
    """One pipeline run per vector depth, stopping at criticality.

    Depths must be ascending.  The sweep ends at the first depth whose
    spectrum collapses (a level inside the zero-energy band) or where the
    bound level has dived through zero between grid points; deeper rows are
    omitted and the stop reason recorded.
    """
    depths = list(depths)
    if any(b < a for a, b in zip(depths, depths[1:])):
        raise ValueError("depths must be ascending")
    dipole = assemble_dipole(basis)

    def point(depth):
        spec = replace(base, depth_vector=depth)
        return evaluate_point(spec, basis, mass, q, dipole=dipole)

    results = []
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(point, d) for d in depths]
            for d, fut in zip(depths, futures):
                try:
                    results.append((d, fut.result()))
                except SpectralGapCollapse as exc:
                    return _truncate_at_dive(
                        [_row(dd, s, r, basis) for dd, (s, r) in results],
                        f"gap collapse at depth {d}: {exc}",
                    )
    else:
        for d in depths:
            try:
                results.append((d, point(d)))
            except SpectralGapCollapse as exc:
                return _truncate_at_dive(
                    [_row(dd, s, r, basis) for dd, (s, r) in results],
                    f"gap collapse at depth {d}: {exc}",
                )
    return _truncate_at_dive(
        [_row(d, s, r, basis) for d, (s, r) in results], ""
    )


def bracket_sign_change(base: PotentialSpec, lo_depth: float, hi_depth: float,
                        basis: BoxBasis, q: float = 1.0, tol: float = 1e-3,
                        mass: float = 1.0) -> tuple:
    """Bisect the depth at which alpha_qm changes sign.

    Requires alpha_qm(lo) > 0 > alpha_qm(hi); both endpoints must stay below
    criticality (gap collapse propagates as an error).
    """
    dipole = assemble_dipole(basis)

    def alpha_qm_at(depth):
        spec = replace(base, depth_vector=depth)
        _, report = evaluate_point(spec, basis, mass, q, dipole=dipole)
        return report.alpha_qm

    a_lo = alpha_qm_at(lo_depth)
    a_hi = alpha_qm_at(hi_depth)
    if not (a_lo > 0 > a_hi):
        raise NoSignChange(
            f"alpha_qm({lo_depth}) = {a_lo:.4g}, alpha_qm({hi_depth}) = "
            f"{a_hi:.4g}: need positive at lo and negative at hi"
        )
    lo, hi = lo_depth, hi_depth
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if alpha_qm_at(mid) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def convergence_study(spec: PotentialSpec, q, n_list, l_list,
                      mass: float = 1.0) -> list:
    """Polarizabilities against truncation (N) and box size (L).

    For each L the N values are scanned ascending and successive relative
    differences recorded.  A column whose differences grow with N is flagged
    non-convergent; the truncated sea sum is the expected offender, since
    nothing guarantees it settles as the cutoff is raised.
    """
    n_list = sorted(n_list)
    rows = []
    for L in l_list:
        prev = None
        diffs_prev = None
        for n in n_list:
            basis = BoxBasis(box_length=L, modes=n)
            _, report = evaluate_point(spec, basis, mass, q)
            values = (report.alpha_qm, report.alpha, report.alpha_vac_prime)
            if prev is None:
                diffs = (math.nan, math.nan, math.nan)
            else:
                diffs = tuple(
                    abs(v - p) / max(1.0, abs(v)) for v, p in zip(values, prev)
                )
            flags = []
            if diffs_prev is not None:
                names = ("alpha_qm", "alpha", "alpha_vac_prime")
                for name, d, dp in zip(names, diffs, diffs_prev):
                    if d > dp:
                        flags.append(f"non-convergent:{name}")
            rows.append(ConvergenceRow(
                modes=n, L=L,
                alpha_qm=values[0], alpha=values[1], alpha_vac_prime=values[2],
                diff_alpha_qm=diffs[0], diff_alpha=diffs[1],
                diff_alpha_vac_prime=diffs[2],
                flags=";".join(flags),
            ))
            prev = values
            if not math.isnan(diffs[0]):
                diffs_prev = diffs
    return rows
