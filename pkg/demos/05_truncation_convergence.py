"""How the three polarizabilities respond to basis truncation.

alpha_qm converges quickly with the mode count; the sea sums are reported
with successive differences and flagged if those differences grow, since
nothing guarantees the truncated vacuum sum settles as the cutoff rises.
"""
from diracpol import PotentialSpec, convergence_study


def main():
    well = PotentialSpec(depth_vector=1.0, width=2.0)
    rows = convergence_study(well, 1.0, [100, 200, 400], [20.0])

    header = (f"{'N':>5} {'alpha_qm':>14} {'alpha':>14} {'alpha_vac_prime':>16} "
              f"{'d(qm)':>10} {'d(vac_p)':>10}  flags")
    print(header)
    for r in rows:
        print(f"{r.modes:>5} {r.alpha_qm:14.8f} {r.alpha:14.8f} "
              f"{r.alpha_vac_prime:16.8f} {r.diff_alpha_qm:10.2e} "
              f"{r.diff_alpha_vac_prime:10.2e}  {r.flags or '-'}")


if __name__ == "__main__":
    main()
