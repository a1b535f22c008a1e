"""Print the closed-form benchmarks next to the numerical solves.

Usage: python3 scripts/reproduce_tables.py
"""
import math

from deformed_wkb import (DeformationParams, Harmonic, InfiniteWell, InverseSquare, PowerLaw,
                          QuantizationProblem, RadialProblem, solve_level, solve_level_3d)
from deformed_wkb.radial3d import HYDROGEN, OSCILLATOR
from deformed_wkb.reference import (anharmonic_linear, benczik_extra_term, chang_gap, ho_exact_kempf,
                                    ho_wkb_closed, hydrogen_linear, inverse_square_small_beta,
                                    osc3d_linear, well_wkb)


def rows(title, header, data):
    print(f"\n== {title}")
    print("  ".join(f"{h:>14}" for h in header))
    for r in data:
        print("  ".join(f"{v:>14.8g}" if isinstance(v, float) else f"{v:>14}" for v in r))


def main():
    beta = 0.1
    ho = QuantizationProblem(Harmonic(), DeformationParams(beta))
    rows(f"harmonic oscillator, beta={beta}", ["n", "E_numeric", "E_wkb", "E_exact"],
         [(n, solve_level(ho, n), ho_wkb_closed(n, beta), ho_exact_kempf(n, beta)) for n in range(6)])

    beta = 1e-3
    an = QuantizationProblem(PowerLaw(1.0, 4), DeformationParams(beta))
    rows(f"quartic x^4, beta={beta}", ["n", "E_numeric", "E_linear"],
         [(n, solve_level(an, n), anharmonic_linear(n, 1.0, 4, beta)) for n in range(6)])

    beta = 0.01
    well = QuantizationProblem(InfiniteWell(1.0), DeformationParams(beta), delta=0.0)
    rows(f"hard-wall well, width 1, beta={beta}", ["n", "E_numeric", "E_linear"],
         [(n, solve_level(well, n), well_wkb(n, 1.0, beta, 0.0)) for n in range(1, 5)])

    gamma, beta = 1.0, 0.01
    inv = QuantizationProblem(InverseSquare(gamma), DeformationParams(beta))
    rows(f"inverse square, gamma={gamma}, beta={beta}", ["n", "E_numeric", "E_small_beta", "E beta"],
         [(n, E, inverse_square_small_beta(n, gamma, beta, 0.5), E * beta)
          for n in range(6) for E in [solve_level(inv, n)]])

    beta, beta_p = 1e-3, 1e-3
    data = []
    for n in range(1, 4):
        for l in range(n):
            rp = RadialProblem(HYDROGEN, l=l, deformation=DeformationParams(beta, beta_p))
            extra = benczik_extra_term(n, l, 1.0, beta, beta_p) if l else math.nan
            data.append((n, l, solve_level_3d(rp, n - l - 1), hydrogen_linear(n, l, 1.0, beta, beta_p), extra))
    rows(f"hydrogen, beta={beta}, beta'={beta_p}", ["n", "l", "E_numeric", "E_linear", "extra_term"], data)

    beta, beta_p = 0.01, 0.005
    data = []
    for n_p in range(3):
        for l in range(3):
            rp = RadialProblem(OSCILLATOR, l=l, deformation=DeformationParams(beta, beta_p))
            data.append((2 * n_p + l, l, solve_level_3d(rp, n_p), osc3d_linear(2 * n_p + l, l, beta, beta_p)))
    rows(f"3D oscillator, beta={beta}, beta'={beta_p}, exact - WKB offset {chang_gap(beta, beta_p):g}",
         ["n", "l", "E_numeric", "E_linear"], data)


if __name__ == "__main__":
    main()
