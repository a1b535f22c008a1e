"""How fast (gamma x)^N levels approach the delta = 1/2 hard-wall formula.

gamma = 2 places the walls at x = +-1/2 so the limiting well has width 1.

Usage: python3 scripts/power_law_N_trend.py [--beta 0] [--n-max 5]
"""
import argparse

from deformed_wkb import DeformationParams, PowerLaw, QuantizationProblem, solve_level
from deformed_wkb.reference import well_wkb


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--beta", type=float, default=0.0)
    ap.add_argument("--n-max", type=int, default=5)
    args = ap.parse_args()
    ns = range(args.n_max + 1)
    print("N," + ",".join(f"dev_n{n}" for n in ns) + ",max_abs")
    for N in (10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000):
        prob = QuantizationProblem(PowerLaw(2.0, N), DeformationParams(args.beta))
        dev = [solve_level(prob, n) / well_wkb(n, 1.0, args.beta, 0.5) - 1 for n in ns]
        print(f"{N}," + ",".join(f"{d:+.5f}" for d in dev) + f",{max(map(abs, dev)):.5f}")


if __name__ == "__main__":
    main()
