"""Relative error of the exponential inverse-square law against the exact WKB solve.

Prints eps = |E beta|, the observed relative error, and eps (ln(4/eps) - 1) / 2.

Usage: python3 scripts/inverse_square_small_beta.py [--gamma 1] [--beta 0.01]
"""
import argparse
import math

from deformed_wkb import DeformationParams, InverseSquare, QuantizationProblem, solve_level
from deformed_wkb.reference import inverse_square_small_beta


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--gamma", type=float, default=1.0)
    ap.add_argument("--beta", type=float, default=0.01)
    ap.add_argument("--n-max", type=int, default=10)
    args = ap.parse_args()
    prob = QuantizationProblem(InverseSquare(args.gamma), DeformationParams(args.beta))
    print("n,E_numeric,E_small_beta,eps,rel_err,predicted")
    for n in range(args.n_max + 1):
        E = solve_level(prob, n)
        ref = inverse_square_small_beta(n, args.gamma, args.beta, 0.5)
        eps = abs(E * args.beta)
        pred = eps * (math.log(4 / eps) - 1) / 2
        print(f"{n},{E:.10e},{ref:.10e},{eps:.3e},{abs(E / ref - 1):.3e},{pred:.3e}")


if __name__ == "__main__":
    main()
