"""Radially symmetric 3D problems in the momentum representation.

With ``X_i = (1 + beta p^2) x_i + beta' p_i (p . x)`` and ``P_i = p_i`` the squared
coordinate splits into a radial part ``x_p`` and an angular part, and the
semiclassical reduction replaces ``L^2`` by ``(l + 1/2)^2``. The remaining 1D
problem is quantized as ``int_{p_min}^{p_max} x_p dp = pi (n_p + delta)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .deformation import DeformationParams
from .errors import ClassicallyForbidden, DomainError, InvalidQuantumNumber, NoBoundRegion, WKBError
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate_sqrt_endpoints
from .quantizer import SpectrumRow, SpectrumTable, bracket_and_solve
from .reference import LINEAR_IN_BETA, ReferenceValue, hydrogen_linear, osc3d_linear

HYDROGEN = "hydrogen"
OSCILLATOR = "oscillator"


@dataclass(frozen=True)
class RadialProblem:
    kind: str
    l: int = 0
    gamma: float = 1.0  # Coulomb strength; unused by the oscillator
    deformation: DeformationParams = field(default_factory=DeformationParams)
    delta: float = 0.5
    quad: QuadratureSpec = DEFAULT_SPEC

    def __post_init__(self):
        if self.kind not in (HYDROGEN, OSCILLATOR):
            raise DomainError(f"unknown radial problem {self.kind!r}")
        if int(self.l) != self.l or self.l < 0:
            raise InvalidQuantumNumber(f"l must be a nonnegative integer, got {self.l}")
        if self.kind == HYDROGEN and not self.gamma > 0:
            raise DomainError("gamma must be > 0")

    @property
    def L(self) -> float:
        return self.l + 0.5


def _hydrogen_radicand(p, E, rp):
    b = rp.deformation.beta
    A = rp.gamma / (p * p - E)
    B = (1 + b * p * p) * rp.L / p
    return (A - B) * (A + B)


def _oscillator_radicand(p, E, rp):
    b = rp.deformation.beta
    return E - p * p - ((1 + b * p * p) * rp.L / p) ** 2


def _x_p(radicand, p, E, rp, clip):
    p = np.asarray(p, dtype=float)
    r = radicand(p, E, rp)
    if clip:
        r = np.maximum(r, 0.0)
    elif np.any(r < 0):
        raise ClassicallyForbidden(f"negative radicand at p={p}, E={E}")
    d = rp.deformation
    out = np.sqrt(r) / (1 + (d.beta + d.beta_prime) * p * p)
    return float(out) if out.ndim == 0 else out


def x_p_hydrogen(p, E: float, rp: RadialProblem, clip: bool = False):
    return _x_p(_hydrogen_radicand, p, E, rp, clip)


def x_p_oscillator(p, E: float, rp: RadialProblem, clip: bool = False):
    return _x_p(_oscillator_radicand, p, E, rp, clip)


def x_p(p, E, rp, clip=False):
    fn = x_p_hydrogen if rp.kind == HYDROGEN else x_p_oscillator
    return fn(p, E, rp, clip)


def _hydrogen_turning_points(rp, E):
    if not E < 0:
        raise NoBoundRegion(f"hydrogen bound states need E < 0, got {E}")
    b, L, g = rp.deformation.beta, rp.L, rp.gamma

    # x_p^2 > 0  <=>  h(p) = (1 + b p^2) L (p^2 - E) - g p < 0
    def h(p):
        return (1 + b * p * p) * L * (p * p - E) - g * p

    def dh(p):
        return L * (4 * b * p**3 + 2 * p * (1 - b * E)) - g

    # dh is increasing for p > 0 and vanishes below this bound when b = 0
    p_star = brentq(dh, 0.0, 1.001 * g / (2 * L * (1 - b * E)), xtol=1e-300, rtol=1e-15)
    if h(p_star) >= 0:
        raise NoBoundRegion(f"no classically allowed momenta at E={E}, l={rp.l}")
    p_hi = 2 * p_star
    while h(p_hi) < 0:
        p_hi *= 2
    lo = brentq(h, 0.0, p_star, xtol=1e-300, rtol=1e-15)
    hi = brentq(h, p_star, p_hi, xtol=1e-300, rtol=1e-15)
    return lo, hi


def _oscillator_turning_points(rp, E):
    b, L = rp.deformation.beta, rp.L
    # p^2 x_p^2 (...)^2 = -(1 + b^2 L^2) q^2 + (E - 2 b L^2) q - L^2 with q = p^2
    A = 1 + (b * L) ** 2
    B = E - 2 * b * L * L
    disc = B * B - 4 * A * L * L
    if B <= 0 or disc <= 0:
        raise NoBoundRegion(f"no classically allowed momenta at E={E}, l={rp.l}")
    q_hi = (B + math.sqrt(disc)) / (2 * A)
    q_lo = L * L / (A * q_hi)
    return math.sqrt(q_lo), math.sqrt(q_hi)


def momentum_turning_points(rp: RadialProblem, E: float):
    if rp.kind == HYDROGEN:
        return _hydrogen_turning_points(rp, E)
    return _oscillator_turning_points(rp, E)


def phase_integral_3d(rp: RadialProblem, E: float) -> float:
    lo, hi = momentum_turning_points(rp, E)
    return integrate_sqrt_endpoints(lambda p: x_p(p, E, rp, clip=True), lo, hi, rp.quad)


def label(rp: RadialProblem, n_p: int) -> int:
    """Conventional quantum number: principal n for hydrogen, 2 n_p + l for the oscillator."""
    if rp.kind == HYDROGEN:
        return n_p + rp.l + 1
    return 2 * n_p + rp.l


def radial_reference(rp: RadialProblem, n_p: int) -> ReferenceValue:
    d, n = rp.deformation, label(rp, n_p)
    if rp.kind == HYDROGEN:
        return ReferenceValue(hydrogen_linear(n, rp.l, rp.gamma, d.beta, d.beta_prime),
                              LINEAR_IN_BETA, "hydrogen, linear in beta and beta'")
    return ReferenceValue(osc3d_linear(n, rp.l, d.beta, d.beta_prime),
                          LINEAR_IN_BETA, "3D oscillator, linear in beta and beta'")


def solve_level_3d(rp: RadialProblem, n_p: int, rtol: float = 1e-10) -> float:
    if int(n_p) != n_p or n_p < 0:
        raise InvalidQuantumNumber(f"n_p must be a nonnegative integer, got {n_p}")
    guess = radial_reference(rp, n_p).value
    if rp.kind == HYDROGEN and guess >= 0:
        guess = -rp.gamma**2 / (4 * label(rp, n_p) ** 2)
    return bracket_and_solve(lambda E: phase_integral_3d(rp, E), math.pi * (n_p + rp.delta),
                             guess, rtol)


def spectrum_3d(rp: RadialProblem, n_max: int) -> SpectrumTable:
    """Levels n_p = 0..n_max; rows are keyed by the conventional label."""
    rows = []
    for n_p in range(n_max + 1):
        row = SpectrumRow(label(rp, n_p))
        try:
            row.E_numeric = solve_level_3d(rp, n_p)
        except WKBError as exc:
            row.error = f"{type(exc).__name__}: {exc}"
            rows.append(row)
            continue
        ref = radial_reference(rp, n_p).value
        row.E_reference = ref
        row.abs_err = abs(row.E_numeric - ref)
        row.rel_err = row.abs_err / abs(ref)
        rows.append(row)
    return SpectrumTable(rows, LINEAR_IN_BETA)
