"""Phase integrals, the Bohr-Sommerfeld condition and the leading WKB wavefunction.

Convention: ``phase_integral*`` return the one-way action
``Phi(E) = int_{x1}^{x2} p dx`` (half of the closed loop), so the quantization
condition everywhere reads ``Phi(E) = pi (n + delta)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from . import potentials as pot
from .deformation import DeformationParams, f_of_P, p_of_P
from .errors import (BracketingFailure, DomainError, InvalidQuantumNumber, NoBoundRegion,
                     OutsideAllowedRegion, WKBError)
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate_semi_infinite, integrate_sqrt_endpoints

MAX_DOUBLINGS = 100


class Representation(str, Enum):
    XSPACE = "x"
    PSPACE = "P"


def default_delta(model) -> float:
    # hard walls carry no phase loss; smooth turning points give 1/2 in total
    if isinstance(model, pot.InfiniteWell):
        return 0.0
    return 0.5


@dataclass(frozen=True)
class QuantizationProblem:
    potential: pot.PotentialModel
    deformation: DeformationParams = field(default_factory=DeformationParams)
    mass: float = 0.5
    delta: Optional[float] = None
    representation: Optional[Representation] = None
    quad: QuadratureSpec = DEFAULT_SPEC

    def __post_init__(self):
        if not self.mass > 0:
            raise DomainError("mass must be > 0")
        if self.delta is None:
            object.__setattr__(self, "delta", default_delta(self.potential))
        if not 0.0 <= self.delta <= 1.0:
            raise DomainError(f"delta must lie in [0, 1], got {self.delta}")
        rep = self.representation
        if isinstance(self.potential, pot.InverseSquare):
            if rep is not None and Representation(rep) is not Representation.PSPACE:
                raise DomainError("the inverse-square problem is solved in momentum space only")
            rep = Representation.PSPACE
        object.__setattr__(self, "representation", Representation(rep or Representation.XSPACE))

    @property
    def beta(self) -> float:
        return self.deformation.beta


@dataclass
class SpectrumRow:
    n: int
    E_numeric: Optional[float] = None
    E_reference: Optional[float] = None
    abs_err: Optional[float] = None
    rel_err: Optional[float] = None
    validity: Optional[str] = None
    error: Optional[str] = None


@dataclass
class SpectrumTable:
    rows: list
    reference_kind: Optional[str] = None

    @property
    def energies(self):
        return [r.E_numeric for r in self.rows]

    @property
    def failed(self):
        return [r for r in self.rows if r.error is not None]


# -- phase integrals ---------------------------------------------------------

def phase_integral_x(prob: QuantizationProblem, E: float) -> float:
    """One-way action ``int p(P(x)) dx`` between the turning points."""
    model = prob.potential
    if isinstance(model, pot.InverseSquare):
        raise DomainError("inverse-square phase integral is evaluated in momentum space")
    tp = pot.find_turning_points(model, E)
    d, m = prob.deformation, prob.mass

    def integrand(x):
        return p_of_P(pot.classical_P(model, E, x, m, clip=True), d)

    return integrate_sqrt_endpoints(integrand, tp.x1, tp.x2, prob.quad)


def phase_integral_P(prob: QuantizationProblem, E: float) -> float:
    """One-way action written as ``-(1/2) loop X dP / f(P)``."""
    model, d, m = prob.potential, prob.deformation, prob.mass
    if isinstance(model, pot.InverseSquare):
        if not E < 0:
            raise NoBoundRegion(f"inverse-square bound states need E < 0, got {E}")
        if d.beta == 0.0:
            raise NoBoundRegion("no bound states of the inverse-square potential without deformation")
        gam = model.gamma

        def half_branch(P):
            return np.sqrt(gam / (P * P / (2 * m) - E)) / f_of_P(P, d)

        return 2.0 * integrate_semi_infinite(half_branch, prob.quad)

    pot.find_turning_points(model, E)  # validates E
    Pmax = math.sqrt(2 * m * E)

    if isinstance(model, pot.Harmonic):
        def X(P):
            return np.sqrt(np.maximum(E - P * P / (2 * m), 0.0))
    elif isinstance(model, pot.PowerLaw):
        def X(P):
            return np.maximum(E - P * P / (2 * m), 0.0) ** (1.0 / model.N) / model.gamma
    elif isinstance(model, pot.InfiniteWell):
        # rectangle [0, width] x [-Pmax, Pmax]: half the area is width/2 per unit dP
        def X(P):
            return np.full_like(P, 0.5 * model.width)
    else:
        raise TypeError(f"unknown potential {model!r}")

    return integrate_sqrt_endpoints(lambda P: X(P) / f_of_P(P, d), -Pmax, Pmax, prob.quad)


def phase_integral(prob: QuantizationProblem, E: float) -> float:
    if prob.representation is Representation.PSPACE:
        return phase_integral_P(prob, E)
    return phase_integral_x(prob, E)


# -- level solving -----------------------------------------------------------

def undeformed_guess(prob: QuantizationProblem, n: int) -> float:
    """Starting energy for the bracket scan (beta = 0 level, or the small-beta form)."""
    model, m, nd = prob.potential, prob.mass, n + prob.delta
    s2m = math.sqrt(2 * m)
    if isinstance(model, pot.Harmonic):
        return 2.0 * nd / s2m
    if isinstance(model, pot.PowerLaw):
        N = model.N
        c = math.pi * math.gamma(1.5 + 1.0 / N) / (math.gamma(0.5) * math.gamma(1.0 + 1.0 / N))
        return (c * model.gamma * nd / s2m) ** (2.0 * N / (N + 2.0))
    if isinstance(model, pot.InfiniteWell):
        k = math.pi * max(nd, 0.5) / model.width
        return k * k / (2 * m)
    if isinstance(model, pot.InverseSquare):
        if prob.beta == 0.0:
            raise NoBoundRegion("no bound states of the inverse-square potential without deformation")
        return -(4.0 / prob.beta) * math.exp(-math.pi * nd / math.sqrt(2 * m * model.gamma)) / (2 * m)
    raise TypeError(f"unknown potential {model!r}")


def bracket_and_solve(phi, target: float, guess: float, rtol: float = 1e-10) -> float:
    """Solve ``phi(E) = target`` for an increasing ``phi`` of fixed-sign energies.

    The bracket grows geometrically by factors of two away from ``guess``.
    ``phi`` may raise NoBoundRegion below the bottom of the well; that counts
    as zero action.
    """
    if guess == 0.0:
        raise DomainError("guess must be nonzero")

    def F(E):
        try:
            return phi(E) - target
        except NoBoundRegion:
            return -target

    negative = guess < 0
    f0 = F(guess)
    if f0 == 0.0:
        return guess
    # multiplying a positive energy by 2 raises it; for negative energies it lowers it
    factor = 2.0 if (f0 < 0) != negative else 0.5
    a, fa = guess, f0
    for _ in range(MAX_DOUBLINGS):
        b = a * factor
        fb = F(b)
        if (fb > 0) != (f0 > 0) or fb == 0.0:
            lo, hi = sorted((a, b))
            return brentq(F, lo, hi, xtol=1e-300, rtol=rtol, maxiter=200)
        a, fa = b, fb
    raise BracketingFailure(
        f"no sign change of Phi(E) - {target:.6g} between {guess:.6g} and {a:.6g}",
        scanned=tuple(sorted((guess, a))),
    )


def _check_n(prob: QuantizationProblem, n: int):
    if int(n) != n or n < 0:
        raise InvalidQuantumNumber(f"n must be a nonnegative integer, got {n}")
    if n + prob.delta <= 0:
        raise InvalidQuantumNumber("n = 0 with delta = 0 is not a state")


def solve_level(prob: QuantizationProblem, n: int, rtol: float = 1e-10) -> float:
    _check_n(prob, n)
    target = math.pi * (n + prob.delta)
    model = prob.potential
    if isinstance(model, pot.InfiniteWell) and prob.beta > 0:
        # the quasi-momentum is bounded, so the action saturates
        sup = model.width * prob.deformation.p_bound()
        if target >= sup:
            raise BracketingFailure(
                f"no level n={n}: action never exceeds {sup:.12g}, target {target:.12g}",
                scanned=(undeformed_guess(prob, n), math.inf),
            )
    return bracket_and_solve(lambda E: phase_integral(prob, E), target,
                             undeformed_guess(prob, n), rtol)


def first_level(prob: QuantizationProblem) -> int:
    return 1 if prob.delta == 0.0 else 0


def spectrum(prob: QuantizationProblem, n_max: int, n_min: Optional[int] = None,
             with_validity: bool = True) -> SpectrumTable:
    from .reference import reference_for  # reference and validity import this module
    from .validity import assess

    if n_max < 0:
        raise InvalidQuantumNumber("n_max must be >= 0")
    n_min = first_level(prob) if n_min is None else n_min
    rows, kind = [], None
    for n in range(n_min, n_max + 1):
        row = SpectrumRow(n)
        try:
            row.E_numeric = solve_level(prob, n)
        except WKBError as exc:
            row.error = f"{type(exc).__name__}: {exc}"
            rows.append(row)
            continue
        ref = reference_for(prob, n)
        if ref is not None:
            kind = ref.kind
            row.E_reference = ref.value
            row.abs_err = abs(row.E_numeric - ref.value)
            row.rel_err = row.abs_err / abs(ref.value) if ref.value != 0 else None
        if with_validity:
            try:
                row.validity = assess(prob, row.E_numeric).verdict
            except WKBError:
                row.validity = None
        rows.append(row)
    return SpectrumTable(rows, kind)


# -- wavefunction ------------------------------------------------------------

def wkb_wavefunction(prob: QuantizationProblem, E: float, x):
    """Unnormalised standing wave ``|P f(P)|^(-1/2) cos(Phi(x1 -> x) - phase)``.

    The connection phase is pi/4 at a smooth turning point and pi/2 at a hard
    wall, i.e. ``pi (1 - delta) / 2`` for symmetric boundaries. Accepts a scalar
    or an array of positions.
    """
    model = prob.potential
    if isinstance(model, pot.InverseSquare):
        raise DomainError("no coordinate-space wavefunction for the inverse-square problem")
    tp = pot.find_turning_points(model, E)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any((xs <= tp.x1) | (xs >= tp.x2)):
        raise OutsideAllowedRegion(f"x must lie strictly inside ({tp.x1}, {tp.x2})")
    d, m = prob.deformation, prob.mass

    def p_local(y):
        return p_of_P(pot.classical_P(model, E, y, m, clip=True), d)

    order = np.argsort(xs, kind="stable")
    phase = np.empty_like(xs)
    acc, left = 0.0, tp.x1
    for i in order:
        right = xs[i]
        if right > left:
            acc += integrate_sqrt_endpoints(p_local, left, right, prob.quad)
            left = right
        phase[i] = acc
    P = np.asarray(pot.classical_P(model, E, xs, m, clip=True))
    amp = 1.0 / np.sqrt(np.abs(P * f_of_P(P, d)))
    psi = amp * np.cos(phase - 0.5 * math.pi * (1.0 - prob.delta))
    return float(psi[0]) if np.ndim(x) == 0 else psi
