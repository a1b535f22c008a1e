"""Where the WKB approximation can be trusted.

The local criterion compares the first correction of the eikonal expansion with
the leading term: ``metric = |d(P f(P))/dx| / P^2``, which for f = 1 + beta P^2
is ``(1 + 3 beta P^2) |dP/dx| / P^2``. Small values mean the approximation holds.
The global estimate is a window on the wavelength, ``dX^2 / a << lambda << a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import potentials as pot
from .errors import OutsideAllowedRegion, SingularMetric

VALID = "Valid"
MARGINAL = "Marginal"
INVALID = "Invalid"


@dataclass(frozen=True)
class ValidityPolicy:
    valid_below: float = 0.1
    invalid_from: float = 1.0
    margin: float = 0.02  # fraction of the allowed interval dropped at each end
    samples: int = 401

    def verdict(self, metric: float) -> str:
        if metric < self.valid_below:
            return VALID
        if metric < self.invalid_from:
            return MARGINAL
        return INVALID


DEFAULT_POLICY = ValidityPolicy()


@dataclass
class ValidityReport:
    max_metric: float
    metric_profile: list
    wavelength: float
    window: tuple
    window_empty: bool
    window_metric: float
    driver: str
    verdict: str
    notes: list = field(default_factory=list)


def local_metric(prob, E: float, x):
    model, m, beta = prob.potential, prob.mass, prob.beta
    tp = pot.find_turning_points(model, E)
    xs = np.asarray(x, dtype=float)
    outside = (xs < tp.x1) | (xs > tp.x2)
    if not model.smooth:
        outside |= (xs == tp.x1) | (xs == tp.x2)
    if np.any(outside):
        raise OutsideAllowedRegion(f"x must lie inside ({tp.x1}, {tp.x2})")
    P = np.asarray(pot.classical_P(model, E, xs, m))
    if np.any(P == 0):
        raise SingularMetric("metric diverges where P = 0")
    dPdx = -m * np.asarray(pot.dU_dx(model, xs)) / P
    out = (1 + 3 * beta * P * P) * np.abs(dPdx) / (P * P)
    return float(out) if np.ndim(x) == 0 else out


def lambda_window(a: float, beta: float):
    """(dX^2 / a, a) with dX = sqrt(beta); the bool flags an empty window."""
    if not a > 0:
        raise ValueError("a must be > 0")
    lo = beta / a
    return (lo, a), math.sqrt(beta) >= a


def well_n_window(width: float, beta: float):
    """Quantum numbers 1 << n << 1/(gamma^2 beta) of the hard-wall well, gamma = 2/width."""
    if not width > 0 or beta < 0:
        raise ValueError("need width > 0 and beta >= 0")
    gamma = 2.0 / width
    return (1.0, math.inf if beta == 0 else 1.0 / (gamma * gamma * beta))


def window_metric(wavelength: float, window) -> float:
    """How far the wavelength is from being deep inside the window (0 is best)."""
    lo, hi = window
    return max(wavelength / hi, lo / wavelength)


def assess(prob, E: float, policy: ValidityPolicy = DEFAULT_POLICY) -> ValidityReport:
    model = prob.potential
    tp = pot.find_turning_points(model, E)
    a = tp.width
    cut = policy.margin * a
    xs = np.linspace(tp.x1 + cut, tp.x2 - cut, policy.samples)
    metric = local_metric(prob, E, xs)
    P = np.asarray(pot.classical_P(model, E, xs, prob.mass))
    wavelength = 2 * math.pi / float(P.max())
    window, empty = lambda_window(a, prob.beta)
    wmetric = window_metric(wavelength, window)
    max_metric = float(metric.max())
    notes = []
    if isinstance(model, pot.InfiniteWell):
        driver = "lambda-window"
        verdict = policy.verdict(wmetric)
        notes.append("interior metric vanishes; the wavelength window decides")
    else:
        driver = "local"
        verdict = policy.verdict(max_metric)
    if empty:
        verdict = INVALID
        notes.append("minimal length exceeds the system size: empty wavelength window")
    if isinstance(model, pot.InverseSquare):
        notes.append("the local criterion fails near the singular origin for any level")
    return ValidityReport(
        max_metric=max_metric,
        metric_profile=list(zip(xs.tolist(), metric.tolist())),
        wavelength=wavelength,
        window=window,
        window_empty=empty,
        window_metric=wmetric,
        driver=driver,
        verdict=verdict,
        notes=notes,
    )
