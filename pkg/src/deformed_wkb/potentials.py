"""Potential models, classical momentum profiles and turning points.

Units follow the convention hbar = 1, and the default mass is 1/2 so that the
harmonic Hamiltonian reads ``H = P^2 + X^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import ClassicallyForbidden, DomainError, NoBoundRegion

# |E - U| below this fraction of the energy scale is rounding noise and counts as zero
_ROUNDING = 1e-13


@dataclass(frozen=True)
class Harmonic:
    """U(x) = x^2."""

    name = "harmonic"
    smooth = True


@dataclass(frozen=True)
class PowerLaw:
    """U(x) = (gamma x)^N with N even."""

    gamma: float = 1.0
    N: int = 4

    name = "power"
    smooth = True

    def __post_init__(self):
        if not self.gamma > 0:
            raise DomainError("PowerLaw gamma must be > 0")
        if int(self.N) != self.N or self.N < 2 or self.N % 2:
            raise DomainError(f"PowerLaw N must be an even integer >= 2, got {self.N}")


@dataclass(frozen=True)
class InfiniteWell:
    """U = 0 on (0, width), hard walls outside."""

    width: float = 1.0

    name = "well"
    smooth = False

    def __post_init__(self):
        if not self.width > 0:
            raise DomainError("InfiniteWell width must be > 0")


@dataclass(frozen=True)
class InverseSquare:
    """U(x) = -gamma / x^2 on the half line x > 0."""

    gamma: float = 1.0

    name = "invsq"
    smooth = False

    def __post_init__(self):
        if not self.gamma > 0:
            raise DomainError("InverseSquare gamma must be > 0")


PotentialModel = Union[Harmonic, PowerLaw, InfiniteWell, InverseSquare]


@dataclass(frozen=True)
class TurningPoints:
    x1: float
    x2: float

    @property
    def width(self) -> float:
        return self.x2 - self.x1


def _check_domain(model, x):
    x = np.asarray(x, dtype=float)
    if isinstance(model, InverseSquare) and np.any(x <= 0):
        raise DomainError("InverseSquare is defined for x > 0 only")
    if isinstance(model, InfiniteWell) and np.any((x <= 0) | (x >= model.width)):
        raise DomainError("x outside the open well interval")
    return x


def _scalar_or_array(x, out):
    return float(out) if np.ndim(x) == 0 else out


def evaluate_U(model: PotentialModel, x):
    xa = _check_domain(model, x)
    if isinstance(model, Harmonic):
        out = xa**2
    elif isinstance(model, PowerLaw):
        out = (model.gamma * np.abs(xa)) ** model.N
    elif isinstance(model, InfiniteWell):
        out = np.zeros_like(xa)
    elif isinstance(model, InverseSquare):
        out = -model.gamma / xa**2
    else:
        raise TypeError(f"unknown potential {model!r}")
    return _scalar_or_array(x, out)


def dU_dx(model: PotentialModel, x):
    xa = _check_domain(model, x)
    if isinstance(model, Harmonic):
        out = 2.0 * xa
    elif isinstance(model, PowerLaw):
        out = np.sign(xa) * model.N * model.gamma**model.N * np.abs(xa) ** (model.N - 1)
    elif isinstance(model, InfiniteWell):
        out = np.zeros_like(xa)
    elif isinstance(model, InverseSquare):
        out = 2.0 * model.gamma / xa**3
    else:
        raise TypeError(f"unknown potential {model!r}")
    return _scalar_or_array(x, out)


def kinetic_energy(model: PotentialModel, E: float, x, clip: bool = False):
    """E - U(x); with ``clip`` every negative value is set to zero."""
    U = np.asarray(evaluate_U(model, x))
    T = E - U
    slack = _ROUNDING * np.maximum(abs(E), np.abs(U))
    if not clip and np.any(T < -slack):
        raise ClassicallyForbidden(f"E={E} below U(x) at x={x}")
    T = np.where(T <= slack, 0.0, T)
    return _scalar_or_array(x, T)


def classical_P(model: PotentialModel, E: float, x, m: float = 0.5, clip: bool = False):
    T = kinetic_energy(model, E, x, clip=clip)
    return _scalar_or_array(x, np.sqrt(2.0 * m * np.asarray(T)))


def find_turning_points(model: PotentialModel, E: float) -> TurningPoints:
    if isinstance(model, Harmonic):
        if not E > 0:
            raise NoBoundRegion(f"harmonic well needs E > 0, got {E}")
        r = math.sqrt(E)
        return TurningPoints(-r, r)
    if isinstance(model, PowerLaw):
        if not E > 0:
            raise NoBoundRegion(f"power-law well needs E > 0, got {E}")
        r = E ** (1.0 / model.N) / model.gamma
        return TurningPoints(-r, r)
    if isinstance(model, InfiniteWell):
        if not E > 0:
            raise NoBoundRegion(f"infinite well needs E > 0, got {E}")
        return TurningPoints(0.0, model.width)
    if isinstance(model, InverseSquare):
        if not E < 0:
            raise NoBoundRegion(f"inverse-square bound states need E < 0, got {E}")
        return TurningPoints(0.0, math.sqrt(model.gamma / -E))
    raise TypeError(f"unknown potential {model!r}")
