"""Deformed algebra ``[X, P] = i f(P)`` with ``f(P) = 1 + beta P^2`` (hbar = 1).

The quasi-coordinate pair ``(x, p)`` is canonical, and the physical momentum is
``P(p) = tan(sqrt(beta) p) / sqrt(beta)``, so that ``dP/dp = f(P)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class DeformationParams:
    beta: float = 0.0
    beta_prime: float = 0.0  # only enters the 3D algebra

    def __post_init__(self):
        if not (self.beta >= 0.0 and self.beta_prime >= 0.0):
            raise DomainError(f"deformation parameters must be >= 0, got {self}")

    def minimal_length(self) -> float:
        return math.sqrt(self.beta)

    def p_bound(self) -> float:
        """Supremum of |p|; infinite without deformation."""
        if self.beta == 0.0:
            return math.inf
        return math.pi / (2.0 * math.sqrt(self.beta))


def f_of_P(P, d: DeformationParams):
    return 1.0 + d.beta * np.square(P)


def P_of_p(p, d: DeformationParams):
    if d.beta == 0.0:
        return p
    if np.any(np.abs(p) >= d.p_bound()):
        raise DomainError(f"quasi-momentum outside (-{d.p_bound()}, {d.p_bound()})")
    sb = math.sqrt(d.beta)
    return np.tan(sb * np.asarray(p)) / sb if np.ndim(p) else math.tan(sb * p) / sb


def p_of_P(P, d: DeformationParams):
    if d.beta == 0.0:
        return P
    sb = math.sqrt(d.beta)
    return np.arctan(sb * np.asarray(P)) / sb if np.ndim(P) else math.atan(sb * P) / sb
