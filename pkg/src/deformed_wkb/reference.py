"""Closed-form spectra used as oracles and comparison columns.

Kinds:
  ``wkb-closed``      the phase integral evaluated exactly, then inverted;
  ``exact-external``  exact quantum spectrum of the deformed problem;
  ``linear-in-beta``  first order in the deformation parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import potentials as pot
from .errors import DomainError, InvalidQuantumNumber

WKB_CLOSED = "wkb-closed"
EXACT_EXTERNAL = "exact-external"
LINEAR_IN_BETA = "linear-in-beta"


@dataclass(frozen=True)
class ReferenceValue:
    value: float
    kind: str
    source: str


def ho_wkb_closed(n, beta):
    return (2 * n + 1) + beta * (n * n + n + 0.25)


def ho_exact_kempf(n, beta):
    """Exact oscillator spectrum for H = P^2 + X^2 with [X, P] = i(1 + beta P^2)."""
    return (2 * n + 1) * (beta / 2 + math.sqrt(1 + beta * beta / 4)) + beta * n * n


def ho_gap_series(n, beta):
    """Leading terms of ho_exact_kempf - ho_wkb_closed."""
    return beta / 4 + (2 * n + 1) * beta * beta / 8


def anharmonic_coefficient(N):
    """pi Gamma(3/2 + 1/N) / (Gamma(1/2) Gamma(1 + 1/N))."""
    return math.pi * math.gamma(1.5 + 1.0 / N) / (math.gamma(0.5) * math.gamma(1.0 + 1.0 / N))


def anharmonic_undeformed(n, gamma, N):
    if N < 2 or N % 2:
        raise DomainError(f"N must be even and >= 2, got {N}")
    return (anharmonic_coefficient(N) * gamma * (n + 0.5)) ** (2.0 * N / (2.0 + N))


def anharmonic_linear(n, gamma, N, beta):
    E0 = anharmonic_undeformed(n, gamma, N)
    return E0 * (1 + 2 * beta * E0 / ((1 + 2.0 / N) * (3 + 2.0 / N)))


def well_wkb(n, width, beta, delta):
    """k^2 + (2/3) beta k^4 with k = pi (n + delta) / width.

    delta = 1/2 is the N -> infinity limit of the power-law result; delta = 0 is
    the direct hard-wall treatment.
    """
    if width <= 0:
        raise DomainError("width must be > 0")
    if n < 0 or n + delta <= 0:
        raise InvalidQuantumNumber(f"n={n} with delta={delta} is not a state")
    k = math.pi * (n + delta) / width
    return k * k + (2.0 / 3.0) * beta * k**4


def inverse_square_phase_closed(E, gamma, beta):
    """Full-loop action of the -gamma/X^2 problem; equals 2 pi (n + delta) at a level."""
    s2 = 1 + E * beta
    if not E < 0:
        raise DomainError(f"need E < 0, got {E}")
    if s2 <= 0:
        raise DomainError(f"closed form needs 1 + E beta > 0, got {s2}")
    s = math.sqrt(s2)
    # the log argument equals ((1 + s) / (1 - s))^2; 1 - s is formed without cancellation
    one_minus_s = -E * beta / (1 + s)
    return math.sqrt(gamma) / s * 2.0 * math.log((1 + s) / one_minus_s)


def inverse_square_small_beta(n, gamma, beta, delta):
    if beta <= 0:
        raise DomainError("no bound states of the inverse-square potential without deformation")
    return -(4.0 / beta) * math.exp(-math.pi * (n + delta) / math.sqrt(gamma))


def _check_hydrogen(n, l):
    if n < 1 or not 0 <= l <= n - 1:
        raise InvalidQuantumNumber(f"need n >= 1 and 0 <= l <= n-1, got n={n}, l={l}")


def hydrogen_linear(n, l, gamma, beta, beta_prime):
    _check_hydrogen(n, l)
    L = l + 0.5
    return (-gamma**2 / (4 * n * n)
            + gamma**4 / (8 * n**3) * (beta * (2 / L - 1 / n) + beta_prime * (1 / L - 1 / n)))


def benczik_extra_term(n, l, gamma, beta, beta_prime):
    """Term present in the perturbative hydrogen result but absent from the WKB one."""
    if l < 1:
        raise DomainError("the perturbative extra term is singular at l = 0")
    return gamma**4 / (16 * n**3) * (2 * beta - beta_prime) / (l * (l + 1) * (l + 0.5))


def osc3d_linear(n, l, beta, beta_prime):
    if n < 0 or l < 0 or (n - l) < 0 or (n - l) % 2:
        raise InvalidQuantumNumber(f"need n - l even and >= 0, got n={n}, l={l}")
    return 2 * n + 3 + (beta + beta_prime) * (n + 1.5) ** 2 + (beta - beta_prime) * (l + 0.5) ** 2


def chang_gap(beta, beta_prime):
    """Exact-minus-WKB offset of the deformed 3D oscillator."""
    return 2 * beta - beta_prime / 2


def reference_for(prob, n):
    """Best available comparison value for level ``n`` of a 1D problem, or None."""
    model, beta, delta = prob.potential, prob.beta, prob.delta
    if prob.mass != 0.5:
        return None
    if isinstance(model, pot.Harmonic) and delta == 0.5:
        return ReferenceValue(ho_wkb_closed(n, beta), WKB_CLOSED, "harmonic WKB closed form")
    if isinstance(model, pot.PowerLaw) and delta == 0.5:
        kind = WKB_CLOSED if (model.N == 2 and beta == 0) else LINEAR_IN_BETA
        return ReferenceValue(anharmonic_linear(n, model.gamma, model.N, beta), kind,
                              "power-law, linear in beta")
    if isinstance(model, pot.InfiniteWell):
        return ReferenceValue(well_wkb(n, model.width, beta, delta), LINEAR_IN_BETA,
                              "infinite well, linear in beta")
    if isinstance(model, pot.InverseSquare) and beta > 0:
        return ReferenceValue(inverse_square_small_beta(n, model.gamma, beta, delta),
                              LINEAR_IN_BETA, "inverse square, small beta")
    return None
