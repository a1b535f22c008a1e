"""Bohr-Sommerfeld spectra on a deformed phase space with a minimal length."""

from .deformation import DeformationParams, P_of_p, f_of_P, p_of_P
from .potentials import Harmonic, InfiniteWell, InverseSquare, PowerLaw, find_turning_points
from .quadrature import QuadratureSpec, integrate_semi_infinite, integrate_sqrt_endpoints
from .quantizer import (QuantizationProblem, Representation, phase_integral, phase_integral_P,
                        phase_integral_x, solve_level, spectrum, wkb_wavefunction)
from .radial3d import RadialProblem, phase_integral_3d, solve_level_3d, spectrum_3d
from .validity import assess, lambda_window, local_metric, well_n_window

__all__ = [
    "DeformationParams", "P_of_p", "f_of_P", "p_of_P",
    "Harmonic", "InfiniteWell", "InverseSquare", "PowerLaw", "find_turning_points",
    "QuadratureSpec", "integrate_semi_infinite", "integrate_sqrt_endpoints",
    "QuantizationProblem", "Representation", "phase_integral", "phase_integral_P",
    "phase_integral_x", "solve_level", "spectrum", "wkb_wavefunction",
    "RadialProblem", "phase_integral_3d", "solve_level_3d", "spectrum_3d",
    "assess", "lambda_window", "local_metric", "well_n_window",
]
