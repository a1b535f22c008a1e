import math

import numpy as np
import pytest

from deformed_wkb import reference as ref
from deformed_wkb.deformation import DeformationParams
from deformed_wkb.errors import ClassicallyForbidden, InvalidQuantumNumber, NoBoundRegion
from deformed_wkb.radial3d import (RadialProblem, label, momentum_turning_points, phase_integral_3d,
                                   radial_reference, solve_level_3d, spectrum_3d, x_p, x_p_hydrogen, x_p_oscillator)


def hydrogen(l=0, gamma=1.0, beta=0.0, beta_prime=0.0):
    return RadialProblem("hydrogen", l=l, gamma=gamma, deformation=DeformationParams(beta, beta_prime))


def oscillator(l=0, beta=0.0, beta_prime=0.0):
    return RadialProblem("oscillator", l=l, deformation=DeformationParams(beta, beta_prime))


def positive_real_roots(coeffs):
    r = np.roots(coeffs)
    return sorted(x.real for x in r if abs(x.imag) < 1e-12 and x.real > 0)


def test_x_p_examples():
    assert x_p_hydrogen(0.5, -0.25, hydrogen()) == pytest.approx(math.sqrt(3), rel=1e-14)
    assert x_p_oscillator(1.0, 3.0, oscillator()) == pytest.approx(math.sqrt(1.75), rel=1e-14)
    with pytest.raises(ClassicallyForbidden):
        x_p_oscillator(0.1, 3.0, oscillator())


def test_oscillator_turning_points_undeformed():
    lo, hi = momentum_turning_points(oscillator(), 3.0)
    assert lo**2 == pytest.approx((3 - math.sqrt(8)) / 2, rel=1e-12)
    assert hi**2 == pytest.approx((3 + math.sqrt(8)) / 2, rel=1e-12)


@pytest.mark.parametrize("l,beta,bp,E", [(0, 0.0, 0.0, -0.25), (2, 0.0, 0.0, -0.01),
                                         (0, 1e-2, 0.0, -0.1), (1, 0.3, 0.2, -0.05)])
def test_hydrogen_turning_points_against_quartic(l, beta, bp, E):
    rp = hydrogen(l, 1.0, beta, bp)
    L = l + 0.5
    # (1 + b p^2) L (p^2 - E) - g p = 0 expanded in powers of p
    roots = positive_real_roots([L * beta, 0.0, L * (1 - beta * E), -1.0, -L * E])
    assert momentum_turning_points(rp, E) == pytest.approx(roots, rel=1e-10)


@pytest.mark.parametrize("rp,E", [(hydrogen(1, 1.0, 1e-3, 1e-3), -0.05), (oscillator(2, 0.01, 0.005), 9.0),
                                  (hydrogen(0), -0.2), (oscillator(0), 3.0)])
def test_turning_points_zero_radicand(rp, E):
    lo, hi = momentum_turning_points(rp, E)
    assert lo < hi
    for p in (lo, hi):
        assert x_p(p, E, rp, clip=True) <= 1e-5  # sqrt of a ~1e-10 radicand
    ps = np.linspace(lo, hi, 1000)[1:-1]
    assert np.all(x_p(ps, E, rp) > 0)


def test_no_bound_region():
    with pytest.raises(NoBoundRegion):
        momentum_turning_points(hydrogen(), 0.1)
    with pytest.raises(NoBoundRegion):
        momentum_turning_points(hydrogen(2), -1.0)
    with pytest.raises(NoBoundRegion):
        momentum_turning_points(oscillator(1), 2.0)


@pytest.mark.parametrize("l,E", [(0, -0.2), (0, -0.02), (1, -0.02), (1, -0.003), (3, -0.003)])
def test_hydrogen_phase_undeformed(l, E):
    expected = -math.pi * (l + 0.5) + math.pi / (2 * math.sqrt(-E))
    assert phase_integral_3d(hydrogen(l), E) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("l", [0, 1, 4])
@pytest.mark.parametrize("E", [10.0, 25.0])
def test_oscillator_phase_undeformed(l, E):
    expected = math.pi * E / 4 - math.pi * (l + 0.5) / 2
    assert phase_integral_3d(oscillator(l), E) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("rp,energies", [
    (hydrogen(1, 1.0, 1e-3, 5e-4), -np.geomspace(0.06, 1e-4, 25)),
    (oscillator(2, 0.01, 0.005), np.linspace(6, 60, 25)),
])
def test_phase_monotone(rp, energies):
    phi = [phase_integral_3d(rp, E) for E in energies]
    assert all(a < b for a, b in zip(phi, phi[1:]))


def test_solve_examples():
    assert solve_level_3d(hydrogen(), 0) == pytest.approx(-0.25, rel=1e-10)
    assert solve_level_3d(oscillator(), 0) == pytest.approx(3.0, rel=1e-10)
    E = solve_level_3d(oscillator(1, 0.01, 0.005), 0)
    assert abs(E - 5.105) <= 10 * 0.015**2 * 1.5**4


def test_principal_number_mapping():
    for l in range(4):
        for n_p in range(4):
            n = label(hydrogen(l), n_p)
            assert n == n_p + l + 1
            assert solve_level_3d(hydrogen(l, 1.7), n_p) == pytest.approx(-1.7**2 / (4 * n * n), rel=1e-9)


def test_oscillator_mapping():
    for l in range(4):
        for n_p in range(4):
            assert solve_level_3d(oscillator(l), n_p) == pytest.approx(2 * (2 * n_p + l) + 3, rel=1e-9)


def test_hydrogen_regression_l0_np3():
    assert solve_level_3d(hydrogen(0, 1.0, 1e-3, 0.0), 3) == pytest.approx(
        ref.hydrogen_linear(4, 0, 1.0, 1e-3, 0.0), abs=1e-6)


@pytest.mark.parametrize("rp_factory,n_p", [(lambda b: hydrogen(0, 1.0, b, b), 1),
                                            (lambda b: hydrogen(2, 1.0, b, 0.0), 1),
                                            (lambda b: oscillator(1, b, b / 2), 2)])
def test_linear_order_agreement_is_quadratic(rp_factory, n_p):
    gaps = []
    for b in (1e-3, 5e-4):
        rp = rp_factory(b)
        gaps.append(abs(solve_level_3d(rp, n_p, rtol=1e-14) - radial_reference(rp, n_p).value))
    assert gaps[0] / gaps[1] == pytest.approx(4.0, rel=0.2)


def test_spectrum_rows():
    table = spectrum_3d(hydrogen(1, 1.0, 1e-3, 0.0), 2)
    assert [r.n for r in table.rows] == [2, 3, 4]
    assert all(r.abs_err < 1e-6 for r in table.rows)


def test_bad_l():
    with pytest.raises(InvalidQuantumNumber):
        hydrogen(-1)
    with pytest.raises(InvalidQuantumNumber):
        solve_level_3d(hydrogen(), -1)
