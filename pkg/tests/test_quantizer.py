import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from deformed_wkb import potentials as pot
from deformed_wkb import reference as ref
from deformed_wkb.deformation import DeformationParams
from deformed_wkb.errors import BracketingFailure, DomainError, InvalidQuantumNumber, NoBoundRegion, OutsideAllowedRegion
from deformed_wkb.quantizer import (QuantizationProblem, Representation, phase_integral, phase_integral_P,
                                    phase_integral_x, solve_level, spectrum, wkb_wavefunction)


def ho(beta=0.0, **kw):
    return QuantizationProblem(pot.Harmonic(), DeformationParams(beta), **kw)


def well(width=1.0, beta=0.0, **kw):
    return QuantizationProblem(pot.InfiniteWell(width), DeformationParams(beta), **kw)


def invsq(gamma=4.0, beta=0.01, **kw):
    return QuantizationProblem(pot.InverseSquare(gamma), DeformationParams(beta), **kw)


def sign_changes(y):
    return int(np.sum(np.signbit(y[1:]) != np.signbit(y[:-1])))


def test_defaults():
    assert ho().delta == 0.5 and ho().representation is Representation.XSPACE
    assert well().delta == 0.0
    p = invsq()
    assert p.delta == 0.5 and p.representation is Representation.PSPACE
    with pytest.raises(DomainError):
        invsq(representation="x")
    with pytest.raises(DomainError):
        ho(delta=1.5)


def test_phase_integral_x_examples():
    # one-way action of the undeformed oscillator is pi E / 2
    assert phase_integral_x(ho(), 3.0) == pytest.approx(3 * math.pi / 2, rel=1e-12)
    assert phase_integral_x(ho(0.1), 3.225) == pytest.approx(1.5 * math.pi, rel=1e-10)
    assert phase_integral_x(well(), math.pi**2) == pytest.approx(math.pi, rel=1e-13)
    with pytest.raises(DomainError):
        phase_integral_x(invsq(), -1.0)


def test_phase_integral_P_examples():
    assert phase_integral_P(ho(0.1), 3.225) == pytest.approx(1.5 * math.pi, rel=1e-10)
    assert phase_integral_P(ho(), 5.0) == pytest.approx(2.5 * math.pi, rel=1e-12)
    beta = 0.2
    assert phase_integral_P(well(2.0, beta), 30.0) == pytest.approx(
        2.0 * math.atan(math.sqrt(beta * 30.0)) / math.sqrt(beta), rel=1e-12)


def test_phase_integral_P_inverse_square():
    # |E beta| = 1.82 here: the small-beta level formula does not apply, and the
    # one-way action is 2 sqrt(g) arctan(sigma)/sigma with sigma = sqrt(-(1 + E beta))
    E = -182.375
    sigma = math.sqrt(-(1 + E * 0.01))
    assert phase_integral_P(invsq(), E) == pytest.approx(4 * math.atan(sigma) / sigma, rel=1e-10)
    E = -9.0
    assert 2 * phase_integral_P(invsq(), E) == pytest.approx(ref.inverse_square_phase_closed(E, 4.0, 0.01), rel=1e-10)
    with pytest.raises(NoBoundRegion):
        phase_integral_P(invsq(beta=0.0), -1.0)


def test_solve_level_examples():
    assert solve_level(ho(0.1), 2) == pytest.approx(5.625, rel=1e-10)
    assert solve_level(well(delta=0.0), 1) == pytest.approx(math.pi**2, rel=1e-10)
    assert solve_level(ho(), 0) == pytest.approx(1.0, rel=1e-10)
    with pytest.raises(InvalidQuantumNumber):
        solve_level(well(), 0)
    with pytest.raises(InvalidQuantumNumber):
        solve_level(ho(), -1)


def test_mass_scaling():
    # sqrt(2m) pi E / 2 = pi (n + 1/2)
    assert solve_level(ho(mass=2.0), 3) == pytest.approx(7 / 2.0, rel=1e-10)


def test_deformed_well_has_finitely_many_levels():
    p = well(1.0, 0.01)
    for n in range(1, 5):
        # quasi-momentum p = pi n / width, so P = tan(sqrt(beta) p) / sqrt(beta)
        assert solve_level(p, n) == pytest.approx(math.tan(0.1 * math.pi * n) ** 2 / 0.01, rel=1e-9)
    with pytest.raises(BracketingFailure):
        solve_level(p, 5)


def test_inverse_square_levels():
    p = invsq()
    E0, E1 = solve_level(p, 0), solve_level(p, 1)
    assert 2 * phase_integral_P(p, E1) == pytest.approx(3 * math.pi, rel=1e-9)
    assert E0 < E1 < 0
    with pytest.raises(NoBoundRegion):
        solve_level(invsq(beta=0.0), 0)


def test_spectrum_examples():
    assert spectrum(ho(), 2).energies == pytest.approx([1, 3, 5], rel=1e-10)
    assert spectrum(ho(0.1), 2).energies == pytest.approx([1.025, 3.225, 5.625], rel=1e-10)
    table = spectrum(well(1.0, 0.01), 6)
    assert [r.n for r in table.rows] == list(range(1, 7))
    assert [r.n for r in table.failed] == [5, 6]
    assert table.rows[0].E_reference == pytest.approx(ref.well_wkb(1, 1.0, 0.01, 0.0))


def test_inverse_square_spectrum():
    # levels from the exact phase integral, cross-checked against brute-force solving
    # of the closed form where it applies (1 + E beta > 0 for n >= 1)
    E = spectrum(invsq(), 3).energies
    assert E[0] < E[1] < E[2] < E[3] < 0
    for n in (1, 2, 3):
        assert ref.inverse_square_phase_closed(E[n], 4.0, 0.01) == pytest.approx(2 * math.pi * (n + 0.5), rel=1e-9)


@pytest.mark.parametrize("beta", [0.0, 0.05, 0.1])
@pytest.mark.parametrize("E", [1.5, 3.3, 7.0])
def test_representation_equivalence(beta, E):
    assert phase_integral_x(ho(beta), E) == pytest.approx(phase_integral_P(ho(beta), E), rel=1e-9)


@pytest.mark.parametrize("N", [4, 6])
def test_representation_equivalence_power(N):
    x = QuantizationProblem(pot.PowerLaw(1.2, N), DeformationParams(0.05))
    P = QuantizationProblem(pot.PowerLaw(1.2, N), DeformationParams(0.05), representation="P")
    assert phase_integral(x, 4.0) == pytest.approx(phase_integral(P, 4.0), rel=1e-9)


@pytest.mark.parametrize("prob,energies", [
    (ho(0.1), np.linspace(0.1, 50, 30)),
    (QuantizationProblem(pot.PowerLaw(1.0, 4), DeformationParams(0.05)), np.linspace(0.1, 50, 30)),
    (well(1.0, 0.05), np.linspace(0.1, 500, 30)),
    (invsq(), -np.geomspace(1e3, 1e-3, 30)),
])
def test_phase_monotone(prob, energies):
    phi = [phase_integral(prob, E) for E in energies]
    assert all(a < b for a, b in zip(phi, phi[1:]))


@pytest.mark.parametrize("model", [pot.Harmonic(), pot.PowerLaw(1.0, 4), pot.InfiniteWell(1.0)])
def test_deformation_limit(model):
    for n in range(1 if isinstance(model, pot.InfiniteWell) else 0, 21):
        a = solve_level(QuantizationProblem(model, DeformationParams(1e-12)), n)
        b = solve_level(QuantizationProblem(model, DeformationParams(0.0)), n)
        assert a == pytest.approx(b, rel=1e-8)


@settings(max_examples=15, deadline=None)
@given(st.floats(1e-4, 0.5), st.integers(0, 15))
def test_spectral_ordering(beta, n):
    p = ho(beta)
    assert solve_level(p, n) < solve_level(p, n + 1)


@pytest.mark.parametrize("n", range(11))
@pytest.mark.parametrize("beta", [0.0, 0.1])
def test_wavefunction_nodes_harmonic(n, beta):
    p = ho(beta)
    E = solve_level(p, n)
    r = math.sqrt(E)
    xs = np.linspace(-r, r, 10002)[1:-1]
    assert sign_changes(wkb_wavefunction(p, E, xs)) == n


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("beta", [0.0, 0.1])
def test_wavefunction_nodes_well(n, beta):
    # labels start at 1 for hard walls; level n has n - 1 interior nodes
    p = well(10.0, beta)
    E = solve_level(p, n)
    xs = np.linspace(0, 10.0, 10002)[1:-1]
    assert sign_changes(wkb_wavefunction(p, E, xs)) == n - 1


def test_wavefunction_well_amplitude():
    for n in (1, 3, 5):
        E = solve_level(well(), n)
        assert abs(wkb_wavefunction(well(), E, 0.5)) == pytest.approx(E ** -0.25, rel=1e-9)


def test_wavefunction_ground_state_single_extremum():
    xs = np.linspace(-1, 1, 2002)[1:-1]
    psi = wkb_wavefunction(ho(), 1.0, xs)
    assert sign_changes(psi) == 0
    # the amplitude prefactor diverges at the turning points; the cosine peaks once, at x = 0
    inner = psi[np.abs(xs) <= 0.5]
    assert sign_changes(np.diff(inner)) == 1
    assert abs(xs[np.abs(xs) <= 0.5][np.argmax(inner)]) < 1e-3


def test_wavefunction_outside():
    with pytest.raises(OutsideAllowedRegion):
        wkb_wavefunction(ho(), 1.0, 1.0)
    with pytest.raises(DomainError):
        wkb_wavefunction(invsq(), -5.0, 0.1)
