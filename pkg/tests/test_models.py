import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ptcoulomb.contour import Contour
from ptcoulomb.errors import DivergentState, NonPositiveAlphaSquared, NonPositiveASquared, OriginEvaluation
from ptcoulomb.models import (
    CoulombParams,
    OscillatorParams,
    QuantumState,
    alpha,
    big_a,
    coulomb_energy,
    coulomb_residual,
    coulomb_wavefunction,
    coulomb_wavefunction_derivs,
    ho_energy,
    ho_residual,
    ho_wavefunction,
    ho_wavefunction_derivs,
    kappa_sq,
)

S = QuantumState


@pytest.mark.parametrize(
    "params, expected",
    [
        (OscillatorParams(1, 0, 0.0), 0.5),
        (OscillatorParams(3, 0, 0.0), 0.5),
        (OscillatorParams(3, 1, 0.75), math.sqrt(3.0)),
    ],
)
def test_alpha(params, expected):
    assert alpha(params) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize(
    "params, expected",
    [(CoulombParams(3, 0, 0.0), 0.5), (CoulombParams(2, 0, 0.25), 0.5), (CoulombParams(4, 1, 0.0), 2.0)],
)
def test_big_a(params, expected):
    assert big_a(params) == pytest.approx(expected, rel=1e-15)


def test_non_positive_squares_raise():
    with pytest.raises(NonPositiveAlphaSquared):
        alpha(OscillatorParams(2, 0, 0.0))
    with pytest.raises(NonPositiveASquared):
        big_a(CoulombParams(2, 0, -0.1))


def test_state_validation():
    with pytest.raises(ValueError):
        S(0, 0)
    with pytest.raises(ValueError):
        S(-1, 1)


def test_ho_energy_examples():
    assert ho_energy(S(0, 1), 0.5) == 1.0
    assert ho_energy(S(2, -1), 0.5) == 11.0
    assert ho_energy(S(0, 1), 1.0) == 0.0


def test_ho_wavefunction_examples():
    e = math.exp(0.5)
    assert ho_wavefunction(S(0, -1), 0.5, -1j) == pytest.approx(-1j * e, rel=1e-15)
    assert ho_wavefunction(S(0, 1), 0.5, -1j) == pytest.approx(e, rel=1e-15)
    with pytest.raises(OriginEvaluation):
        ho_wavefunction(S(0, 1), 0.5, 1e-13)


def test_ho_modulus_symmetry_example():
    line = Contour.shifted_line(1.0)
    s = S(1, 1)
    assert abs(ho_wavefunction(s, 0.5, line.eval(-3.0))) == pytest.approx(
        abs(ho_wavefunction(s, 0.5, line.eval(3.0))), rel=1e-12
    )


def test_kappa_sq_examples():
    assert kappa_sq(S(0, -1), 0.5, 1.0) == pytest.approx(0.5)
    assert kappa_sq(S(1, 1), 0.25, 2.0) == pytest.approx(0.8)
    with pytest.raises(DivergentState):
        kappa_sq(S(0, 1), 0.5, 1.0)


def test_coulomb_energy_examples():
    assert coulomb_energy(S(0, -1), 0.5, 1.0).energy == pytest.approx(0.25)
    assert coulomb_energy(S(1, 1), 0.25, 2.0).energy == pytest.approx(0.64)
    away = coulomb_energy(S(0, 1), 0.8, 1.0)
    assert away.energy == pytest.approx(1 / 0.36)
    assert not away.normalizable and away.kappa_sq < 0


def test_coulomb_wavefunction_examples():
    assert coulomb_wavefunction(S(0, -1), 0.5, 1.0, -1j) == pytest.approx(-1j * math.exp(0.5), rel=1e-15)
    # direct transcription, n=1: t^1 exp(i t/4) (2 - w), w = -2i t/4
    t = -1j
    k2 = 0.25
    w = -2j * k2 * t
    direct = t * cmath.exp(1j * k2 * t) * (1 + 1 - w)
    assert abs(coulomb_wavefunction(S(1, -1), 0.5, 1.0, t) - direct) <= 1e-12 * abs(direct)
    assert direct == pytest.approx(-2.5j * math.exp(0.25))


def test_coulomb_derivative_two_factor_form():
    k2 = 0.5
    t = -1j
    psi, d1, _ = coulomb_wavefunction_derivs(S(0, -1), 0.5, 1.0, t)
    assert d1 == pytest.approx((1 + 1j * k2 * t) * cmath.exp(1j * k2 * t), rel=1e-14)
    assert psi == pytest.approx(t * cmath.exp(1j * k2 * t), rel=1e-14)


STATES = [S(n, q) for n in range(4) for q in (1, -1)]


@pytest.mark.parametrize("s", STATES)
@pytest.mark.parametrize("A", [0.3, 0.5, 1.2])
def test_coulomb_derivs_vs_finite_difference(s, A):
    if abs(2 * s.n + 1 - 2 * s.q * A) < 1e-12:
        pytest.skip("pole")
    t, h = 1 - 2j, 1e-5
    f = lambda z: coulomb_wavefunction(s, A, 1.0, z)
    psi, d1, d2 = coulomb_wavefunction_derivs(s, A, 1.0, t)
    fd1 = (f(t + h) - f(t - h)) / (2 * h)
    fd2 = (f(t + h) - 2 * f(t) + f(t - h)) / h**2
    assert abs(d1 - fd1) <= 1e-7 * max(abs(d1), abs(psi))
    assert abs(d2 - fd2) <= 1e-4 * max(abs(d2), abs(psi))


@pytest.mark.parametrize("s", STATES)
def test_ho_derivs_vs_finite_difference(s):
    r, h = 0.7 - 1.0j, 1e-5
    f = lambda z: ho_wavefunction(s, 0.75, z)
    psi, d1, _ = ho_wavefunction_derivs(s, 0.75, r)
    assert abs(d1 - (f(r + h) - f(r - h)) / (2 * h)) <= 1e-7 * max(abs(d1), abs(psi))


@pytest.mark.parametrize("s", STATES)
@pytest.mark.parametrize("A", [0.3, 0.8, 1.2])
def test_coulomb_ode_residual(s, A):
    t = Contour.ks_parabola(1.0, 1.0).eval(np.linspace(-5, 5, 50))
    assert np.max(coulomb_residual(s, A, 1.0, t)) <= 1e-9


@pytest.mark.parametrize("s", STATES)
@pytest.mark.parametrize("a", [0.5, 0.75, 2.4])
def test_ho_ode_residual(s, a):
    r = Contour.shifted_line(1.0).eval(np.linspace(-5, 5, 50))
    assert np.max(ho_residual(s, a, r)) <= 1e-9


alphas = st.floats(0.01, 6.0)
ns = st.integers(0, 40)
qs = st.sampled_from([1, -1])


@given(ns, qs, alphas)
def test_equidistance_and_splitting(n, q, a):
    assert ho_energy(S(n + 1, q), a) - ho_energy(S(n, q), a) == pytest.approx(4.0, abs=1e-12)
    assert ho_energy(S(n, -1), a) - ho_energy(S(n, 1), a) == pytest.approx(4 * a, rel=1e-12)


def test_equidistance_exact_on_dyadic_alpha():
    for a in (0.5, 0.75, 1.25, 3.0):
        for n in range(20):
            for q in (1, -1):
                assert ho_energy(S(n + 1, q), a) - ho_energy(S(n, q), a) == 4.0
            assert ho_energy(S(n, -1), a) - ho_energy(S(n, 1), a) == 4 * a


def test_one_dimensional_reduction():
    merged = sorted(ho_energy(S(n, q), 0.5) for n in range(10) for q in (1, -1))
    assert merged == [2.0 * k + 1 for k in range(20)]


@given(ns, qs, st.floats(0.01, 5.0), st.floats(0.1, 10.0))
def test_main_result_identity(n, q, A, z):
    den = 2 * n + 1 - 2 * q * A
    if abs(den) < 1e-6:
        return
    lvl = coulomb_energy(S(n, q), A, z)
    assert lvl.energy * den**2 == pytest.approx(z * z, rel=1e-14)
    assert lvl.energy == lvl.kappa_sq**2
    assert lvl.normalizable == (den > 0)


@given(st.integers(0, 5), qs, st.floats(0.05, 3.0), st.floats(0.1, 11.9))
def test_pt_modulus_symmetry(n, q, a, x):
    s = S(n, q)
    line = Contour.shifted_line(1.0)
    left, right = ho_wavefunction(s, a, line.eval(-x)), ho_wavefunction(s, a, line.eval(x))
    assert abs(abs(left) - abs(right)) <= 1e-12 * max(abs(left), 1e-300)
    den = 2 * n + 1 - 2 * q * a
    if abs(den) < 1e-6:
        return
    par = Contour.ks_parabola(1.0, 1.0)
    left, right = coulomb_wavefunction(s, a, 1.0, par.eval(-x)), coulomb_wavefunction(s, a, 1.0, par.eval(x))
    assert abs(abs(left) - abs(right)) <= 1e-12 * max(abs(left), 1e-300)
