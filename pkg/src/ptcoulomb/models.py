"""Closed-form PT-symmetric oscillator and Coulomb models.

Oscillator:  -chi'' + (alpha^2 - 1/4)/r^2 chi + r^2 chi = eps2 chi
Coulomb:     -psi'' + (A^2 - 1/4)/t^2 psi + i Ze2/t psi = E psi

Both families are labelled by (n, q) with quasi-parity q = +1 or -1.
Wavefunctions are returned unnormalized.  Energies are eps2 (never its
square root) and E.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DivergentState,
    NonPositiveAlphaSquared,
    NonPositiveASquared,
    OriginEvaluation,
)
from .specialfn import laguerre, laguerre_deriv

ORIGIN_TOL = 1e-12
DIVERGENCE_TOL = 1e-12


@dataclass(frozen=True)
class OscillatorParams:
    d: int
    j: int
    f: float = 0.0


@dataclass(frozen=True)
class CoulombParams:
    D: int
    J: int
    F: float = 0.0
    z_e2: float = 1.0


@dataclass(frozen=True)
class QuantumState:
    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if self.q not in (1, -1):
            raise ValueError(f"quasi-parity must be +1 or -1, got {self.q}")


@dataclass(frozen=True)
class CoulombLevel:
    energy: float
    kappa_sq: float
    normalizable: bool


def alpha(p: OscillatorParams) -> float:
    sq = (p.j + (p.d - 2) / 2.0) ** 2 + p.f
    if sq <= 0.0:
        raise NonPositiveAlphaSquared(f"alpha^2 = {sq} <= 0 for {p}")
    return math.sqrt(sq)


def big_a(p: CoulombParams) -> float:
    sq = (p.J + (p.D - 2) / 2.0) ** 2 + p.F
    if sq <= 0.0:
        raise NonPositiveASquared(f"A^2 = {sq} <= 0 for {p}")
    return math.sqrt(sq)


def cut_power(z, p: float):
    """z**p on the plane cut along the positive imaginary axis.

    arg z is taken in (-3pi/2, pi/2], which continues the lower half plane
    across the negative real axis.
    """
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) < ORIGIN_TOL):
        raise OriginEvaluation("power evaluated at the origin")
    arg = np.angle(z)
    arg = np.where(arg > 0.5 * np.pi, arg - 2.0 * np.pi, arg)
    out = np.exp(p * (np.log(np.abs(z)) + 1j * arg))
    return out if out.ndim else complex(out)


# -- oscillator -------------------------------------------------------------

def ho_energy(s: QuantumState, alpha: float) -> float:
    return 4.0 * s.n + 2.0 - 2.0 * s.q * alpha


def ho_wavefunction(s: QuantumState, alpha: float, r):
    """r^(1/2 - q alpha) exp(-r^2/2) L_n^(-q alpha)(r^2)."""
    r = np.asarray(r, dtype=complex)
    r2 = r * r
    val = cut_power(r, 0.5 - s.q * alpha) * np.exp(-0.5 * r2) * laguerre(s.n, -s.q * alpha, r2)
    return val if np.ndim(val) else complex(val)


def ho_wavefunction_derivs(s: QuantumState, alpha: float, r):
    """(chi, dchi/dr, d2chi/dr2) in closed form."""
    r = np.asarray(r, dtype=complex)
    a = -s.q * alpha
    p = 0.5 + a
    r2 = r * r
    g = cut_power(r, p) * np.exp(-0.5 * r2)
    lg = p / r - r
    g1 = g * lg
    g2 = g * (lg * lg - p / r2 - 1.0)
    lag = laguerre(s.n, a, r2)
    dl = laguerre_deriv(s.n, a, r2)
    ddl = laguerre_deriv(s.n, a, r2, order=2)
    lag1 = 2.0 * r * dl
    lag2 = 4.0 * r2 * ddl + 2.0 * dl
    return g * lag, g1 * lag + g * lag1, g2 * lag + 2.0 * g1 * lag1 + g * lag2


def ho_potential(alpha: float, r):
    r = np.asarray(r, dtype=complex)
    return (alpha * alpha - 0.25) / (r * r) + r * r


def ho_residual(s: QuantumState, alpha: float, r):
    """Normalized |-chi'' + V chi - eps2 chi| at each r."""
    chi, _, chi2 = ho_wavefunction_derivs(s, alpha, r)
    v = ho_potential(alpha, r)
    e = ho_energy(s, alpha)
    num = np.abs(-chi2 + v * chi - e * chi)
    den = np.abs(chi2) + np.abs(v * chi) + abs(e) * np.abs(chi)
    return num / np.where(den > 0.0, den, 1.0)


# -- Coulomb ----------------------------------------------------------------

def coulomb_denominator(s: QuantumState, A: float) -> float:
    return 2.0 * s.n + 1.0 - 2.0 * s.q * A


def kappa_sq(s: QuantumState, A: float, z_e2: float) -> float:
    """Ze2/(2n+1-2qA); negative values mark non-normalizable states."""
    den = coulomb_denominator(s, A)
    if abs(den) < DIVERGENCE_TOL:
        raise DivergentState(f"2n+1-2qA vanishes for n={s.n}, q={s.q}, A={A}")
    return z_e2 / den


def coulomb_energy(s: QuantumState, A: float, z_e2: float) -> CoulombLevel:
    """E = Z^2 e^4/(2n+1-2qA)^2, tagged with normalizability (kappa^2 > 0)."""
    k2 = kappa_sq(s, A, z_e2)
    return CoulombLevel(energy=k2 * k2, kappa_sq=k2, normalizable=k2 > 0.0)


def coulomb_wavefunction(s: QuantumState, A: float, z_e2: float, t):
    """t^(1/2 - qA) exp(i k2 t) L_n^(-2qA)(-2 i k2 t), k2 = kappa_sq."""
    k2 = kappa_sq(s, A, z_e2)
    t = np.asarray(t, dtype=complex)
    val = (
        cut_power(t, 0.5 - s.q * A)
        * np.exp(1j * k2 * t)
        * laguerre(s.n, -2.0 * s.q * A, -2j * k2 * t)
    )
    return val if np.ndim(val) else complex(val)


def coulomb_wavefunction_derivs(s: QuantumState, A: float, z_e2: float, t):
    """(psi, dpsi/dt, d2psi/dt2) in closed form."""
    k2 = kappa_sq(s, A, z_e2)
    t = np.asarray(t, dtype=complex)
    p = 0.5 - s.q * A
    a = -2.0 * s.q * A
    w1 = -2j * k2
    w = w1 * t
    g = cut_power(t, p) * np.exp(1j * k2 * t)
    lg = p / t + 1j * k2
    g1 = g * lg
    g2 = g * (lg * lg - p / (t * t))
    lag = laguerre(s.n, a, w)
    lag1 = w1 * laguerre_deriv(s.n, a, w)
    lag2 = w1 * w1 * laguerre_deriv(s.n, a, w, order=2)
    return g * lag, g1 * lag + g * lag1, g2 * lag + 2.0 * g1 * lag1 + g * lag2


def coulomb_potential(A: float, z_e2: float, t):
    t = np.asarray(t, dtype=complex)
    return (A * A - 0.25) / (t * t) + 1j * z_e2 / t


def coulomb_residual(s: QuantumState, A: float, z_e2: float, t):
    """Normalized |-psi'' + V psi - E psi| at each t."""
    psi, _, psi2 = coulomb_wavefunction_derivs(s, A, z_e2, t)
    v = coulomb_potential(A, z_e2, t)
    e = coulomb_energy(s, A, z_e2).energy
    num = np.abs(-psi2 + v * psi - e * psi)
    den = np.abs(psi2) + np.abs(v * psi) + abs(e) * np.abs(psi)
    return num / np.where(den > 0.0, den, 1.0)
