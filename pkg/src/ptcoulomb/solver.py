"""Two-sided shooting along a PT-symmetric contour.

The radial equation -psi'' + V(t) psi = E psi is posed on t = t(x) and
integrated as the first-order system

    dpsi/dx = t'(x) phi,    dphi/dx = t'(x) (V(t(x)) - E) psi,

with phi = dpsi/dt, inward from both tails to the matching point.  Eigenvalues
are the real E at which the two halves have a vanishing Wronskian.  Nothing
here uses the closed-form spectra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal

import numba
import numpy as np

from .contour import Contour
from .errors import OverflowUnrecoverable, StepUnderflow
from .liouville import EffectivePotential, coulomb_target, oscillator_source

Side = Literal["left", "right"]

MIN_STEP = 1e-14
RESCALE_AT = 1e100
MINIMUM_CANDIDATE = 0.1
DEFAULT_ACCEPT_TOL = 1e-8
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

_OK, _OVERFLOW, _UNDERFLOW = 0, 1, 2

# Dormand-Prince 5(4)
_A21 = 1.0 / 5.0
_A31, _A32 = 3.0 / 40.0, 9.0 / 40.0
_A41, _A42, _A43 = 44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0
_A51, _A52, _A53, _A54 = 19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0
_A61, _A62, _A63, _A64, _A65 = (
    9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0,
)
_B1, _B3, _B4, _B5, _B6 = 35.0 / 384.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0
_E1, _E3, _E4, _E5, _E6, _E7 = (
    71.0 / 57600.0, -71.0 / 16695.0, 71.0 / 1920.0, -17253.0 / 339200.0, 22.0 / 525.0, -1.0 / 40.0,
)
_C2, _C3, _C4, _C5 = 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0


@numba.njit(cache=True, nogil=True)
def _path(kind, c, kc2, eta, x):
    if kind == 0:
        return complex(x, -c), 1.0 + 0j
    if kind == 1:
        return complex(x * c / kc2, (x * x - c * c) / (2.0 * kc2)), complex(c / kc2, x / kc2)
    p = 1.0 + eta
    ax = 1.0 + abs(x)
    sgn = 0.0
    if x > 0.0:
        sgn = 1.0
    elif x < 0.0:
        sgn = -1.0
    return complex(x, -c / ax**p), complex(1.0, c * p * sgn / ax ** (p + 1.0))


@numba.njit(cache=True, nogil=True)
def _rhs(kind, c, kc2, eta, cm2, cm1, cp2, energy, x, psi, phi):
    t, dt = _path(kind, c, kc2, eta, x)
    v = cm2 / (t * t) + cm1 / t + cp2 * t * t
    return dt * phi, dt * (v - energy) * psi


@numba.njit(cache=True, nogil=True)
def _shoot(kind, c, kc2, eta, cm2, cm1, cp2, energy, tail, x_start, x_end, step_tol):
    """Integrate from x_start to x_end; returns (psi, phi, status, steps)."""
    t0, _ = _path(kind, c, kc2, eta, x_start)
    psi = 1.0 + 0j
    if tail == 0:
        # oscillator: psi ~ t^((E-1)/2) exp(-t^2/2)
        phi = psi * (0.5 * (energy - 1.0) / t0 - t0)
    else:
        # Coulomb: psi ~ t^(Ze2/2k) exp(i k t), k = +sqrt(E)
        k = math.sqrt(energy)
        phi = psi * (1j * k + (cm1.imag / (2.0 * k)) / t0)
    x = x_start
    span = x_end - x_start
    direction = 1.0 if span > 0.0 else -1.0
    h = direction * min(0.01, abs(span))
    steps = 0
    while direction * (x_end - x) > 0.0:
        if direction * (x + h - x_end) > 0.0:
            h = x_end - x
        k1p, k1f = _rhs(kind, c, kc2, eta, cm2, cm1, cp2, energy, x, psi, phi)
        k2p, k2f = _rhs(kind, c, kc2, eta, cm2, cm1, cp2, energy, x + _C2 * h,
                        psi + h * _A21 * k1p, phi + h * _A21 * k1f)
        k3p, k3f = _rhs(kind, c, kc2, eta, cm2, cm1, cp2, energy, x + _C3 * h,
                        psi + h * (_A31 * k1p + _A32 * k2p),
                        phi + h * (_A31 * k1f + _A32 * k2f))
        k4p, k4f = _rhs(kind, c, kc2, eta, cm2, cm1, cp2, energy, x + _C4 * h,
                        psi + h * (_A41 * k1p + _A42 * k2p + _A43 * k3p),
                        phi + h * (_A41 * k1f + _A42 * k2f + _A43 * k3f))
        k5p, k5f = _rhs(kind, c, kc2, eta, cm2, cm1, cp2, energy, x + _C5 * h,
                        psi + h * (_A51 * k1p + _A52 * k2p + _A53 * k3p + _A54 * k4p),
                        phi + h * (_A51 * k1f + _A52 * k2f + _A53 * k3f + _A54 * k4f))
        k6p, k6f = _rhs(kind, c, kc2, eta, cm2, cm1, cp2, energy, x + h,
                        psi + h * (_A61 * k1p + _A62 * k2p + _A63 * k3p + _A64 * k4p + _A65 * k5p),
                        phi + h * (_A61 * k1f + _A62 * k2f + _A63 * k3f + _A64 * k4f + _A65 * k5f))
        new_psi = psi + h * (_B1 * k1p + _B3 * k3p + _B4 * k4p + _B5 * k5p + _B6 * k6p)
        new_phi = phi + h * (_B1 * k1f + _B3 * k3f + _B4 * k4f + _B5 * k5f + _B6 * k6f)
        k7p, k7f = _rhs(kind, c, kc2, eta, cm2, cm1, cp2, energy, x + h, new_psi, new_phi)
        err_psi = h * (_E1 * k1p + _E3 * k3p + _E4 * k4p + _E5 * k5p + _E6 * k6p + _E7 * k7p)
        err_phi = h * (_E1 * k1f + _E3 * k3f + _E4 * k4f + _E5 * k5f + _E6 * k6f + _E7 * k7f)
        scale = max(abs(psi), abs(phi), abs(new_psi), abs(new_phi))
        if not (math.isfinite(scale) and math.isfinite(abs(err_psi)) and math.isfinite(abs(err_phi))):
            return psi, phi, _OVERFLOW, steps
        err = max(abs(err_psi), abs(err_phi)) / (step_tol * scale)
        if err <= 1.0:
            x += h
            psi = new_psi
            phi = new_phi
            steps += 1
            big = max(abs(psi), abs(phi))
            if big > 1e100:
                psi /= big
                phi /= big
            factor = 5.0 if err == 0.0 else min(5.0, 0.9 * err**-0.2)
        else:
            factor = max(0.2, 0.9 * err**-0.2)
        h *= factor
        if abs(h) < MIN_STEP and direction * (x_end - x) > MIN_STEP:
            return psi, phi, _UNDERFLOW, steps
    return psi, phi, _OK, steps


@dataclass(frozen=True)
class ShootingProblem:
    """A Schroedinger problem -psi'' + V psi = E psi posed on a contour.

    ``model`` selects both the potential family and the tail asymptotics:
    ``"oscillator"`` has V = (alpha^2-1/4)/t^2 + t^2, ``"coulomb"`` has
    V = (A^2-1/4)/t^2 + i Ze2/t.  ``centrifugal_param`` is alpha or A.
    """

    model: Literal["oscillator", "coulomb"]
    centrifugal_param: float
    contour: Contour
    z_e2: float = 0.0
    match_x: float = 0.0
    tail_x: float | None = None
    step_tol: float = 1e-10

    def __post_init__(self) -> None:
        if self.model not in ("oscillator", "coulomb"):
            raise ValueError(f"unknown model {self.model!r}")
        if self.model == "coulomb" and self.z_e2 <= 0.0:
            raise ValueError("Coulomb coupling Ze2 must be positive")
        tail = self.contour.x_max if self.tail_x is None else float(self.tail_x)
        if not 0.0 < tail <= self.contour.x_max * (1.0 + 1e-12):
            raise ValueError(f"tail_x={tail} must lie in (0, x_max]")
        if abs(self.match_x) >= tail:
            raise ValueError("matching point must lie strictly between the tails")
        object.__setattr__(self, "tail_x", tail)

    @classmethod
    def oscillator(cls, alpha: float, contour: Contour | None = None, **kw) -> "ShootingProblem":
        return cls("oscillator", alpha, contour or Contour.shifted_line(1.0), **kw)

    @classmethod
    def coulomb(cls, A: float, z_e2: float, contour: Contour | None = None, **kw) -> "ShootingProblem":
        return cls("coulomb", A, contour or Contour.ks_parabola(1.0, 1.0), z_e2=z_e2, **kw)

    @property
    def potential(self) -> EffectivePotential:
        if self.model == "oscillator":
            return oscillator_source(self.centrifugal_param)
        return coulomb_target(self.centrifugal_param, self.z_e2)

    def _coefficients(self) -> tuple[complex, complex, complex]:
        cm2 = complex(self.centrifugal_param**2 - 0.25)
        if self.model == "oscillator":
            return cm2, 0j, 1.0 + 0j
        return cm2, 1j * self.z_e2, 0j


@dataclass(frozen=True)
class EigenResult:
    energy: float
    match_residual: float
    evaluations: int
    converged: bool


def integrate_halfline(p: ShootingProblem, E: float, side: Side) -> tuple[complex, complex]:
    """(psi, dpsi/dt) at the matching point, started from the given tail."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if p.model == "coulomb" and E <= 0.0:
        raise ValueError("Coulomb tails need E > 0")
    ct = p.contour
    cm2, cm1, cp2 = p._coefficients()
    start = -p.tail_x if side == "left" else p.tail_x
    psi, phi, status, _ = _shoot(
        ct.kind_code, ct.c, ct.kappa_c_sq, ct.eta, cm2, cm1, cp2, float(E),
        0 if p.model == "oscillator" else 1, start, p.match_x, p.step_tol,
    )
    if status == _OVERFLOW:
        raise OverflowUnrecoverable(f"non-finite solution at E={E} ({side} side)")
    if status == _UNDERFLOW:
        raise StepUnderflow(f"step size fell below {MIN_STEP} at E={E} ({side} side)")
    return psi, phi


def match_function(p: ShootingProblem, E: float) -> float:
    """|psi_L phi_R - psi_R phi_L| / (|psi_L phi_R| + |psi_R phi_L|), in [0, 1]."""
    psi_l, phi_l = integrate_halfline(p, E, "left")
    psi_r, phi_r = integrate_halfline(p, E, "right")
    a = psi_l * phi_r
    b = psi_r * phi_l
    return abs(a - b) / (abs(a) + abs(b) + 1e-300)


def golden_section(f: Callable[[float], float], a: float, b: float, xtol: float):
    """Minimize a unimodal f on [a, b] until the bracket is narrower than xtol.

    Returns (x_best, f_best, evaluations).
    """
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    evals = 2
    while b - a > xtol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
        evals += 1
    return (c, fc, evals) if fc < fd else (d, fd, evals)


def scan_eigenvalues(
    p: ShootingProblem,
    e_min: float,
    e_max: float,
    grid: int = 400,
    accept_tol: float = DEFAULT_ACCEPT_TOL,
) -> list[EigenResult]:
    """Real eigenvalues in [e_min, e_max] located by grid scan + golden section.

    Grid minima of the match function below 0.1 are refined to a bracket
    width of 1e-10 max(1, |E|) and kept when the refined residual is at most
    ``accept_tol``.  Rejected candidates are dropped; an empty list is a
    valid outcome.
    """
    if not e_min < e_max:
        raise ValueError("need e_min < e_max")
    if grid < 8:
        raise ValueError("grid must have at least 8 points")
    energies = np.linspace(e_min, e_max, grid)
    values = np.array([match_function(p, e) for e in energies])
    evaluations = grid

    found: list[EigenResult] = []
    for i in range(grid):
        left = values[i - 1] if i > 0 else np.inf
        right = values[i + 1] if i < grid - 1 else np.inf
        if not (values[i] <= left and values[i] <= right and values[i] < MINIMUM_CANDIDATE):
            continue
        lo = energies[max(i - 1, 0)]
        hi = energies[min(i + 1, grid - 1)]
        xtol = 1e-10 * max(1.0, abs(energies[i]))
        e_best, r_best, n = golden_section(lambda e: match_function(p, e), lo, hi, xtol)
        evaluations += n
        if r_best <= accept_tol:
            found.append(EigenResult(float(e_best), float(r_best), n, True))

    found.sort(key=lambda r: r.energy)
    merged: list[EigenResult] = []
    for res in found:
        if merged and abs(res.energy - merged[-1].energy) <= 1e-8 * max(1.0, abs(res.energy)):
            if res.match_residual < merged[-1].match_residual:
                merged[-1] = res
            continue
        merged.append(res)
    return merged
