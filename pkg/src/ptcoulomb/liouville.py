"""Liouville change of variables and its complexified KS specialization.

Under r = r(t) the operator -d^2/dr^2 + l(l+1)/r^2 + W(r) - eps2 becomes
-d^2/dt^2 + L(L+1)/t^2 + V(t) - E with

    L(L+1)/t^2 + V(t) - E = r'^2 {l(l+1)/r^2 + W(r) - eps2}
                            + 3/4 (r''/r')^2 - 1/2 (r'''/r')

and psi(t) = chi(r(t)) / sqrt(r'(t)).  The KS map r^2 = -2 i k2 t sends the
oscillator onto the Coulomb problem with alpha = 2A and k2 = 2 Ze2/eps2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Protocol

import numpy as np

from .errors import OnCutOrOrigin, ZeroEnergy, ZeroJacobian
from .models import cut_power

JACOBIAN_TOL = 1e-12


class ChangeOfVariable(Protocol):
    def derivatives(self, t) -> tuple:
        """Return (r, r', r'', r''') at t."""
        ...


@dataclass(frozen=True)
class EffectivePotential:
    """centrifugal_coeff / z^2 + interaction(z) + energy_shift."""

    centrifugal_coeff: float
    interaction: Callable = field(default=lambda z: 0.0 * z)
    energy_shift: float = 0.0

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return self.centrifugal_coeff / (z * z) + self.interaction(z) + self.energy_shift


def oscillator_source(alpha: float) -> EffectivePotential:
    """(alpha^2 - 1/4)/r^2 + r^2, i.e. l(l+1) = alpha^2 - 1/4."""
    return EffectivePotential(alpha * alpha - 0.25, lambda r: r * r)


def coulomb_target(A: float, z_e2: float) -> EffectivePotential:
    return EffectivePotential(A * A - 0.25, lambda t: 1j * z_e2 / t)


class IdentityMap:
    def derivatives(self, t):
        t = np.asarray(t, dtype=complex)
        one = np.ones_like(t)
        zero = np.zeros_like(t)
        return t, one, zero, zero


@dataclass(frozen=True)
class MapKS:
    """r^2 = -2 i kappa_sq t.

    For kappa_sq > 0 the image of the upward-cut t plane is the lower half r
    plane: r = sqrt(2 kappa_sq) e^{-i pi/4} t^{1/2}.  Negative kappa_sq
    (flown-away q=+1 levels) uses the mirrored phase e^{+i pi/4}.
    """

    kappa_sq: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.kappa_sq) or self.kappa_sq == 0.0:
            raise ValueError(f"kappa_sq must be finite and non-zero, got {self.kappa_sq}")

    @property
    def prefactor(self) -> complex:
        phase = -0.25j * math.pi if self.kappa_sq > 0 else 0.25j * math.pi
        return math.sqrt(2.0 * abs(self.kappa_sq)) * complex(np.exp(phase))

    def eval(self, t):
        t = np.asarray(t, dtype=complex)
        on_cut = (np.abs(t.real) <= 1e-14 * np.abs(t)) & (t.imag >= 0.0)
        if np.any(np.abs(t) < 1e-14) or np.any(on_cut):
            raise OnCutOrOrigin("KS map evaluated on the upward cut or at the origin")
        r = self.prefactor * cut_power(t, 0.5)
        return r

    def derivatives(self, t):
        k2 = self.kappa_sq
        r = np.asarray(self.eval(t))
        r1 = -1j * k2 / r
        r2 = k2 * k2 / r**3
        r3 = 3j * k2**3 / r**5
        return r, r1, r2, r3


def map_eval(m: MapKS, t):
    """(r, r', r'', r''') for the KS map."""
    return m.derivatives(t)


def schwarzian_term(r1, r2, r3):
    """3/4 (r''/r')^2 - 1/2 r'''/r'."""
    ratio = r2 / r1
    return 0.75 * ratio * ratio - 0.5 * r3 / r1


def transform_potential(source: EffectivePotential, mapping: ChangeOfVariable, t, epsilon_sq: float):
    """Right-hand side of the Liouville law at t: the new L(L+1)/t^2 + V(t) - E."""
    r, r1, r2, r3 = mapping.derivatives(t)
    r1 = np.asarray(r1, dtype=complex)
    if np.any(np.abs(r1) < JACOBIAN_TOL):
        raise ZeroJacobian("r'(t) vanishes")
    out = r1 * r1 * (source(r) - epsilon_sq) + schwarzian_term(r1, r2, r3)
    return out if np.ndim(out) else complex(out)


def transform_wavefunction(chi: Callable, mapping: ChangeOfVariable, t):
    """chi(r(t)) / sqrt(r'(t)).

    For an array of t ordered along a contour the sqrt branch is made
    continuous, anchored at the principal value of the middle sample.
    """
    r, r1, _, _ = mapping.derivatives(t)
    r1 = np.asarray(r1, dtype=complex)
    if np.any(np.abs(r1) < JACOBIAN_TOL):
        raise ZeroJacobian("r'(t) vanishes")
    root = np.sqrt(r1)
    if root.ndim == 1 and root.size > 1:
        root = _continuous_sqrt(root)
    out = chi(r) / root
    return out if np.ndim(out) else complex(out)


def _continuous_sqrt(root: np.ndarray) -> np.ndarray:
    root = root.copy()
    mid = root.size // 2
    for i in range(mid + 1, root.size):
        if abs(root[i] + root[i - 1]) < abs(root[i] - root[i - 1]):
            root[i] = -root[i]
    for i in range(mid - 1, -1, -1):
        if abs(root[i] + root[i + 1]) < abs(root[i] - root[i + 1]):
            root[i] = -root[i]
    return root


def ks_big_a(alpha: float) -> float:
    """Coulomb A matched to oscillator alpha: A = alpha/2."""
    return 0.5 * alpha


def ks_kappa_sq(epsilon_sq: float, z_e2: float) -> float:
    """kappa^2 = 2 Ze2 / eps2."""
    if abs(epsilon_sq) < 1e-14:
        raise ZeroEnergy("oscillator energy eps2 = 0 has no KS image")
    return 2.0 * z_e2 / epsilon_sq
