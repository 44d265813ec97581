"""PT-symmetric complex integration paths.

Every path is parametrized by a real coordinate ``x`` in ``[-x_max, x_max]``
and satisfies ``t(-x) = -conj(t(x))``.  Three shapes are built in:

* ``ShiftedLine``        t = x - i c
* ``KSParabola``         t = x c / k + i (x**2 - c**2) / (2 k),  k = kappa_c_sq
* ``DecayingShiftLine``  t = x - i c / (1 + |x|)**(1 + eta)

The parabola is the image of the shifted line under r**2 = -2 i k t, so it
passes below the origin and opens upwards around the cut on the positive
imaginary axis.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from typing import Any, Mapping

import numpy as np


class ContourKind(str, enum.Enum):
    SHIFTED_LINE = "ShiftedLine"
    KS_PARABOLA = "KSParabola"
    DECAYING_SHIFT_LINE = "DecayingShiftLine"


# integer tags consumed by the jitted integrator
KIND_CODES = {
    ContourKind.SHIFTED_LINE: 0,
    ContourKind.KS_PARABOLA: 1,
    ContourKind.DECAYING_SHIFT_LINE: 2,
}

DEFAULT_X_MAX_OSCILLATOR = 12.0
DEFAULT_X_MAX_COULOMB = 20.0


@dataclass(frozen=True)
class Contour:
    kind: ContourKind
    c: float
    kappa_c_sq: float = 1.0
    eta: float = 0.5
    x_max: float = DEFAULT_X_MAX_OSCILLATOR

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", ContourKind(self.kind))
        for name in ("c", "kappa_c_sq", "eta", "x_max"):
            value = float(getattr(self, name))
            if not np.isfinite(value) or value <= 0.0:
                raise ValueError(f"contour parameter {name} must be positive, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def shifted_line(cls, c: float = 1.0, x_max: float = DEFAULT_X_MAX_OSCILLATOR) -> "Contour":
        return cls(ContourKind.SHIFTED_LINE, c, x_max=x_max)

    @classmethod
    def ks_parabola(
        cls, c: float = 1.0, kappa_c_sq: float = 1.0, x_max: float = DEFAULT_X_MAX_COULOMB
    ) -> "Contour":
        return cls(ContourKind.KS_PARABOLA, c, kappa_c_sq=kappa_c_sq, x_max=x_max)

    @classmethod
    def decaying_shift_line(
        cls, c: float = 1.0, eta: float = 0.5, x_max: float = DEFAULT_X_MAX_OSCILLATOR
    ) -> "Contour":
        return cls(ContourKind.DECAYING_SHIFT_LINE, c, eta=eta, x_max=x_max)

    @property
    def kind_code(self) -> int:
        return KIND_CODES[self.kind]

    def _check_domain(self, x: np.ndarray) -> None:
        if np.any(np.abs(x) > self.x_max * (1.0 + 1e-12)):
            raise ValueError(f"x outside [-{self.x_max}, {self.x_max}]")

    def eval(self, x):
        """Path point t(x); accepts scalars or arrays."""
        xa = np.asarray(x, dtype=float)
        self._check_domain(xa)
        c = self.c
        if self.kind is ContourKind.SHIFTED_LINE:
            t = xa - 1j * c
        elif self.kind is ContourKind.KS_PARABOLA:
            k = self.kappa_c_sq
            t = xa * c / k + 1j * (xa * xa - c * c) / (2.0 * k)
        else:
            t = xa - 1j * c / (1.0 + np.abs(xa)) ** (1.0 + self.eta)
        return t if t.ndim else complex(t)

    def deriv(self, x, order: int = 1):
        """Closed-form d^order t / dx^order for order 1 or 2."""
        if order not in (1, 2):
            raise ValueError(f"unsupported derivative order {order!r}")
        xa = np.asarray(x, dtype=float)
        self._check_domain(xa)
        c = self.c
        if self.kind is ContourKind.SHIFTED_LINE:
            d = np.full(xa.shape, 1.0 + 0j) if order == 1 else np.zeros(xa.shape, complex)
        elif self.kind is ContourKind.KS_PARABOLA:
            k = self.kappa_c_sq
            if order == 1:
                d = c / k + 1j * xa / k
            else:
                d = np.full(xa.shape, 1j / k)
        else:
            p = 1.0 + self.eta
            ax = 1.0 + np.abs(xa)
            if order == 1:
                # sign(0) = 0 averages the one-sided slopes at the kink
                d = 1.0 + 1j * c * p * np.sign(xa) / ax ** (p + 1.0)
            else:
                d = -1j * c * p * (p + 1.0) / ax ** (p + 2.0) + 0j * xa
        d = np.asarray(d, dtype=complex)
        return d if d.ndim else complex(d)

    def closest_approach(self) -> float:
        """|t(0)|, the minimum distance of the path from the origin."""
        if self.kind is ContourKind.KS_PARABOLA:
            return self.c * self.c / (2.0 * self.kappa_c_sq)
        return self.c

    def to_record(self) -> dict[str, Any]:
        rec = asdict(self)
        rec["kind"] = self.kind.value
        return rec

    @classmethod
    def from_record(cls, record: Mapping[str, Any]) -> "Contour":
        kind = ContourKind(record["kind"])
        default_xmax = (
            DEFAULT_X_MAX_COULOMB if kind is ContourKind.KS_PARABOLA else DEFAULT_X_MAX_OSCILLATOR
        )
        return cls(
            kind,
            float(record["c"]),
            kappa_c_sq=float(record.get("kappa_c_sq", 1.0)),
            eta=float(record.get("eta", 0.5)),
            x_max=float(record.get("x_max", default_xmax)),
        )


def check_pt_symmetry(contour: Contour, samples: int = 101) -> float:
    """Largest |t(-x) + conj(t(x))| over an even grid on [-x_max, x_max]."""
    if samples < 2:
        raise ValueError("samples must be >= 2")
    x = np.linspace(-contour.x_max, contour.x_max, samples)
    t = contour.eval(x)
    tm = contour.eval(-x)
    return float(np.max(np.abs(tm + np.conj(t))))
