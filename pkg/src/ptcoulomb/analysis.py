"""Spectral bookkeeping for the PT-symmetric Coulomb levels.

Level crossings, fly-away poles, the physical-dimension critical points and
the near-origin path radius, plus the tables behind the A-dependence plots.
All numbers come from E(n, q) = Ze2^2 / (2n + 1 - 2qA)^2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .contour import Contour, ContourKind
from .errors import EqualIndices, NonNormalizable, NonPositiveCritical
from .models import QuantumState, coulomb_denominator, kappa_sq

GAP_HALF_WIDTH = 1e-6


class CrossingKind(str, enum.Enum):
    OPPOSITE_Q = "OppositeQ"
    SAME_POSITIVE_Q = "SamePositiveQ"


class FigureFamily(str, enum.Enum):
    FIG1_Q_PLUS = "Fig1_qPlus"
    FIG2_Q_MINUS = "Fig2_qMinus"
    FIG3_CROSSING = "Fig3_crossing"


@dataclass(frozen=True)
class CrossingRecord:
    kind: CrossingKind
    n: int
    n_prime: int
    a_crit: float
    energy_at_crossing: float
    denominator: float
    denominator_prime: float

    @property
    def normalizable(self) -> tuple[bool, bool]:
        return self.denominator > 0.0, self.denominator_prime > 0.0


def _energy(n: int, q: int, A: float, z_e2: float) -> float:
    return z_e2 * z_e2 / coulomb_denominator(QuantumState(n, q), A) ** 2


def crossing_opposite(n: int, n_prime: int, z_e2: float = 1.0) -> CrossingRecord:
    """(n, +1) meets (n', -1) at A = (n - n')/2."""
    if n <= n_prime or n_prime < 0:
        raise NonPositiveCritical(f"need n > n' >= 0, got n={n}, n'={n_prime}")
    a = 0.5 * (n - n_prime)
    return CrossingRecord(
        CrossingKind.OPPOSITE_Q, n, n_prime, a, _energy(n, 1, a, z_e2),
        coulomb_denominator(QuantumState(n, 1), a),
        coulomb_denominator(QuantumState(n_prime, -1), a),
    )


def crossing_same_positive(n: int, n_prime: int, z_e2: float = 1.0) -> CrossingRecord:
    """(n, +1) meets (n', +1) at A = (n + n' + 1)/2.

    The two denominators are negatives of each other, so exactly one member
    of the pair is normalizable there.
    """
    if n == n_prime:
        raise EqualIndices(f"same-q crossing needs distinct indices, got {n}")
    if min(n, n_prime) < 0:
        raise ValueError("indices must be non-negative")
    a = 0.5 * (n + n_prime + 1)
    return CrossingRecord(
        CrossingKind.SAME_POSITIVE_Q, n, n_prime, a, _energy(n, 1, a, z_e2),
        coulomb_denominator(QuantumState(n, 1), a),
        coulomb_denominator(QuantumState(n_prime, 1), a),
    )


def all_crossings(n_max: int, z_e2: float = 1.0) -> list[CrossingRecord]:
    """Every listed crossing with 0 <= n' < n <= n_max, opposite-q first."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    pairs = [(n, m) for n in range(n_max + 1) for m in range(n)]
    return [crossing_opposite(n, m, z_e2) for n, m in pairs] + [
        crossing_same_positive(n, m, z_e2) for n, m in pairs
    ]


def divergence_points(n_max: int) -> list[tuple[int, float]]:
    return [(n, n + 0.5) for n in range(n_max + 1)]


def physical_critical(a: float, d_max: int) -> list[tuple[int, int]]:
    """Integer (D, J), 2 <= D <= d_max, J >= 0, with J - 1 + D/2 = a."""
    out = []
    for D in range(2, d_max + 1):
        J = a + 1.0 - 0.5 * D
        Jr = round(J)
        if Jr >= 0 and abs(J - Jr) < 1e-12:
            out.append((D, int(Jr)))
    return out


def path_diagnostics(contour: Contour, s: QuantumState, A: float, z_e2: float) -> tuple[float, float]:
    """(sigma, Ze2/sigma): near-origin radius of the mapped path and the charge it sees."""
    if contour.kind is not ContourKind.KS_PARABOLA:
        raise ValueError("path diagnostics are defined for KS parabolas")
    k2 = kappa_sq(s, A, z_e2)
    if k2 <= 0.0:
        raise NonNormalizable(f"kappa^2 = {k2} <= 0 for n={s.n}, q={s.q}, A={A}")
    sigma = contour.c**2 / (2.0 * k2)
    return sigma, z_e2 / sigma


@dataclass(frozen=True)
class FigureRow:
    A: float
    n: int
    q: int
    E: float | None
    normalizable: bool


def a_grid(a_min: float, a_max: float, a_step: float) -> list[float]:
    if not (0.0 < a_min < a_max) or a_step <= 0.0:
        raise ValueError("need 0 < a_min < a_max and a_step > 0")
    count = int(math.floor((a_max - a_min) / a_step + 1e-9)) + 1
    return [a_min + k * a_step for k in range(count)]


def figure_data(
    family: FigureFamily | str,
    a_min: float,
    a_max: float,
    a_step: float,
    n_list: list[int],
    z_e2: float = 1.0,
    crossing: CrossingKind | str = CrossingKind.OPPOSITE_Q,
) -> list[FigureRow]:
    """Rows (A, n, q, E, normalizable) sorted by A, then n, then q.

    Fig1 holds the q=+1 levels, Fig2 the q=-1 levels.  Fig3 takes
    ``n_list = [n, n']`` and emits the two members of the chosen crossing.
    E is None within 1e-6 of a pole A = n + 1/2.
    """
    family = FigureFamily(family)
    if family is FigureFamily.FIG3_CROSSING:
        if len(n_list) != 2:
            raise ValueError("Fig3 needs exactly two indices [n, n']")
        n, m = n_list
        q_second = -1 if CrossingKind(crossing) is CrossingKind.OPPOSITE_Q else 1
        members = [(n, 1), (m, q_second)]
    else:
        q = 1 if family is FigureFamily.FIG1_Q_PLUS else -1
        members = [(n, q) for n in n_list]

    rows = []
    for A in a_grid(a_min, a_max, a_step):
        for n, q in members:
            den = coulomb_denominator(QuantumState(n, q), A)
            if q == 1 and abs(A - (n + 0.5)) <= GAP_HALF_WIDTH:
                rows.append(FigureRow(A, n, q, None, False))
            else:
                rows.append(FigureRow(A, n, q, z_e2 * z_e2 / (den * den), den > 0.0))
    rows.sort(key=lambda r: (r.A, r.n, -r.q))
    return rows
