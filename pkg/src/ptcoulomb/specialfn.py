"""Generalized Laguerre polynomials L_n^(a)(z) for complex z and real a.

The upper parameter may be negative and even a negative integer; the
three-term recurrence stays well defined there, so no gamma functions are
evaluated anywhere.
"""

from __future__ import annotations

import numpy as np


def laguerre(n: int, a: float, z):
    """L_n^(a)(z) by the upward three-term recurrence.

    Works elementwise on array ``z``.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    z = np.asarray(z, dtype=complex)
    prev = np.ones_like(z)
    if n == 0:
        return prev if prev.ndim else complex(prev)
    cur = 1.0 + a - z
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + a - z) * cur - (k + a) * prev) / (k + 1)
    return cur if cur.ndim else complex(cur)


def laguerre_deriv(n: int, a: float, z, order: int = 1):
    """d^order/dz^order L_n^(a)(z) = (-1)^order L_{n-order}^(a+order)(z)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if order < 0:
        raise ValueError("derivative order must be non-negative")
    if order > n:
        zero = np.zeros_like(np.asarray(z, dtype=complex))
        return zero if zero.ndim else 0j
    val = laguerre(n - order, a + order, z)
    return val if order % 2 == 0 else -val


def laguerre_at_zero(n: int, a: float) -> float:
    """(a+1)(a+2)...(a+n)/n!, the value of L_n^(a) at the origin."""
    out = 1.0
    for k in range(1, n + 1):
        out *= (a + k) / k
    return out
