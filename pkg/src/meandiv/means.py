"""Power means of two positive reals and the classical mean differences.

The four classical means are the power means of order -1, 0, 1 and 2::

    H(a, b) = 2ab / (a + b)            harmonic
    G(a, b) = sqrt(ab)                 geometric
    A(a, b) = (a + b) / 2              arithmetic
    S(a, b) = sqrt((a**2 + b**2) / 2)  square root

and satisfy ``H <= G <= A <= S``.  The six differences ``M_xy = x - y``
(``SA, SG, SH, AH, AG, GH``) are therefore nonnegative and vanish iff ``a == b``.

Every function accepts scalars or numpy arrays (broadcast elementwise);
scalar input gives a Python float back.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .errors import DomainError

__all__ = [
    "MeanKind",
    "MeanPair",
    "power_mean",
    "classical_mean",
    "mean_difference",
    "harmonic",
    "geometric",
    "arithmetic",
    "square_root",
]



class MeanKind(enum.Enum):
    HARMONIC = -1
    GEOMETRIC = 0
    ARITHMETIC = 1
    SQUARE_ROOT = 2

    @property
    def order(self) -> int:
        return self.value


class MeanPair(enum.Enum):
    """A nonnegative difference ``upper - lower`` of two classical means."""

    SA = ("S", "A")
    SG = ("S", "G")
    SH = ("S", "H")
    AH = ("A", "H")
    AG = ("A", "G")
    GH = ("G", "H")

    @property
    def upper(self) -> MeanKind:
        return _LETTER[self.value[0]]

    @property
    def lower(self) -> MeanKind:
        return _LETTER[self.value[1]]


_LETTER = {
    "H": MeanKind.HARMONIC,
    "G": MeanKind.GEOMETRIC,
    "A": MeanKind.ARITHMETIC,
    "S": MeanKind.SQUARE_ROOT,
}


def _positive(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.isnan(a).any() or np.isnan(b).any():
        raise DomainError("mean arguments must not be NaN")
    if (a <= 0).any() or (b <= 0).any():
        raise DomainError("mean arguments must be strictly positive")
    return a, b


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def harmonic(a, b):
    a, b = _positive(a, b)
    return _out(2.0 * a * b / (a + b))


def geometric(a, b):
    a, b = _positive(a, b)
    return _out(np.sqrt(a * b))


def arithmetic(a, b):
    a, b = _positive(a, b)
    return _out(0.5 * (a + b))


def square_root(a, b):
    a, b = _positive(a, b)
    # hypot avoids overflow of a**2 for large arguments
    return _out(np.hypot(a, b) / math.sqrt(2.0))


_CLASSICAL = {
    MeanKind.HARMONIC: harmonic,
    MeanKind.GEOMETRIC: geometric,
    MeanKind.ARITHMETIC: arithmetic,
    MeanKind.SQUARE_ROOT: square_root,
}


def power_mean(t, a, b):
    """Mean of order ``t`` of ``a`` and ``b``.

    ``t`` may be any real or ``±inf``.  ``t == 0`` gives the geometric mean,
    ``+inf``/``-inf`` give ``max``/``min``.  Otherwise
    ``((a**t + b**t) / 2) ** (1/t)``, evaluated through ``expm1``/``log1p``
    when ``t * ln(a)`` is small and in log space otherwise, so it neither
    overflows for large ``t`` nor collapses to 1 for tiny ``t``.

    Raises
    ------
    DomainError
        If ``a`` or ``b`` is not strictly positive, or any input is NaN.
    """
    t = float(t)
    if math.isnan(t):
        raise DomainError("order t must not be NaN")
    a, b = _positive(a, b)
    if t == math.inf:
        return _out(np.maximum(a, b))
    if t == -math.inf:
        return _out(np.minimum(a, b))
    if t == 0.0:
        return _out(np.sqrt(a * b))
    la, lb = np.log(a), np.log(b)
    spread = abs(t) * np.maximum(np.abs(la), np.abs(lb))
    with np.errstate(all="ignore"):
        # small t * ln: a**t rounds to 1, so average expm1 and undo with log1p
        small = np.log1p(0.5 * (np.expm1(t * la) + np.expm1(t * lb))) / t
        # otherwise average in log space, which also cannot overflow
        large = (np.logaddexp(t * la, t * lb) - math.log(2.0)) / t
    res = np.exp(np.where(spread <= 1.0, small, large))
    # rounding may push the result a hair outside [min, max]
    res = np.clip(res, np.minimum(a, b), np.maximum(a, b))
    return _out(res)


def classical_mean(kind: MeanKind, a, b):
    """One of ``H, G, A, S`` by closed form."""
    return _CLASSICAL[MeanKind(kind)](a, b)


def mean_difference(pair: MeanPair, a, b):
    """``M_xy(a, b)`` for ``pair = xy``; nonnegative, zero iff ``a == b``.

    Evaluated without cancellation, e.g. ``S - A = (a-b)**2 / (4 (S + A))``,
    so the result is exactly ``0`` at ``a == b`` and never negative.
    """
    a, b = _positive(a, b)
    pair = MeanPair(pair)
    d2 = (a - b) ** 2
    s = np.hypot(a, b) / math.sqrt(2.0)
    m = 0.5 * (a + b)
    g = np.sqrt(a * b)
    sa = 0.25 * d2 / (s + m)
    ah = 0.5 * d2 / (a + b)
    # (sqrt a - sqrt b)**2 without subtracting the roots
    root_gap2 = d2 / (np.sqrt(a) + np.sqrt(b)) ** 2
    ag = 0.5 * root_gap2
    if pair is MeanPair.SA:
        res = sa
    elif pair is MeanPair.SG:
        res = 0.5 * d2 / (s + g)
    elif pair is MeanPair.SH:
        res = sa + ah
    elif pair is MeanPair.AH:
        res = ah
    elif pair is MeanPair.AG:
        res = ag
    else:
        res = g * root_gap2 / (a + b)
    return _out(res)
