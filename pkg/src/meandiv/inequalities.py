"""Curvature ratios, their extrema, and the sign-change analysis of SG vs I.

If ``alpha <= f1''(x) / f2''(x) <= beta`` on ``(0, inf)`` for normalized
convex ``f1, f2``, then::

    alpha * C_f2 <= C_f1 <= beta * C_f2
    alpha * xi_f2 <= xi_f1 <= beta * xi_f2

:func:`ratio_extremum` locates ``alpha`` and ``beta`` numerically, without
knowing where they sit.  :func:`crossing_scan` finds where two scalar maps
swap order, which is how ``SG/2`` and ``I`` are shown to be incomparable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .chains import (  # noqa: F401  re-exported: chains are part of this layer
    ChainReport,
    ChainSpec,
    ChainTerm,
    builtin_chains,
    evaluate_chain,
    sweep_chains,
)
from .csiszar import Generator
from .divergences import MeasureId, divergence, generator_of
from .errors import DomainError, NumericError, SingularityError

__all__ = [
    "ExtremumReport",
    "PROPOSITION_PAIRS",
    "curvature_ratio",
    "ratio_extremum",
    "golden_section",
    "sigma_sg_i",
    "crossing_scan",
    "generator_sections",
    "binary_family_sections",
    "SECTION_NAMES",
]

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

# (numerator, denominator, which bound is the sharp constant)
PROPOSITION_PAIRS = (
    (MeasureId.SA, MeasureId.SH, "sup"),
    (MeasureId.SA, MeasureId.TRIANGULAR, "sup"),
    (MeasureId.SG, MeasureId.TRIANGULAR, "inf"),
    (MeasureId.SG, MeasureId.HELLINGER, "sup"),
)


def _ratio(genA: Generator, genB: Generator, x):
    x = np.asarray(x, dtype=float)
    with np.errstate(all="ignore"):
        num = genA.f_double_prime(x)
        den = genB.f_double_prime(x)
    bad = ~(np.isfinite(den) & (den > 0) & np.isfinite(num))
    if bad.any():
        loc = float(np.atleast_1d(x)[np.argmax(np.atleast_1d(bad))])
        raise SingularityError(
            f"{genA.name}''/{genB.name}'' is singular or undefined at x = {loc!r}", location=loc
        )
    return num / den


def curvature_ratio(genA: Generator, genB: Generator, x):
    """``f_A''(x) / f_B''(x)``; needs ``f_B''(x) > 0``."""
    if np.any(np.asarray(x) <= 0):
        raise DomainError("x must be positive")
    g = _ratio(genA, genB, x)
    return float(g) if np.ndim(g) == 0 else g


def golden_section(fn: Callable[[float], float], a: float, b: float, xtol: float = 1e-8, maximize=False):
    """Minimize (or maximize) a unimodal ``fn`` on ``[a, b]``.

    Returns ``(x, fn(x), iterations)``; stops once the bracket is shorter
    than ``xtol``.
    """
    sign = -1.0 if maximize else 1.0
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = sign * fn(c), sign * fn(d)
    it = 0
    while b - a > xtol:
        it += 1
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = sign * fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = sign * fn(d)
    x = c if fc <= fd else d
    return x, sign * min(fc, fd), it


@dataclass(frozen=True)
class ExtremumReport:
    inf_value: float
    sup_value: float
    inf_arg: float
    sup_arg: float
    lo: float
    hi: float
    grid_points: int
    xtol: float
    iterations: tuple[int, int]  # golden-section steps for (inf, sup)


# values within this relative band of the extreme are indistinguishable
_FLAT_BAND = 16 * np.finfo(float).eps


def _edge(inside, x_in, x_out, xtol):
    # bisect for the boundary of the near-optimal set between x_in and x_out
    while abs(x_out - x_in) > xtol:
        mid = 0.5 * (x_in + x_out)
        if inside(mid):
            x_in = mid
        else:
            x_out = mid
    return x_in


def _refine(g, grid, vals, k, maximize, xtol):
    a = grid[max(k - 1, 0)]
    b = grid[min(k + 1, grid.size - 1)]
    x, v, it = golden_section(g, a, b, xtol, maximize)
    # the grid point itself can beat a flat-topped refinement
    gk = g(grid[k])
    if (gk > v) if maximize else (gk < v):
        x, v = grid[k], gk
    # A high-order flat extreme leaves a band of abscissae whose values differ
    # only by rounding, and golden-section lands anywhere in it.  Report the
    # log-midpoint of the band instead.
    band = _FLAT_BAND * max(abs(v), np.finfo(float).tiny)

    def inside(t):
        return abs(g(t) - v) <= band

    lo_out = next((j for j in range(k, -1, -1) if grid[j] < x and abs(vals[j] - v) > band), None)
    hi_out = next((j for j in range(k, grid.size) if grid[j] > x and abs(vals[j] - v) > band), None)
    if lo_out is not None and hi_out is not None:
        left = _edge(inside, x, grid[lo_out], xtol)
        right = _edge(inside, x, grid[hi_out], xtol)
        if right - left > xtol:
            x = math.sqrt(left * right)
            v = g(x) if inside(x) else v
    return float(x), float(v), it


def ratio_extremum(
    genA: Generator, genB: Generator, lo: float, hi: float, points: int = 4096, xtol: float = 1e-8
) -> ExtremumReport:
    """Infimum and supremum of ``f_A''/f_B''`` on ``[lo, hi]``.

    A log-uniform scan of ``points`` abscissae (at least 2048) locates the
    best cells; golden-section search then refines each inside the two
    neighbouring cells to an absolute bracket of ``xtol``.  When the extreme
    is flat to rounding level the reported argument is the log-midpoint of
    the flat band, found by bisecting for its two edges.
    """
    if not 0 < lo < hi:
        raise DomainError(f"need 0 < lo < hi, got [{lo}, {hi}]")
    points = max(int(points), 2048)
    grid = np.geomspace(lo, hi, points)
    vals = _ratio(genA, genB, grid)

    def g(x):
        return float(_ratio(genA, genB, np.asarray([x]))[0])

    x_inf, v_inf, it_inf = _refine(g, grid, vals, int(np.argmin(vals)), False, xtol)
    x_sup, v_sup, it_sup = _refine(g, grid, vals, int(np.argmax(vals)), True, xtol)
    return ExtremumReport(v_inf, v_sup, x_inf, x_sup, float(lo), float(hi), points, xtol, (it_inf, it_sup))


def sigma_sg_i(x):
    """``sqrt(2) (x^2+1)^(5/2) - 8 x^(3/2) (x^2 + 3x + 1)``.

    ``(x - 1) * sigma(x)`` carries the sign of the derivative of
    ``f_SG''/f_I''``; sigma changing sign means no constant sandwich exists.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("x must be positive")
    s = math.sqrt(2.0) * (x * x + 1.0) ** 2.5 - 8.0 * x**1.5 * (x * x + 3.0 * x + 1.0)
    return float(s) if np.ndim(s) == 0 else s


def crossing_scan(fnA, fnB, lo: float, hi: float, steps: int, spacing: str = "linear"):
    """Brackets ``(x_k, x_k+1)`` of a ``steps``-cell grid where ``fnA - fnB`` flips sign.

    Only strict flips count (the product of the end differences is
    negative); a cell touching an exact zero is not reported.  The maps are
    called with the whole grid as a numpy array.
    """
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    if steps < 2:
        raise DomainError("steps must be >= 2")
    if spacing == "linear":
        grid = np.linspace(lo, hi, steps + 1)
    elif spacing == "log":
        grid = np.geomspace(lo, hi, steps + 1)
    else:
        raise DomainError(f"unknown spacing {spacing!r}")
    with np.errstate(all="ignore"):
        diff = np.asarray(fnA(grid), dtype=float) - np.asarray(fnB(grid), dtype=float)
    bad = ~np.isfinite(diff)
    if bad.any():
        loc = float(grid[np.argmax(bad)])
        raise NumericError(f"non-finite difference at x = {loc!r}")
    flips = np.nonzero(diff[:-1] * diff[1:] < 0)[0]
    return [(float(grid[k]), float(grid[k + 1])) for k in flips]


# -- the two families compared in the tables --------------------------------------

SECTION_NAMES = ("a", "b", "c", "d", "e", "f")
_SECTIONS = (
    (1.0, MeasureId.SA),
    (1.0 / 3.0, MeasureId.SH),
    (0.25, MeasureId.TRIANGULAR),
    (0.5, MeasureId.SG),
    (1.0, MeasureId.JENSEN_SHANNON),
    (1.0, MeasureId.HELLINGER),
)


def generator_sections():
    """``{name: x -> c * f(x)}`` for a = f_SA, b = f_SH/3, c = f_Delta/4, d = f_SG/2, e = f_I, f = f_h."""
    out = {}
    for name, (c, mid) in zip(SECTION_NAMES, _SECTIONS):
        f = generator_of(mid).f
        out[name] = (lambda x, c=c, f=f: c * f(np.asarray(x, dtype=float)))
    return out


def _binary(mid, c, t):
    t = np.asarray(t, dtype=float)
    if np.any((t <= 0) | (t >= 1)):
        raise DomainError("t must lie in (0, 1)")
    p = np.stack([t, 1.0 - t], axis=-1)
    return c * divergence(mid, p, p[..., ::-1])


def binary_family_sections():
    """Same six measures on the pair ``P = (t, 1-t)``, ``Q = (1-t, t)``, as maps of ``t``."""
    return {
        name: (lambda t, c=c, mid=mid: _binary(mid, c, t))
        for name, (c, mid) in zip(SECTION_NAMES, _SECTIONS)
    }

