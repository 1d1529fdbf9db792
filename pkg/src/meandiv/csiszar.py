"""Csiszar f-divergences, the Dragomir upper bound and generator audits.

For a convex generator ``f`` on ``(0, inf)`` with ``f(1) = 0``::

    C_f(P||Q) = sum_i q_i f(p_i / q_i)                      >= 0
    E_f(P||Q) = sum_i (p_i - q_i) f'(p_i / q_i)             >= C_f(P||Q)

and the gap ``xi_f = E_f - C_f`` is nonnegative as well.

The engine functions accept :class:`~meandiv.distributions.Distribution`
objects or plain arrays of shape ``(..., n)``; the sum runs over the last
axis, so stacked batches of pairs are evaluated in one call.  Plain arrays
are *not* validated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import ArityError, DomainError, NumericError

__all__ = [
    "Generator",
    "csiszar_divergence",
    "dragomir_upper_bound",
    "xi_gap",
    "default_audit_grid",
    "CheckResult",
    "AuditReport",
    "audit_generator",
    "central_first_difference",
    "central_second_difference",
]

ScalarMap = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Generator:
    """A named generator ``f`` with analytic first and second derivatives.

    The callables must accept and return numpy arrays elementwise.  The two
    ``claims_*`` flags state what the generator is *supposed* to satisfy;
    :func:`audit_generator` checks them numerically.
    """

    name: str
    f: ScalarMap
    f_prime: ScalarMap
    f_double_prime: ScalarMap
    claims_convex: bool = True
    claims_normalized: bool = True

    def __call__(self, x):
        return self.f(x)

    def scaled(self, c: float, name: str | None = None) -> "Generator":
        """The generator ``c * f`` (convexity claim kept only for ``c > 0``)."""
        f, d1, d2 = self.f, self.f_prime, self.f_double_prime
        return Generator(
            name or f"{c:g}*{self.name}",
            lambda x: c * f(x),
            lambda x: c * d1(x),
            lambda x: c * d2(x),
            claims_convex=self.claims_convex and c > 0,
            claims_normalized=self.claims_normalized,
        )


def _pair(P, Q):
    p = np.asarray(P, dtype=float)
    q = np.asarray(Q, dtype=float)
    if p.shape[-1:] != q.shape[-1:] or p.ndim == 0:
        raise ArityError(f"length mismatch: {p.shape} vs {q.shape}")
    return p, q


def _finite(value, what):
    if not np.all(np.isfinite(value)):
        raise NumericError(f"non-finite value in {what}")
    return float(value) if np.ndim(value) == 0 else value


def csiszar_divergence(gen: Generator, P, Q):
    """``sum_i q_i f(p_i / q_i)`` over the last axis."""
    p, q = _pair(P, Q)
    with np.errstate(all="ignore"):
        terms = q * gen.f(p / q)
    return _finite(terms.sum(axis=-1), f"C_{gen.name}")


def dragomir_upper_bound(gen: Generator, P, Q):
    """``sum_i (p_i - q_i) f'(p_i / q_i)``, an upper bound on the divergence."""
    p, q = _pair(P, Q)
    with np.errstate(all="ignore"):
        terms = (p - q) * gen.f_prime(p / q)
    return _finite(terms.sum(axis=-1), f"E_{gen.name}")


def xi_gap(gen: Generator, P, Q):
    """Dragomir bound minus divergence.

    Nonnegative in exact arithmetic for convex normalized generators; the raw
    floating-point difference is returned, with no clamping.
    """
    p, q = _pair(P, Q)
    with np.errstate(all="ignore"):
        r = p / q
        terms = (p - q) * gen.f_prime(r) - q * gen.f(r)
    return _finite(terms.sum(axis=-1), f"xi_{gen.name}")


# -- audits ------------------------------------------------------------------

def default_audit_grid(points: int = 512, lo: float = 1e-4, hi: float = 1e4) -> np.ndarray:
    """``points`` log-uniform abscissae on ``[lo, hi]`` plus ``x = 1`` exactly."""
    grid = np.geomspace(lo, hi, points)
    return np.unique(np.append(grid, 1.0))


def _first(f, x, h):
    return (f(x + h) - f(x - h)) / (2.0 * h)


def _second(f, x, h):
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)


def _extrapolate(stencil, f, x, levels=8, min_levels=5, safe=2.0):
    """Richardson tableau over steps ``x/2, x/4, ...`` (Ridders' scheme).

    Both central stencils have error series in even powers of ``h``.  The
    starting step is proportional to ``x`` so the stencil never leaves
    ``(0, inf)``; per point the entry with the smallest error estimate wins.
    Returns ``(estimate, error_estimate)``.
    """
    x = np.asarray(x, dtype=float)
    h = 0.5 * np.abs(x)
    best = np.full(x.shape, np.nan)
    err = np.full(x.shape, np.inf)
    done = np.zeros(x.shape, dtype=bool)
    prev = None
    for i in range(levels):
        row = [stencil(f, x, h / 2.0**i)]
        fac = 4.0
        for j in range(1, i + 1):
            row.append((fac * row[j - 1] - prev[j - 1]) / (fac - 1.0))
            fac *= 4.0
            e = np.maximum(np.abs(row[j] - row[j - 1]), np.abs(row[j] - prev[j - 1]))
            upd = (e < err) & ~done
            err = np.where(upd, e, err)
            best = np.where(upd, row[j], best)
        if i >= min_levels:
            # higher orders started to diverge: rounding has taken over
            done |= np.abs(row[i] - prev[i - 1]) >= safe * err
        prev = row
    return best, err


def central_first_difference(f: ScalarMap, x) -> np.ndarray:
    """Extrapolated central-difference estimate of ``f'(x)`` for ``x > 0``."""
    return _extrapolate(_first, f, x)[0]


def central_second_difference(f: ScalarMap, x) -> np.ndarray:
    """Extrapolated central-difference estimate of ``f''(x)`` for ``x > 0``."""
    return _extrapolate(_second, f, x)[0]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst_x: float
    worst_value: float
    detail: str = ""


@dataclass(frozen=True)
class AuditReport:
    generator: str
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def _fd_check(name, analytic, numeric, grid):
    tol = np.maximum(1e-6, 1e-4 * np.abs(analytic))
    err = np.abs(analytic - numeric)
    bad = ~np.isfinite(err)
    excess = np.where(bad, np.inf, err / tol)
    k = int(np.argmax(excess))
    return CheckResult(
        name,
        bool(np.all(excess <= 1.0)),
        float(grid[k]),
        float(err[k]),
        f"max |analytic - finite difference| / tolerance = {excess[k]:.3g}",
    )


def audit_generator(gen: Generator, grid: Sequence[float] | None = None, tol: float = 1e-12) -> AuditReport:
    """Numerically check normalization, convexity and the analytic derivatives.

    Four checks are reported, each with the worst grid point:

    ``normalized``
        ``|f(1)| <= tol``.
    ``convex``
        ``f''(x) > -tol`` at every grid point.
    ``first_derivative`` / ``second_derivative``
        analytic ``f'``, ``f''`` agree with central differences of ``f`` to
        within ``max(1e-6, 1e-4 * |value|)``.

    Failures are reported, never raised.
    """
    grid = default_audit_grid() if grid is None else np.asarray(grid, dtype=float)
    if grid.size == 0 or (grid <= 0).any():
        raise DomainError("audit grid must be nonempty and strictly positive")
    with np.errstate(all="ignore"):
        f1 = float(gen.f(np.asarray(1.0)))
        d1 = gen.f_prime(grid)
        d2 = gen.f_double_prime(grid)
        fd1 = central_first_difference(gen.f, grid)
        fd2 = central_second_difference(gen.f, grid)
    checks = [CheckResult("normalized", abs(f1) <= tol, 1.0, f1, f"f(1) = {f1:.3g}")]
    k = int(np.nanargmin(d2)) if np.isfinite(d2).any() else 0
    checks.append(
        CheckResult(
            "convex",
            bool(np.all(np.isfinite(d2)) and np.all(d2 > -tol)),
            float(grid[k]),
            float(d2[k]),
            f"min f'' = {d2[k]:.6g} at x = {grid[k]:.6g}",
        )
    )
    checks.append(_fd_check("first_derivative", d1, fd1, grid))
    checks.append(_fd_check("second_derivative", d2, fd2, grid))
    return AuditReport(gen.name, tuple(checks))
