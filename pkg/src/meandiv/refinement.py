"""Difference generators ``f_1 .. f_10`` and their divergences ``D_k``.

Each ``f_k`` is a signed combination of two catalog generators::

    f1 = f_AG - f_SG/2     f2 = f_AG - f_AH/2     f3 = f_AG - f_SH/3
    f4 = f_AG - f_SA       f5 = f_SG/2 - f_AH/2   f6 = f_SG/2 - f_SH/3
    f7 = f_SG/2 - f_SA     f8 = f_AH/2 - f_SH/3   f9 = f_AH/2 - f_SA
    f10 = f_SH/3 - f_SA

With ``A, G, H, S`` the means of ``x`` and ``1`` several have short mean
forms, e.g. ``f5 = (S + H - A - G) / 2 >= 0``, and the identities
``f1 = f4/2 = f7`` and ``f8 = f9/3 = f10/2`` hold.  The ``f_k`` are
differences of convex functions and are not convex in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .csiszar import Generator, csiszar_divergence
from .divergences import MeasureId, generator_of, kernel
from .errors import ArityError, DomainError
from .means import MeanPair, mean_difference

__all__ = [
    "RefinementId",
    "COMBINATIONS",
    "refinement_generator",
    "refinement_generator_combination",
    "refinement_divergence",
    "refinement_divergence_combination",
    "refinement_as_generator",
    "refinement_kernel",
]

F = Fraction
_AG, _AH, _SA, _SG, _SH = (MeasureId.AG, MeasureId.AH, MeasureId.SA, MeasureId.SG, MeasureId.SH)

# k -> ((coef, measure), (coef, measure)) with f_k = c1 f_m1 + c2 f_m2
COMBINATIONS: dict[int, tuple[tuple[Fraction, MeasureId], ...]] = {
    1: ((F(1), _AG), (F(-1, 2), _SG)),
    2: ((F(1), _AG), (F(-1, 2), _AH)),
    3: ((F(1), _AG), (F(-1, 3), _SH)),
    4: ((F(1), _AG), (F(-1), _SA)),
    5: ((F(1, 2), _SG), (F(-1, 2), _AH)),
    6: ((F(1, 2), _SG), (F(-1, 3), _SH)),
    7: ((F(1, 2), _SG), (F(-1), _SA)),
    8: ((F(1, 2), _AH), (F(-1, 3), _SH)),
    9: ((F(1, 2), _AH), (F(-1), _SA)),
    10: ((F(1, 3), _SH), (F(-1), _SA)),
}


@dataclass(frozen=True)
class RefinementId:
    """Index ``k in 1..10`` of a difference generator."""

    k: int

    def __post_init__(self):
        if not isinstance(self.k, (int, np.integer)) or not 1 <= self.k <= 10:
            raise DomainError(f"refinement index must be an integer in 1..10, got {self.k!r}")

    def __str__(self):
        return f"D{self.k}"


def _k(k) -> int:
    return k.k if isinstance(k, RefinementId) else RefinementId(k).k


def _mean_form(k: int, x):
    # cancellation-free mean differences of (x, 1)
    d = {pair: mean_difference(pair, x, 1.0) for pair in MeanPair}
    sa, ag, ah, gh, sg = d[MeanPair.SA], d[MeanPair.AG], d[MeanPair.AH], d[MeanPair.GH], d[MeanPair.SG]
    if k in (1, 4, 7):
        # A - (G + S)/2
        base = 0.5 * (ag - sa)
        return {1: base, 4: 2.0 * base, 7: base}[k]
    if k == 2:
        # (A + H)/2 - G
        return 0.5 * (ag - gh)
    if k == 3:
        # [3A + H - (S + 3G)] / 3
        return (2.0 * ag - sa - gh) / 3.0
    if k == 5:
        # [S + H - (A + G)] / 2 vanishes like (x-1)**6; with A**2 - GS =
        # (x-1)**4 / (16 (A**2 + GS)) it becomes a quotient of positive terms
        x = np.asarray(x, dtype=float)
        s, m, g = np.hypot(x, 1.0) / np.sqrt(2.0), 0.5 * (x + 1.0), np.sqrt(x)
        d2 = (x - 1.0) ** 2
        val = d2 * (d2 / (16.0 * (m * m + g * s))) * (d2 / (8.0 * (s + m) * m * (m + g)))
        return float(val) if np.ndim(val) == 0 else val
    if k == 6:
        # [S + 2H - 3G] / 6
        return (sg - 2.0 * gh) / 6.0
    # k in (8, 9, 10): [3A - (2S + H)] / 6 scaled by 1, 3, 2
    base = (ah - 2.0 * sa) / 6.0
    return {8: base, 9: 3.0 * base, 10: 2.0 * base}[k]


def refinement_generator(k, x):
    """``f_k(x)`` through the mean forms (differences of stable mean gaps).

    Forms for ``k = 4, 7, 9, 10`` follow from ``f1 = f4/2 = f7`` and
    ``f8 = f9/3 = f10/2``.
    """
    k = _k(k)
    return _mean_form(k, x)


def refinement_generator_combination(k, x):
    """``f_k(x)`` as the defining signed combination of catalog generators."""
    k = _k(k)
    x = np.asarray(x, dtype=float)
    val = sum(float(c) * generator_of(m).f(x) for c, m in COMBINATIONS[k])
    return float(val) if np.ndim(val) == 0 else val


def refinement_as_generator(k) -> Generator:
    """``f_k`` wrapped as a :class:`Generator` (not claimed convex)."""
    k = _k(k)
    parts = [(float(c), generator_of(m)) for c, m in COMBINATIONS[k]]
    return Generator(
        f"f{k}",
        lambda x: _mean_form(k, x),
        lambda x: sum(c * g.f_prime(x) for c, g in parts),
        lambda x: sum(c * g.f_double_prime(x) for c, g in parts),
        claims_convex=False,
        claims_normalized=True,
    )


def refinement_kernel(k):
    """Termwise ``(p_i, q_i) -> q_i f_k(p_i / q_i)``."""
    k = _k(k)
    parts = [(float(c), kernel(m)) for c, m in COMBINATIONS[k]]

    def term(p, q):
        return sum(c * t(p, q) for c, t in parts)

    return term


def refinement_divergence(k, P, Q):
    """``D_k(P||Q) = sum_i q_i f_k(p_i / q_i)`` via the Csiszar engine."""
    return csiszar_divergence(refinement_as_generator(k), P, Q)


def refinement_divergence_combination(k, P, Q):
    """``D_k`` as the signed combination of catalog divergences (e.g. ``h - SG/2``)."""
    k = _k(k)
    p = np.asarray(P, dtype=float)
    q = np.asarray(Q, dtype=float)
    if p.ndim == 0 or p.shape[-1:] != q.shape[-1:]:
        raise ArityError(f"length mismatch: {p.shape} vs {q.shape}")
    val = refinement_kernel(k)(p, q).sum(axis=-1)
    return float(val) if np.ndim(val) == 0 else val
