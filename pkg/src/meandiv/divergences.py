"""Closed-form catalog of the symmetric divergence measures.

Mean divergences (sum over cells of a mean difference with ``a = p_i``,
``b = q_i``)::

    M_SA = sum S - A      M_SG = sum S - G      M_SH = sum S - H
    M_AG = sum A - G      M_AH = sum A - H      M_GH = sum G - H

Classical measures::

    h     = 1/2 sum (sqrt p - sqrt q)**2           (Hellinger)  == M_AG == 1 - B
    Delta = sum (p - q)**2 / (p + q)               (triangular) == 2 M_AH == 2 (1 - W)
    I     = sum [A(p ln p, q ln q) - A ln A]       (Jensen-Shannon)
    T     = sum A ln(A / G)
    J     = sum (p - q) ln(p / q)
    I + T = J / 4

``B = sum sqrt(pq)`` and ``W = sum 2pq / (p + q)`` are similarity
coefficients in ``(0, 1]`` rather than divergences.

All kernels are written in a cancellation-free form (for example
``S - A = (p - q)**2 / (4 (S + A))``) so that values stay accurate, and
exactly zero, for nearly equal distributions.  Each accepts arrays of shape
``(..., n)`` and reduces over the last axis.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .csiszar import Generator, csiszar_divergence
from .errors import ArityError, UnsupportedError

__all__ = [
    "MeasureId",
    "XI_MEASURES",
    "parse_measure",
    "divergence",
    "xi_closed_form",
    "generator_of",
    "catalog_generators",
    "kernel",
]

_SQRT2 = math.sqrt(2.0)


class MeasureId(enum.Enum):
    SA = "SA"
    SG = "SG"
    SH = "SH"
    AG = "AG"
    AH = "AH"
    GH = "GH"
    HELLINGER = "h"
    TRIANGULAR = "Delta"
    JENSEN_SHANNON = "I"
    J = "J"
    ARITH_GEOM_T = "T"
    BHATTACHARYYA = "B"
    HARMONIC_W = "W"

    @property
    def is_similarity(self) -> bool:
        return self in (MeasureId.BHATTACHARYYA, MeasureId.HARMONIC_W)


XI_MEASURES = (
    MeasureId.SA,
    MeasureId.SG,
    MeasureId.SH,
    MeasureId.HELLINGER,
    MeasureId.TRIANGULAR,
)

_ALIASES = {
    "hellinger": MeasureId.HELLINGER,
    "triangular": MeasureId.TRIANGULAR,
    "delta": MeasureId.TRIANGULAR,
    "jensenshannon": MeasureId.JENSEN_SHANNON,
    "jensenshannoni": MeasureId.JENSEN_SHANNON,
    "js": MeasureId.JENSEN_SHANNON,
    "jdiv": MeasureId.J,
    "arithgeom": MeasureId.ARITH_GEOM_T,
    "bhattacharyya": MeasureId.BHATTACHARYYA,
    "harmonicw": MeasureId.HARMONIC_W,
}


def parse_measure(name) -> MeasureId:
    """Resolve a measure from its value (``"h"``), enum name or a common alias."""
    if isinstance(name, MeasureId):
        return name
    s = str(name).strip()
    for m in MeasureId:
        if s == m.value:
            return m
    key = s.replace("_", "").replace("-", "").lower()
    for m in MeasureId:
        if key == m.name.replace("_", "").lower():
            return m
    try:
        return _ALIASES[key]
    except KeyError:
        raise UnsupportedError(f"unknown measure {name!r}") from None


# -- termwise kernels --------------------------------------------------------


def _s(p, q):
    return np.hypot(p, q) / _SQRT2


def _sa(p, q):
    return (p - q) ** 2 / (4.0 * (_s(p, q) + 0.5 * (p + q)))


def _sg(p, q):
    return (p - q) ** 2 / (2.0 * (_s(p, q) + np.sqrt(p * q)))


def _ah(p, q):
    return (p - q) ** 2 / (2.0 * (p + q))


def _root_gap2(p, q):
    # (sqrt p - sqrt q)**2 without subtracting the roots
    return (p - q) ** 2 / (np.sqrt(p) + np.sqrt(q)) ** 2


def _ag(p, q):
    return 0.5 * _root_gap2(p, q)


def _gh(p, q):
    return np.sqrt(p * q) * _root_gap2(p, q) / (p + q)


def _i(p, q):
    a = 0.5 * (p + q)
    r = (p - q) / (p + q)
    return 0.5 * a * (r * np.log(p / q) + np.log1p(-r * r))


def _t(p, q):
    r = (p - q) / (p + q)
    return -0.25 * (p + q) * np.log1p(-r * r)


_TERMS = {
    MeasureId.SA: _sa,
    MeasureId.SG: _sg,
    MeasureId.SH: lambda p, q: _sa(p, q) + _ah(p, q),
    MeasureId.AG: _ag,
    MeasureId.AH: _ah,
    MeasureId.GH: _gh,
    MeasureId.HELLINGER: _ag,
    MeasureId.TRIANGULAR: lambda p, q: (p - q) ** 2 / (p + q),
    MeasureId.JENSEN_SHANNON: _i,
    MeasureId.J: lambda p, q: (p - q) * np.log(p / q),
    MeasureId.ARITH_GEOM_T: _t,
    MeasureId.BHATTACHARYYA: lambda p, q: np.sqrt(p * q),
    MeasureId.HARMONIC_W: lambda p, q: 2.0 * p * q / (p + q),
}


def _pair(P, Q):
    p = np.asarray(P, dtype=float)
    q = np.asarray(Q, dtype=float)
    if p.ndim == 0 or p.shape[-1:] != q.shape[-1:]:
        raise ArityError(f"length mismatch: {p.shape} vs {q.shape}")
    return p, q


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def kernel(mid: MeasureId):
    """Termwise function ``(p_i, q_i) -> term`` whose sum is the measure."""
    return _TERMS[parse_measure(mid)]


def divergence(mid, P, Q):
    """Closed-form value of measure ``mid`` for the pair ``(P, Q)``.

    Divergences are ``>= 0`` and vanish iff ``P == Q``; the similarity
    coefficients ``B`` and ``W`` lie in ``(0, 1]`` and equal 1 iff ``P == Q``.
    """
    p, q = _pair(P, Q)
    return _out(_TERMS[parse_measure(mid)](p, q).sum(axis=-1))


# -- Dragomir gaps in closed form ---------------------------------------------


def _xi_sa(p, q):
    r2 = np.hypot(p, q)
    return _SQRT2 * q / r2 * _sa(p, q)


def _xi_sg(p, q):
    return (p + q) * np.sqrt(q / (2.0 * p * (p * p + q * q))) * _sg(p, q)


def _xi_sh(p, q):
    u = _SQRT2 * np.hypot(p, q)
    v = p + q
    # u**3 - v**3 = (u - v)(u**2 + uv + v**2), with u - v = 2 (S - A)
    return q * 2.0 * _sa(p, q) * (u * u + u * v + v * v) / (v * v * u)


def _xi_h(p, q):
    return 0.5 * np.sqrt(q / p) * _root_gap2(p, q)


def _xi_delta(p, q):
    return 2.0 * q * ((p - q) / (p + q)) ** 2


_XI = {
    MeasureId.SA: _xi_sa,
    MeasureId.SG: _xi_sg,
    MeasureId.SH: _xi_sh,
    MeasureId.HELLINGER: _xi_h,
    MeasureId.TRIANGULAR: _xi_delta,
}


def xi_closed_form(mid, P, Q):
    """Closed-form gap ``E_f - C_f`` for ``mid`` in :data:`XI_MEASURES`.

    Unlike the measures themselves the gaps are not symmetric in ``P, Q``.
    """
    mid = parse_measure(mid)
    if mid not in _XI:
        raise UnsupportedError(f"no closed-form gap for {mid.value}")
    p, q = _pair(P, Q)
    return _out(_XI[mid](p, q).sum(axis=-1))


def xi_kernel(mid):
    return _XI[parse_measure(mid)]


# -- generators ----------------------------------------------------------------


def _gs(x):
    return np.hypot(x, 1.0) / _SQRT2


def _f_sa(x):
    return (x - 1.0) ** 2 / (4.0 * (_gs(x) + 0.5 * (x + 1.0)))


def _d1_sa(x):
    s = _gs(x)
    return (x * x - 1.0) / (4.0 * s * (x + s))


def _d2_sa(x):
    return 1.0 / (_SQRT2 * (x * x + 1.0) ** 1.5)


def _f_sg(x):
    return (x - 1.0) ** 2 / (2.0 * (_gs(x) + np.sqrt(x)))


def _d1_sg(x):
    s = _gs(x)
    rx = np.sqrt(x)
    return (x - 1.0) * (2.0 * x * x + x + 1.0) / (4.0 * s * rx * (x * rx + s))


def _d2_sg(x):
    return _d2_sa(x) + 0.25 / (x * np.sqrt(x))


def _f_ah(x):
    return (x - 1.0) ** 2 / (2.0 * (x + 1.0))


def _d1_ah(x):
    return (x - 1.0) * (x + 3.0) / (2.0 * (x + 1.0) ** 2)


def _d2_ah(x):
    return 4.0 / (x + 1.0) ** 3


def _f_h(x):
    return 0.5 * _root_gap2(x, 1.0)


def _d1_h(x):
    rx = np.sqrt(x)
    return (x - 1.0) / (2.0 * rx * (rx + 1.0))


def _d2_h(x):
    return 0.25 / (x * np.sqrt(x))


def _f_gh(x):
    return np.sqrt(x) * _root_gap2(x, 1.0) / (x + 1.0)


def _d1_gh(x):
    return 0.5 / np.sqrt(x) - 2.0 / (x + 1.0) ** 2


def _d2_gh(x):
    return -0.25 / (x * np.sqrt(x)) + 4.0 / (x + 1.0) ** 3


def _f_i(x):
    r = (x - 1.0) / (x + 1.0)
    return 0.25 * (x + 1.0) * (r * np.log(x) + np.log1p(-r * r))


def _d1_i(x):
    return 0.5 * np.log1p((x - 1.0) / (x + 1.0))


def _d2_i(x):
    return 1.0 / (2.0 * x * (x + 1.0))


def _f_t(x):
    r = (x - 1.0) / (x + 1.0)
    return -0.25 * (x + 1.0) * np.log1p(-r * r)


def _d1_t(x):
    r = (x - 1.0) / (x + 1.0)
    return -0.25 * np.log1p(-r * r) + (x - 1.0) / (4.0 * x)


def _d2_t(x):
    return (x * x + 1.0) / (4.0 * x * x * (x + 1.0))


def _f_j(x):
    return (x - 1.0) * np.log(x)


def _d1_j(x):
    return np.log(x) + (x - 1.0) / x


def _d2_j(x):
    return (x + 1.0) / (x * x)


_GENERATORS = {
    MeasureId.SA: Generator("f_SA", _f_sa, _d1_sa, _d2_sa),
    MeasureId.SG: Generator("f_SG", _f_sg, _d1_sg, _d2_sg),
    MeasureId.SH: Generator(
        "f_SH",
        lambda x: _f_sa(x) + _f_ah(x),
        lambda x: _d1_sa(x) + _d1_ah(x),
        lambda x: _d2_sa(x) + _d2_ah(x),
    ),
    MeasureId.AG: Generator("f_AG", _f_h, _d1_h, _d2_h),
    MeasureId.AH: Generator("f_AH", _f_ah, _d1_ah, _d2_ah),
    MeasureId.GH: Generator("f_GH", _f_gh, _d1_gh, _d2_gh, claims_convex=False),
    MeasureId.HELLINGER: Generator("f_h", _f_h, _d1_h, _d2_h),
    MeasureId.TRIANGULAR: Generator(
        "f_Delta",
        lambda x: 2.0 * _f_ah(x),
        lambda x: 2.0 * _d1_ah(x),
        lambda x: 2.0 * _d2_ah(x),
    ),
    MeasureId.JENSEN_SHANNON: Generator("f_I", _f_i, _d1_i, _d2_i),
    MeasureId.J: Generator("f_J", _f_j, _d1_j, _d2_j),
    MeasureId.ARITH_GEOM_T: Generator("f_T", _f_t, _d1_t, _d2_t),
}


def generator_of(mid) -> Generator:
    """Generator ``f`` with ``C_f(P||Q) == divergence(mid, P, Q)``.

    ``B`` and ``W`` have none.  The ``GH`` generator is available for
    evaluation but is flagged ``claims_convex=False``.
    """
    mid = parse_measure(mid)
    try:
        return _GENERATORS[mid]
    except KeyError:
        raise UnsupportedError(f"{mid.value} is a similarity coefficient without a generator") from None


def catalog_generators(convex_only: bool = False) -> dict[MeasureId, Generator]:
    gens = dict(_GENERATORS)
    if convex_only:
        gens = {k: g for k, g in gens.items() if g.claims_convex}
    return gens


def via_generator(mid, P, Q):
    """Evaluate ``mid`` through the generic Csiszar engine (cross-check route)."""
    return csiszar_divergence(generator_of(mid), P, Q)
