"""Finite discrete probability distributions with strictly positive mass.

A :class:`Distribution` is an immutable probability vector ``(p_1, ..., p_n)``
with ``n >= 2``, every ``p_i > 0`` and ``sum(p) == 1`` to within
:data:`SUM_TOL`.  Zero-mass cells are rejected on construction, so every
generator evaluation ``f(p_i / q_i)`` downstream stays inside ``(0, inf)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import ArityError, DomainError, NormalizationError, PositivityError

__all__ = [
    "SUM_TOL",
    "DEFAULT_MIN_MASS",
    "Mode",
    "Distribution",
    "make_distribution",
    "binary_symmetric_pair",
    "random_distribution",
    "random_pair",
    "PairBatch",
    "pair_sweep",
]

SUM_TOL = 1e-9
DEFAULT_MIN_MASS = 1e-4


class Mode(enum.Enum):
    VALIDATE = "validate"
    NORMALIZE = "normalize"


class Distribution:
    """Validated probability vector; build it with :func:`make_distribution`."""

    __slots__ = ("_w",)

    def __init__(self, weights):
        w = np.array(weights, dtype=float)
        _check(w)
        w.flags.writeable = False
        self._w = w

    @property
    def weights(self) -> np.ndarray:
        return self._w

    def __len__(self):
        return self._w.shape[0]

    def __iter__(self):
        return iter(self._w.tolist())

    def __array__(self, dtype=None, copy=None):
        return self._w if dtype is None else self._w.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, Distribution):
            return NotImplemented
        return np.array_equal(self._w, other._w)

    def __hash__(self):
        return hash(self._w.tobytes())

    def __repr__(self):
        return f"Distribution({self._w.tolist()!r})"


def _check(w: np.ndarray) -> None:
    if w.ndim != 1 or w.shape[0] < 2:
        raise ArityError(f"a distribution needs at least 2 weights, got shape {w.shape}")
    if not np.isfinite(w).all():
        raise DomainError("weights must be finite")
    if (w <= 0).any():
        raise PositivityError(f"weights must be strictly positive (min = {w.min()!r})")
    s = w.sum()
    if abs(s - 1.0) > SUM_TOL:
        raise NormalizationError(f"weights sum to {s!r}, not 1 (tolerance {SUM_TOL})")


def make_distribution(raw: Sequence[float], mode: Mode | str = Mode.VALIDATE) -> Distribution:
    """Build a :class:`Distribution` from raw weights.

    ``mode="validate"`` accepts the weights only if they already form a
    probability vector; ``mode="normalize"`` first divides by their sum.
    Positivity is checked before normalizing.

    >>> make_distribution([1, 1, 2], "normalize")
    Distribution([0.25, 0.25, 0.5])
    """
    mode = Mode(mode)
    w = np.array(raw, dtype=float)
    if w.ndim != 1 or w.shape[0] < 2:
        raise ArityError(f"a distribution needs at least 2 weights, got {w.shape[-1] if w.ndim else 0}")
    if not np.isfinite(w).all():
        raise DomainError("weights must be finite")
    if (w <= 0).any():
        raise PositivityError(f"weights must be strictly positive (min = {w.min()!r})")
    if mode is Mode.NORMALIZE:
        w = w / w.sum()
    return Distribution(w)


def binary_symmetric_pair(t: float) -> tuple[Distribution, Distribution]:
    """``P = (t, 1-t)`` and its mirror ``Q = (1-t, t)`` for ``0 < t < 1``."""
    t = float(t)
    if not 0.0 < t < 1.0:
        raise DomainError(f"t must lie in the open interval (0, 1), got {t!r}")
    return Distribution([t, 1.0 - t]), Distribution([1.0 - t, t])


def _draw(rng: np.random.Generator, n: int, min_mass: float) -> np.ndarray:
    u = rng.random(n)
    total = u.sum()
    if total <= 0.0:
        u = np.full(n, 1.0 / n)
    else:
        u = u / total
    # convex mix with the uniform vector keeps every cell >= min_mass
    return min_mass + (1.0 - n * min_mass) * u


def _check_min_mass(n: int, min_mass: float) -> None:
    if not 0.0 < min_mass < 1.0 / n:
        raise DomainError(f"min_mass must lie in (0, 1/n) = (0, {1.0 / n}), got {min_mass!r}")


def random_distribution(n: int, seed: int, min_mass: float = DEFAULT_MIN_MASS) -> Distribution:
    """Deterministic pseudo-random distribution with every weight ``>= min_mass``."""
    n = int(n)
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    _check_min_mass(n, min_mass)
    return Distribution(_draw(np.random.default_rng(seed), n, min_mass))


def random_pair(
    seed: int, n_min: int = 2, n_max: int = 32, min_mass: float = DEFAULT_MIN_MASS
) -> tuple[Distribution, Distribution]:
    """Pair of distributions of a common random length ``n in [n_min, n_max]``.

    The pair is a pure function of its arguments; :func:`pair_sweep` produces
    the same pairs for the same seeds.
    """
    n, p, q = _pair_arrays(seed, n_min, n_max, min_mass)
    return Distribution(p), Distribution(q)


def _pair_arrays(seed, n_min, n_max, min_mass):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(n_min, n_max + 1))
    return n, _draw(rng, n, min_mass), _draw(rng, n, min_mass)


@dataclass(frozen=True)
class PairBatch:
    """Random pairs of one common length, stacked row-wise."""

    n: int
    seeds: np.ndarray
    p: np.ndarray  # shape (m, n)
    q: np.ndarray


def pair_sweep(
    count: int,
    n_min: int = 2,
    n_max: int = 32,
    seed: int = 0,
    min_mass: float = DEFAULT_MIN_MASS,
) -> Iterator[PairBatch]:
    """Generate the pairs ``random_pair(s)`` for ``s = seed .. seed+count-1``.

    Pairs are grouped by length and yielded in increasing ``n``; within a
    batch rows keep seed order, so reductions over the sweep are bit-stable.
    """
    if count < 1:
        raise DomainError("count must be >= 1")
    if n_min < 2 or n_max < n_min:
        raise DomainError(f"invalid length range [{n_min}, {n_max}]")
    _check_min_mass(n_max, min_mass)
    groups: dict[int, tuple[list, list, list]] = {}
    for s in range(seed, seed + count):
        n, p, q = _pair_arrays(s, n_min, n_max, min_mass)
        g = groups.setdefault(n, ([], [], []))
        g[0].append(s)
        g[1].append(p)
        g[2].append(q)
    for n in sorted(groups):
        seeds, ps, qs = groups[n]
        yield PairBatch(n, np.asarray(seeds), np.vstack(ps), np.vstack(qs))
