import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meandiv.distributions import (
    SUM_TOL,
    Distribution,
    binary_symmetric_pair,
    make_distribution,
    pair_sweep,
    random_distribution,
    random_pair,
)
from meandiv.errors import ArityError, DomainError, NormalizationError, PositivityError


def test_validate_accepts_probability_vector():
    d = make_distribution([0.2, 0.3, 0.5])
    assert len(d) == 3
    assert list(d) == [0.2, 0.3, 0.5]


def test_normalize_mode():
    d = make_distribution([1, 1, 2], "normalize")
    np.testing.assert_allclose(d.weights, [0.25, 0.25, 0.5])


@pytest.mark.parametrize(
    "raw,err",
    [
        ([1.0], ArityError),
        ([], ArityError),
        ([0.5, 0.5, 0.0], PositivityError),
        ([0.6, -0.1, 0.5], PositivityError),
        ([0.5, float("nan")], DomainError),
        ([0.5, 0.6], NormalizationError),
    ],
)
def test_validation_errors(raw, err):
    with pytest.raises(err):
        make_distribution(raw)


def test_sum_tolerance_boundary():
    make_distribution([0.5, 0.5 + 0.5 * SUM_TOL])
    with pytest.raises(NormalizationError):
        make_distribution([0.5, 0.5 + 2 * SUM_TOL])


def test_weights_are_read_only():
    d = make_distribution([0.5, 0.5])
    with pytest.raises(ValueError):
        d.weights[0] = 0.1


def test_equality_and_hash():
    a = make_distribution([0.25, 0.75])
    b = make_distribution([1, 3], "normalize")
    assert a == b and hash(a) == hash(b)


def test_binary_symmetric_pair():
    P, Q = binary_symmetric_pair(0.1)
    np.testing.assert_allclose(P.weights, [0.1, 0.9])
    np.testing.assert_allclose(Q.weights, [0.9, 0.1])
    for t in (0.0, 1.0, -0.1, 1.5):
        with pytest.raises(DomainError):
            binary_symmetric_pair(t)


def test_random_distribution_deterministic():
    a = random_distribution(7, seed=3)
    b = random_distribution(7, seed=3)
    assert a == b
    assert a != random_distribution(7, seed=4)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 64), st.integers(0, 2**32 - 1))
def test_random_distribution_respects_min_mass(n, seed):
    d = random_distribution(n, seed, min_mass=1e-4)
    assert d.weights.min() >= 1e-4 * (1 - 1e-12)
    assert abs(d.weights.sum() - 1.0) <= SUM_TOL


def test_min_mass_bounds():
    with pytest.raises(DomainError):
        random_distribution(4, 0, min_mass=0.3)
    with pytest.raises(DomainError):
        random_distribution(1, 0)


def test_pair_sweep_matches_random_pair():
    seen = {}
    last_n = 0
    for batch in pair_sweep(300, 2, 9, seed=11):
        assert batch.n >= last_n
        last_n = batch.n
        assert batch.p.shape == batch.q.shape == (batch.seeds.size, batch.n)
        assert np.all(np.diff(batch.seeds) > 0)
        for s, p, q in zip(batch.seeds, batch.p, batch.q):
            seen[int(s)] = (p, q)
    assert sorted(seen) == list(range(11, 311))
    for s in (11, 150, 310):
        P, Q = random_pair(s, 2, 9)
        np.testing.assert_array_equal(seen[s][0], P.weights)
        np.testing.assert_array_equal(seen[s][1], Q.weights)


def test_pair_sweep_argument_checks():
    with pytest.raises(DomainError):
        next(pair_sweep(0))
    with pytest.raises(DomainError):
        next(pair_sweep(5, 4, 3))


def test_distribution_is_array_like():
    d = Distribution([0.5, 0.5])
    assert np.asarray(d).sum() == 1.0
