"""Tests for the PCG32 generator and its derived draws."""

import math

import numpy as np
import pytest

from zodiac_lab.synthpop.rng import Pcg32, rng_new, rng_uniform_int


def test_matches_reference_output_stream():
    """Seed 42, stream 54 reproduces the published PCG32 demo outputs."""
    # Arrange
    rng = rng_new(42, 54)

    # Act
    outputs = [rng.next_u32() for _ in range(6)]

    # Assert
    assert outputs == [0xA15C02B7, 0x7B47F409, 0xBA1D3330, 0x83D2F293, 0xBFA4784B, 0xCBED606E]


def test_increment_is_odd():
    for stream in (0, 1, 2, 12345, (1 << 64) - 1):
        assert rng_new(9, stream).increment % 2 == 1


def test_same_seed_and_stream_repeat():
    a = rng_new(2024, 7)
    b = rng_new(2024, 7)
    assert [a.next_u32() for _ in range(1000)] == [b.next_u32() for _ in range(1000)]


def test_adjacent_streams_differ():
    a = rng_new(2024, 7)
    b = rng_new(2024, 8)
    assert [a.next_u32() for _ in range(20)] != [b.next_u32() for _ in range(20)]


def test_uniform_int_with_one_outcome_is_zero():
    rng = rng_new(5)
    assert all(rng_uniform_int(rng, 1) == 0 for _ in range(100))


def test_uniform_int_rejects_nonpositive_bound():
    with pytest.raises(ValueError):
        rng_new(5).uniform_int(0)


def test_uniform_int_twelve_outcomes_are_balanced():
    """Each of 12 outcomes lies within 5 binomial sigmas of 1/12 over 10^5 draws."""
    # Arrange
    rng = rng_new(77, 3)
    n = 100_000

    # Act
    counts = np.bincount([rng.uniform_int(12) for _ in range(n)], minlength=12)

    # Assert
    p = 1 / 12
    sigma = math.sqrt(n * p * (1 - p))
    assert np.all(np.abs(counts - n * p) < 5 * sigma)


def test_uniform_int_sequence_is_reproducible():
    a = rng_new(314)
    b = rng_new(314)
    assert [a.uniform_int(100) for _ in range(200)] == [b.uniform_int(100) for _ in range(200)]


def test_unit_draws_have_mean_one_half():
    rng = rng_new(1)
    draws = [rng.random_float() for _ in range(100_000)]
    assert 0.0 <= min(draws) and max(draws) < 1.0
    assert abs(np.mean(draws) - 0.5) < 0.01


def test_shuffle_returns_permutation_and_leaves_input():
    # Arrange
    rng = rng_new(8)
    items = list(range(50))

    # Act
    shuffled = rng.shuffle(items)

    # Assert
    assert sorted(shuffled) == items
    assert items == list(range(50))
    assert shuffled != items


def test_sample_draws_distinct_members():
    rng = rng_new(8)
    chosen = rng.sample(range(28), 5)
    assert len(set(chosen)) == 5
    assert all(0 <= c < 28 for c in chosen)
    with pytest.raises(ValueError):
        rng.sample(range(3), 4)


def test_normal_moments():
    rng = rng_new(99)
    draws = np.array([rng.normal(7.0, 1.0) for _ in range(50_000)])
    assert abs(draws.mean() - 7.0) < 0.03
    assert abs(draws.std() - 1.0) < 0.03


def test_poisson_mean_matches_rate():
    rng = rng_new(99)
    draws = np.array([rng.poisson(3.0) for _ in range(50_000)])
    assert draws.min() >= 0
    assert abs(draws.mean() - 3.0) < 0.05


def test_poisson_handles_the_largest_accepted_rate():
    rng = rng_new(5)
    draws = np.array([rng.poisson(700.0) for _ in range(1000)])
    assert abs(draws.mean() - 700.0) < 4.0
    assert draws.max() < 10_000


def test_poisson_rejects_underflowing_rate():
    with pytest.raises(ValueError):
        Pcg32(1).poisson(800.0)


def test_bernoulli_extremes():
    rng = Pcg32(4)
    assert not any(rng.bernoulli(0.0) for _ in range(100))
    assert all(rng.bernoulli(1.0) for _ in range(100))


def test_block_outputs_match_scalar_outputs():
    """Vectorised outputs equal repeated next_u32 and leave the same state."""
    # Arrange
    scalar = Pcg32(42, 54)
    block = Pcg32(42, 54)

    # Act
    expected = [scalar.next_u32() for _ in range(1000)]
    actual = block.next_u32_array(1000)

    # Assert
    assert actual[:6].tolist() == [0xA15C02B7, 0x7B47F409, 0xBA1D3330,
                                   0x83D2F293, 0xBFA4784B, 0xCBED606E]
    assert actual.tolist() == expected
    assert block.state == scalar.state


def test_block_bounded_draws_match_scalar_draws_through_rejections():
    """A bound of 3 * 2^30 rejects a quarter of outputs; both paths consume alike."""
    # Arrange
    bounds = [3 << 30] * 200 + [7] * 50 + list(range(1, 100))
    scalar = Pcg32(8, 3)
    block = Pcg32(8, 3)

    # Act
    expected = [scalar.uniform_int(b) for b in bounds]
    actual = block.uniform_int_array(bounds)

    # Assert
    assert actual.tolist() == expected
    assert block.next_u32() == scalar.next_u32()


def test_block_bounded_draws_reject_non_positive_bounds():
    with pytest.raises(ValueError):
        Pcg32(1).uniform_int_array([5] * 40 + [0])


def test_shuffle_matches_scalar_fisher_yates():
    rng = Pcg32(12, 4)
    reference = Pcg32(12, 4)
    items = list(range(500))
    for i in range(len(items) - 1, 0, -1):
        j = reference.uniform_int(i + 1)
        items[i], items[j] = items[j], items[i]
    assert rng.shuffle(range(500)) == items
    assert rng.state == reference.state
