"""Weight expansions: the recurrence, its exact identities, inner products."""

import random
from fractions import Fraction

import pytest

from sympstairs.weights import flat_length, weight_expansion, weight_inner


def brute_force_expansion(a: Fraction) -> list[Fraction]:
    """Independent oracle: run the defining recurrence entry by entry.

    w1 = a - l0 < 1, w2 = 1 - l1*w1 < w1, ...; each weight is repeated as
    often as it fits into its predecessor.
    """
    flat = []
    prev, cur = a, Fraction(1)
    while cur > 0:
        while prev >= cur:
            flat.append(cur)
            prev -= cur
        prev, cur = cur, prev
    return flat


def continued_fraction(p: int, q: int) -> list[int]:
    """Independent Euclidean continued fraction of p/q."""
    out = []
    while q:
        out.append(p // q)
        p, q = q, p - (p // q) * q
    return out


def test_expansion_of_25_over_9():
    w = weight_expansion(Fraction(25, 9))
    assert w.entries == (
        (Fraction(1), 2),
        (Fraction(7, 9), 1),
        (Fraction(2, 9), 3),
        (Fraction(1, 9), 2),
    )
    assert w.flatten() == brute_force_expansion(Fraction(25, 9))


def test_integer_expansion():
    w = weight_expansion(5)
    assert w.entries == ((Fraction(1), 5),)
    assert flat_length(7) == 7


def test_8_plus_1_36():
    a = Fraction(8) + Fraction(1, 36)
    w = weight_expansion(a)
    assert w.flatten() == brute_force_expansion(a)
    assert w.multiplicities == tuple(continued_fraction(289, 36))
    assert w.square_sum() == Fraction(289, 36)


def test_domain_error_below_one():
    with pytest.raises(ValueError):
        weight_expansion(Fraction(1, 2))


def test_identities_on_random_rationals():
    rng = random.Random(987)
    for _ in range(1000):
        q = rng.randint(1, 10**4)
        p = rng.randint(q, 100 * q)
        a = Fraction(p, q)
        w = weight_expansion(a)
        red_q = a.denominator
        assert w.square_sum() == a
        assert w.weight_sum() == a + 1 - Fraction(1, red_q)
        assert w.entries[-1][0] == Fraction(1, red_q)
        weights = [x for x, _ in w.entries]
        assert all(x > y for x, y in zip(weights, weights[1:]))
        assert all(x > 0 for x in weights)


def test_multiplicities_match_continued_fraction():
    rng = random.Random(55)
    for _ in range(300):
        q = rng.randint(1, 500)
        p = rng.randint(q, 60 * q)
        a = Fraction(p, q)
        assert weight_expansion(a).multiplicities == tuple(
            continued_fraction(a.numerator, a.denominator)
        )


def test_inner_all_ones():
    b, k = 3, 1
    n = 2 * b + 2 * k + 1
    assert weight_inner([1] * n, weight_expansion(n)) == n


def test_inner_f2_against_w8():
    m = (3,) + (2,) * 7
    assert weight_inner(m, weight_expansion(8)) == 17


def test_inner_g2_against_25_over_9():
    m = (4,) * 6 + (1,) * 5
    w = weight_expansion(Fraction(25, 9))
    # oracle: flatten and dot by hand
    flat = w.flatten()
    expected = sum(mi * wi for mi, wi in zip(m, flat + [Fraction(0)] * len(m)))
    assert expected == Fraction(14)
    assert weight_inner(m, w) == expected


def test_inner_zero_pads_both_sides():
    w = weight_expansion(Fraction(5, 2))
    assert weight_inner([1], w) == 1  # short m
    long_m = [1] * (w.flat_length + 10)
    assert weight_inner(long_m, w) == w.weight_sum()  # short w


def test_flat_length_examples():
    assert flat_length(Fraction(25, 9)) == 8
    assert flat_length(Fraction(289, 36)) == sum(continued_fraction(289, 36))
