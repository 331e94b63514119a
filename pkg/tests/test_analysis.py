from fractions import Fraction

import pytest

from sqrtmodp.analysis import (
    CENSUS_LIMIT,
    multiplier_census,
    multiplier_coverage,
    order_census,
)
from sqrtmodp.modarith import PrimeContext, make_context, primes_in_range
from sqrtmodp.oracles import brute_root_table, residue_class


def naive_order(a, p):
    d, x = 1, a
    while x != 1:
        x = x * a % p
        d += 1
    return d


def test_census_p13():
    rep = order_census(make_context(13))
    assert (rep.p, rep.k, rep.n) == (13, 2, 3)
    assert rep.qr_count == 6
    assert rep.odd_order_count == 3  # the subgroup {1, 3, 9}
    assert rep.odd_order_fraction == Fraction(1, 2)
    assert rep.exact_2k1_order_count == 1  # only 12 = -1 has order 2
    assert rep.exact_2k1_fraction == Fraction(1, 6)
    assert rep.class_histogram == (3, 3)


def test_census_p41():
    rep = order_census(make_context(41))
    assert rep.odd_order_fraction == Fraction(1, 4)
    assert rep.exact_2k1_fraction == Fraction(1, 10)
    assert rep.class_histogram == (5, 5, 5, 5)


def test_census_p7_k1():
    rep = order_census(make_context(7))
    assert rep.qr_count == 3
    assert rep.odd_order_fraction == Fraction(1, 1)
    assert rep.class_histogram == (3,)
    assert rep.exact_2k1_order_count == 1  # only the identity has order 1


def test_census_matches_naive_orders():
    for p in [13, 17, 41, 73]:
        ctx = make_context(p)
        rep = order_census(ctx)
        odd = sum(1 for a in brute_root_table(p) if naive_order(a, p) % 2 == 1)
        exact = sum(
            1 for a in brute_root_table(p) if naive_order(a, p) == 1 << (ctx.k - 1)
        )
        assert rep.odd_order_count == odd
        assert rep.exact_2k1_order_count == exact


def test_census_classes_match_residue_class():
    for p in [13, 17, 41, 97]:
        ctx = make_context(p)
        rep = order_census(ctx)
        hist = [0] * (1 << (ctx.k - 1))
        for a in brute_root_table(p):
            hist[residue_class(ctx, a)] += 1
        assert tuple(hist) == rep.class_histogram


def test_exact_laws_sweep():
    # both probability statements are exact counting identities at fixed p
    for p in primes_in_range(3, 2000):
        ctx = make_context(p)
        rep = order_census(ctx)
        assert sum(rep.class_histogram) == rep.qr_count
        assert rep.class_histogram[0] == ctx.n
        assert all(c == ctx.n for c in rep.class_histogram)
        assert rep.odd_order_count == ctx.n
        assert rep.odd_order_fraction == Fraction(1, 1 << (ctx.k - 1))
        if ctx.k >= 2:
            assert rep.exact_2k1_order_count == 1 << (ctx.k - 2)
            assert rep.exact_2k1_fraction == Fraction(1, 2 * ctx.n)


def test_multiplier_census_examples():
    assert multiplier_census(make_context(17)) == (1,) * 8  # n = 1: one per bucket
    assert multiplier_census(make_context(13)) == (3, 3)
    assert multiplier_census(make_context(7)) == (3,)  # k = 1: single bucket


def test_multiplier_census_matches_per_element():
    for p in [13, 17, 41, 97]:
        ctx = make_context(p)
        half = 1 << (ctx.k - 1)
        hist = [0] * half
        for a in brute_root_table(p):
            hist[(-residue_class(ctx, a)) % half] += 1
        assert tuple(hist) == multiplier_census(ctx)


def test_bucket_zero_is_odd_order_class():
    for p in [13, 41, 17, 97]:
        ctx = make_context(p)
        assert multiplier_census(ctx)[0] == ctx.n


def test_fractions_are_exact_rationals():
    rep = order_census(make_context(41))
    assert isinstance(rep.odd_order_fraction, Fraction)
    assert isinstance(rep.exact_2k1_fraction, Fraction)


def test_coverage_trend_fixed_k():
    # with k fixed, 1 - 1/(2n) climbs toward 1 as n grows
    for k in (2, 3, 4):
        rows = []
        for p in primes_in_range(3, 4000):
            ctx = make_context(p)
            if ctx.k != k:
                continue
            cov = multiplier_coverage(order_census(ctx))
            assert cov == 1 - Fraction(1, 2 * ctx.n)
            rows.append((ctx.n, cov))
        rows.sort()
        covs = [c for _, c in rows]
        assert covs == sorted(covs)
        assert covs[-1] > Fraction(9, 10)


def test_small_share_for_k_at_least_8():
    # smallest prime with 2^8 dividing p - 1 exactly: census must show < 1%
    p = next(q for q in primes_in_range(3, 10_000) if make_context(q).k == 8)
    assert p == 257
    rep = order_census(make_context(p))
    assert rep.odd_order_fraction == Fraction(1, 128)
    assert rep.odd_order_fraction < Fraction(1, 100)


def test_census_bound():
    fake = PrimeContext(CENSUS_LIMIT + 1, 1, CENSUS_LIMIT // 2, 2)
    with pytest.raises(ValueError):
        order_census(fake)
