"""Exact order-class statistics over the quadratic residues of one prime.

All fractions are exact rationals so the counting laws can be asserted as
equalities: the odd-order share is 1/2^(k-1) and, for k >= 2, the share of
residues of order exactly 2^(k-1) is 1/(2n).
"""

from dataclasses import dataclass
from fractions import Fraction

from .modarith import PrimeContext

__all__ = [
    "CENSUS_LIMIT",
    "DensityReport",
    "multiplier_census",
    "multiplier_coverage",
    "multiplier_histogram",
    "order_census",
]

CENSUS_LIMIT = 1 << 22


@dataclass(frozen=True)
class DensityReport:
    """Counts of quadratic residues by class index and by order behaviour."""

    p: int
    k: int
    n: int
    qr_count: int
    odd_order_count: int
    exact_2k1_order_count: int
    class_histogram: tuple[int, ...]
    odd_order_fraction: Fraction
    exact_2k1_fraction: Fraction


def order_census(ctx: PrimeContext) -> DensityReport:
    """Exact per-class counts over all residues, by full enumeration.

    Residues are enumerated as v^2 for v in [1, (p-1)/2], hitting each
    exactly once.  A residue has odd order iff a^n = 1 (class 0), and order
    exactly 2^(k-1) iff a^(2^(k-2)) = -1 (k >= 2), so no factorization of n
    is needed.
    """
    p, k, n = ctx.p, ctx.k, ctx.n
    if p > CENSUS_LIMIT:
        raise ValueError(f"p={p} exceeds the census bound 2^22")
    half = 1 << (k - 1)
    class_of = {ctx.zn_pow(2 * t): t for t in range(half)}
    hist = [0] * half
    exact = 0
    two_exp = 1 << (k - 2) if k >= 2 else 0
    for v in range(1, (p + 1) // 2):
        a = v * v % p
        hist[class_of[pow(a, n, p)]] += 1
        if k >= 2:
            if pow(a, two_exp, p) == p - 1:
                exact += 1
        elif a == 1:
            exact += 1
    qr = (p - 1) // 2
    return DensityReport(
        p,
        k,
        n,
        qr,
        hist[0],
        exact,
        tuple(hist),
        Fraction(hist[0], qr),
        Fraction(exact, qr),
    )


def multiplier_histogram(report: DensityReport) -> tuple[int, ...]:
    """Histogram over multiplier exponents e = -t mod 2^(k-1), one bucket per e."""
    hist = report.class_histogram
    half = len(hist)
    return tuple(hist[(-e) % half] for e in range(half))


def multiplier_census(ctx: PrimeContext) -> tuple[int, ...]:
    """How many residues take each multiplier exponent e in their root
    a^((n+1)/2) * z^(en); bucket e = 0 is exactly the odd-order class."""
    return multiplier_histogram(order_census(ctx))


def multiplier_coverage(report: DensityReport) -> Fraction:
    """Share of residues whose order is not the full 2-power 2^(k-1).

    Equals 1 - 1/(2n) for k >= 2, so it climbs toward 1 as n grows with k
    fixed; reported as a trend, never asserted as a limit.
    """
    return 1 - report.exact_2k1_fraction
