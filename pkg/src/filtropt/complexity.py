"""Linear complexity and exact minimal period measurement.

Berlekamp-Massey runs over GF(2) with the connection polynomial kept as an
int bitmask (bit i = coefficient of x^i, constant term always set), which
makes the discrepancy a single masked popcount per step.  The connection
polynomial's degree can fall below the register length when the oldest tap
of the minimal LFSR is zero (e.g. a prefix of leading zeros); lc is the
register length, the recurrence check below treats missing high taps as
zero coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class ComplexityResult:
    """Shortest-LFSR answer: register length and connection polynomial."""

    lc: int
    minimal_poly: int


def bits_to_int(bits: Sequence[int]) -> int:
    """Pack s_0, s_1, ... with s_n at bit n."""
    return sum((b & 1) << n for n, b in enumerate(bits))


def berlekamp_massey_packed(seq: int, length: int) -> tuple[int, int]:
    """Berlekamp-Massey on a packed bit sequence; returns (lc, connection poly)."""
    c, b = 1, 1
    lc = 0
    m = -1
    rev = 0  # bit i = s_(n-i), rebuilt by shifting each step
    for n in range(length):
        rev = (rev << 1) | (seq >> n & 1)
        if (c & rev).bit_count() & 1:
            t = c
            c ^= b << (n - m)
            if 2 * lc <= n:
                lc = n + 1 - lc
                b = t
                m = n
    return lc, c


def berlekamp_massey(bits: Sequence[int]) -> ComplexityResult:
    """Shortest LFSR generating the sequence; lc 0 for an empty or zero input."""
    lc, poly = berlekamp_massey_packed(bits_to_int(bits), len(bits))
    return ComplexityResult(lc, poly)


def linear_complexity_periodic(period_bits: Sequence[int]) -> int:
    """Linear complexity of the infinite periodic extension of one period.

    Two concatenated copies suffice: the complexity is at most the period
    and Berlekamp-Massey needs 2*lc bits to settle.
    """
    p = len(period_bits)
    if p == 0:
        raise ValueError("empty period")
    packed = bits_to_int(period_bits)
    return berlekamp_massey_packed(packed | packed << p, 2 * p)[0]


def periodic_lc_packed(packed: int, period: int) -> int:
    """linear_complexity_periodic on an already packed period."""
    return berlekamp_massey_packed(packed | packed << period, 2 * period)[0]


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def min_period(bits: Sequence[int]) -> int:
    """Smallest divisor d of len(bits) with the sequence d-periodic.

    Exact whenever the true period divides the length, which holds for all
    filter outputs analyzed here (their periods divide 2^L - 1).
    """
    n = len(bits)
    if n == 0:
        raise ValueError("empty sequence")
    return min_period_packed(bits_to_int(bits), n)


def min_period_packed(packed: int, length: int) -> int:
    """min_period on a packed bit sequence."""
    if length <= 0:
        raise ValueError("empty sequence")
    for d in _divisors(length):
        block = packed & ((1 << d) - 1)
        whole = 0
        for shift in range(0, length, d):
            whole |= block << shift
        if whole == packed:
            return d
    raise AssertionError("unreachable: length divides itself")


def regenerates(bits: Sequence[int], result: ComplexityResult) -> bool:
    """Whether result's LFSR, seeded with the first lc bits, replays the input."""
    lc, poly = result.lc, result.minimal_poly
    if lc == 0:
        return not any(bits)
    for n in range(lc, len(bits)):
        acc = 0
        for i in range(1, lc + 1):
            acc ^= (poly >> i & 1) & bits[n - i]
        if acc != bits[n]:
            return False
    return True
