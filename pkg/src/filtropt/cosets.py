"""Cyclotomic cosets of 2 modulo 2^L - 1.

Doubling mod 2^L - 1 rotates the L-bit representation of an exponent, so a
coset is a necklace of L-bit strings: every member shares the leader's
binary weight, and the orbit size divides L.  The weight-w cosets jointly
cover all C(L, w) exponents of weight w; summed over w <= k this gives the
ceiling nk(L, k) on the linear complexity of an order-k filter output.

The special exponent 2^L - 1 (== 0 mod 2^L - 1, the all-ones string) forms
its own orbit of size 1 and weight L.  It carries the constant component of
a sequence and enters enumerations only when k = L, since no filter of
order k < L can reach weight L.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd

ENUMERATION_MAX_L = 20


@dataclass(frozen=True)
class CyclotomicCoset:
    """A doubling orbit mod 2^L - 1, listed from its minimum element."""

    leader: int
    elements: tuple[int, ...]
    cardinal: int
    weight: int


def coset_of(e: int, L: int) -> CyclotomicCoset:
    """The coset containing exponent e, canonicalized to start at the leader."""
    n = (1 << L) - 1
    if not 1 <= e <= n - 1:
        raise ValueError(f"exponent {e} outside [1, {n - 1}]")
    orbit = []
    x = e
    while True:
        orbit.append(x)
        x = (x * 2) % n
        if x == e:
            break
    leader = min(orbit)
    i = orbit.index(leader)
    orbit = orbit[i:] + orbit[:i]
    return CyclotomicCoset(leader, tuple(orbit), len(orbit), leader.bit_count())


def constant_coset(L: int) -> CyclotomicCoset:
    """The weight-L singleton orbit of 2^L - 1 (exponent 0 mod 2^L - 1)."""
    n = (1 << L) - 1
    return CyclotomicCoset(n, (n,), 1, L)


@lru_cache(maxsize=32)
def _all_cosets(L: int) -> tuple[CyclotomicCoset, ...]:
    if L > ENUMERATION_MAX_L:
        raise ValueError(
            f"coset enumeration capped at L <= {ENUMERATION_MAX_L} "
            f"(use cardinal_counts for large L)")
    n = (1 << L) - 1
    seen = bytearray(n)
    out = []
    for e in range(1, n):
        if seen[e]:
            continue
        c = coset_of(e, L)
        for x in c.elements:
            seen[x] = 1
        out.append(c)
    return tuple(out)


def cosets_up_to_weight(L: int, k: int) -> list[CyclotomicCoset]:
    """All cosets with leader weight in [1, k], sorted by leader.

    Includes the weight-L constant coset exactly when k = L.
    """
    if not 1 <= k <= L:
        raise ValueError(f"weight bound k={k} outside [1, {L}]")
    out = [c for c in _all_cosets(L) if c.weight <= k]
    if k == L:
        out.append(constant_coset(L))
    return out


def nk(L: int, k: int) -> int:
    """C(L,1) + ... + C(L,k): the maximum linear complexity at order k."""
    if not 1 <= k <= L:
        raise ValueError(f"order k={k} outside [1, {L}]")
    return sum(comb(L, i) for i in range(1, k + 1))


def coset_period(c: CyclotomicCoset, L: int) -> int:
    """Period of the coset's characteristic sequence: (2^L - 1)/gcd(leader, 2^L - 1)."""
    n = (1 << L) - 1
    return n // gcd(c.leader, n)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _mobius(n: int) -> int:
    mu = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def cardinal_counts(L: int, k: int) -> dict[int, int]:
    """Number of weight-<=k cosets per cardinal, without enumerating them.

    An exponent has orbit size dividing d iff its L-bit string is L/d
    repetitions of a d-bit block, so the fixed counts are block-weight
    binomials and Moebius inversion over the divisors of L isolates each
    exact orbit size.  Works for any L, including ones where 2^L - 1 is far
    beyond enumeration range.
    """
    if not 1 <= k <= L:
        raise ValueError(f"weight bound k={k} outside [1, {L}]")
    divs = _divisors(L)

    def fixed(d: int) -> int:
        rep = L // d
        return sum(comb(d, b) for b in range(1, d + 1) if b * rep <= k)

    counts: dict[int, int] = {}
    for d in divs:
        g = sum(_mobius(d // dd) * fixed(dd) for dd in _divisors(d))
        if g:
            if g % d:
                raise AssertionError(f"orbit count {g} not divisible by size {d}")
            counts[d] = g // d
    return counts


def coset_count(L: int, k: int) -> int:
    """N: how many cosets have weight <= k (constant coset included at k = L)."""
    return sum(cardinal_counts(L, k).values())
