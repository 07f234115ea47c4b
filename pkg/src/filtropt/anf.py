"""Boolean filter functions in algebraic normal form.

A filter of order k over L register stages is an xor of and-monomials, each
monomial a strictly increasing tuple of tap offsets in [0, L-1].  There is
no constant term, and at least one monomial has size exactly k, so the
filters of order k for k = 1..L partition the nonzero constant-free
functions.  Text form: monomials joined by '+', taps joined by '*', taps
written x<index> ("x0 + x1*x3").
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .lfsr import LfsrGenerator

Monomial = tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 1 << 24
_TAP_RE = re.compile(r"^x(\d+)$")


class AnfParseError(ValueError):
    """Raised for malformed ANF text."""


@dataclass(frozen=True)
class FilterFunction:
    """An order-k filter in ANF; immutable, evaluation is pure."""

    L: int
    monomials: frozenset[Monomial]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.monomials:
            raise ValueError("a filter needs at least one monomial")
        for mono in self.monomials:
            if len(mono) == 0:
                raise ValueError("constant monomial not allowed")
            if list(mono) != sorted(set(mono)):
                raise ValueError(f"monomial {mono} taps must be strictly increasing")
            if mono[-1] >= self.L or mono[0] < 0:
                raise ValueError(f"monomial {mono} has a tap outside [0, {self.L - 1}]")
        masks = tuple(sorted(sum(1 << t for t in mono) for mono in self.monomials))
        object.__setattr__(self, "_masks", masks)

    @property
    def k(self) -> int:
        """Order: the largest monomial size."""
        return max(len(m) for m in self.monomials)

    def sorted_monomials(self) -> list[Monomial]:
        return sorted(self.monomials, key=lambda m: (len(m), m))

    def __str__(self) -> str:
        return format_anf(self)


def _window_as_int(w, L: int) -> int:
    if isinstance(w, int):
        if w < 0 or w >> L:
            raise ValueError(f"window {w!r} is not an L={L} bit vector")
        return w
    bits = list(w)
    if len(bits) != L:
        raise ValueError(f"window has {len(bits)} bits, expected {L}")
    return sum((b & 1) << i for i, b in enumerate(bits))


def evaluate(f: FilterFunction, w) -> int:
    """Evaluate f on an L-bit window (int bitmask or bit sequence)."""
    wi = _window_as_int(w, f.L)
    out = 0
    for mask in f._masks:
        out ^= (wi & mask) == mask
    return out & 1


def filter_sequence(f: FilterFunction, gen: LfsrGenerator, length: int) -> list[int]:
    """z_n = f(a_n, ..., a_(n+L-1)) for n = 0..length-1."""
    if f.L != gen.ctx.L:
        raise ValueError(f"filter has L={f.L} but generator has L={gen.ctx.L}")
    return [evaluate(f, gen.window(n)) for n in range(length)]


def monomials_of_degree(L: int, d: int) -> list[Monomial]:
    """All size-d monomials in lexicographic order."""
    return list(combinations(range(L), d))


def lower_monomials(L: int, k: int) -> list[Monomial]:
    """All monomials of size 1..k-1, degree-major then lexicographic."""
    out: list[Monomial] = []
    for d in range(1, k):
        out.extend(monomials_of_degree(L, d))
    return out


def count_filters(L: int, k: int) -> int:
    """Exact size of the order-k filter space: (2^C(L,k) - 1) * 2^C(L,k-1) * ... * 2^C(L,1)."""
    if not 1 <= k <= L:
        raise ValueError(f"order k={k} outside [1, {L}]")
    lower = sum(comb(L, d) for d in range(1, k))
    return ((1 << comb(L, k)) - 1) << lower


def _from_masks(L: int, k: int, top_mask: int, low_mask: int,
                top: Sequence[Monomial], low: Sequence[Monomial]) -> FilterFunction:
    monos = [top[i] for i in range(len(top)) if top_mask >> i & 1]
    monos += [low[i] for i in range(len(low)) if low_mask >> i & 1]
    return FilterFunction(L, frozenset(monos))


def random_filter(L: int, k: int, rng) -> FilterFunction:
    """Uniform draw from the order-k space using a seeded random.Random.

    The degree-k monomial subset is uniform over nonzero subsets; every
    lower-degree monomial is included independently with probability 1/2.
    """
    count_filters(L, k)  # validates range
    top = monomials_of_degree(L, k)
    low = lower_monomials(L, k)
    top_mask = rng.randrange(1, 1 << len(top))
    low_mask = rng.getrandbits(len(low)) if low else 0
    return _from_masks(L, k, top_mask, low_mask, top, low)


def enumerate_filters(L: int, k: int, start: int = 0, stop: int | None = None,
                      cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[FilterFunction]:
    """Yield every order-k filter exactly once, in a stable indexable order.

    Index layout: the degree-k subset bitmask ascends from 1 in the outer
    position, the lower-degree bitmask ascends from 0 inside, so slices
    [start, stop) can be handed to parallel workers.
    """
    total = count_filters(L, k)
    if total > cap:
        # count written as a power of two: it can be too big even to print
        raise ValueError(
            f"enumeration of about 2^{total.bit_length() - 1} filters exceeds "
            f"the cap of {cap}; raise the cap explicitly or use sampling")
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError(f"bad range [{start}, {stop}) for {total} filters")
    top = monomials_of_degree(L, k)
    low = lower_monomials(L, k)
    n_low = 1 << len(low)
    for idx in range(start, stop):
        top_mask = idx // n_low + 1
        low_mask = idx % n_low
        yield _from_masks(L, k, top_mask, low_mask, top, low)


def parse_anf(text: str, L: int) -> FilterFunction:
    """Parse ANF text like "x0 + x1*x3"; whitespace is ignored."""
    squeezed = re.sub(r"\s+", "", text)
    if not squeezed:
        raise AnfParseError("empty filter expression")
    monomials: list[Monomial] = []
    for term in squeezed.split("+"):
        if not term:
            raise AnfParseError("empty monomial (stray '+')")
        if term == "1":
            raise AnfParseError("constant term not allowed in a filter")
        taps = []
        for tok in term.split("*"):
            m = _TAP_RE.match(tok)
            if not m:
                raise AnfParseError(f"bad tap {tok!r}, expected x<index>")
            taps.append(int(m.group(1)))
        if len(set(taps)) != len(taps):
            raise AnfParseError(f"duplicate tap in monomial {term!r}")
        for t in taps:
            if t >= L:
                raise AnfParseError(f"tap x{t} out of range for L={L}")
        mono = tuple(sorted(taps))
        if mono in monomials:
            raise AnfParseError(f"duplicate monomial {term!r}")
        monomials.append(mono)
    return FilterFunction(L, frozenset(monomials))


def format_anf(f: FilterFunction) -> str:
    """Canonical text form: taps ascending, monomials by (size, taps)."""
    return " + ".join("*".join(f"x{t}" for t in mono) for mono in f.sorted_monomials())


def filter_to_monomial_lists(f: FilterFunction) -> list[list[int]]:
    """JSON-friendly form: a list of integer tap lists."""
    return [list(m) for m in f.sorted_monomials()]


def filter_from_monomial_lists(L: int, monomials: Iterable[Iterable[int]]) -> FilterFunction:
    return FilterFunction(L, frozenset(tuple(sorted(m)) for m in monomials))
