"""Exact and high-precision evaluation of the max-complexity probability.

For an order-k filter over L stages, the chance that a uniform draw from
the filter space reaches the complexity ceiling nk(L, k) is

    pr = nfm / nfk = prod over weight-<=k cosets of (1 - 2^-cardinal)
                     / (1 - 2^-C(L,k)),

where nfm multiplies (2^cardinal - 1) over those cosets and nfk counts the
order-k filters.  Small parameters get exact big-integer arithmetic; large
ones are evaluated in the log domain at a caller-chosen decimal precision
(>= 50 digits by default), using coset cardinal counts that never require
enumerating the cosets themselves.

Two comparison values accompany the probability.  The product form
prod (1 - 2^-cardinal) is a rigorous lower bound (dropping the positive
1/(1 - 2^-C(L,k)) correction only shrinks the value).  The closed forms
bound_general = exp(-nk/(2^L * L)) and bound_asymptotic = exp(-1/(2L)) are
asymptotic approximations of that product: beware that exp(-x) > 1 - x
makes them slightly OVERSHOOT the exact probability for most parameters,
so they indicate proximity to 1 but do not bound pr from below.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from mpmath import mp, mpf

from .anf import count_filters
from .cosets import cardinal_counts, nk

# Exact big-integer mode while log2(nfk) stays within this many bits.
EXACT_NK_BIT_CAP = 1 << 20

_GUARD_DIGITS = 10


def _ln_one_minus_pow2(d: int) -> mpf:
    """ln(1 - 2^-d) at the current working precision, for any d >= 1.

    Exact-rounded log for moderate d; for huge d the power series collapses
    to -2^-d, which mpmath can still represent thanks to bignum exponents.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    if d <= mp.prec - 2:
        return mp.log(1 - mp.ldexp(1, -d))
    total = mpf(0)
    j = 1
    while j * d <= mp.prec + 10 or j == 1:
        total -= mp.ldexp(1, -j * d) / j
        j += 1
    return total


def nfm(L: int, k: int) -> int:
    """Exact count of order-k filters reaching linear complexity nk(L, k).

    Product of (2^cardinal - 1) over the weight-<=k cosets.  Only available
    while the numbers fit the exact-mode budget; pr_report handles the rest
    in the log domain.
    """
    if nk(L, k) > EXACT_NK_BIT_CAP:
        raise ValueError(
            f"nfm(L={L}, k={k}) needs about 2^{nk(L, k)} bits; "
            "use pr_report's log-domain mode instead")
    out = 1
    for d, count in cardinal_counts(L, k).items():
        out *= ((1 << d) - 1) ** count
    return out


def pr_exact(L: int, k: int) -> Fraction:
    """nfm/nfk in lowest terms; exact-mode parameters only."""
    return Fraction(nfm(L, k), count_filters(L, k))


def ln_probability_parts(L: int, k: int, digits: int = 50) -> tuple[mpf, mpf]:
    """ln pr split as (coset product term, filter-space correction).

    The first part is ln of the rigorous product bound; the second,
    -ln(1 - 2^-C(L,k)), is strictly positive, so their sum ln pr always
    exceeds the first part even when the gap is far below the working
    precision of a direct subtraction.
    """
    with mp.workdps(digits + _GUARD_DIGITS):
        product_term = mpf(0)
        for d, count in cardinal_counts(L, k).items():
            product_term += mpf(count) * _ln_one_minus_pow2(d)
        correction = -_ln_one_minus_pow2(comb(L, k))
    return product_term, correction


@dataclass
class LikelihoodReport:
    """Exact counts where feasible, log-domain decimals always.

    pr_float and ln_pr carry `digits` significant decimal digits; nfm, nfk
    and pr_exact are None in log-domain mode, where they would not fit in
    memory.  bound_general and bound_asymptotic are the exponential
    approximations described in the module docstring, reported for
    comparison rather than as guarantees.
    """

    L: int
    k: int
    n_cosets: int
    nk_value: int
    nfm: int | None
    nfk: int | None
    pr_exact: Fraction | None
    pr_float: mpf
    ln_pr: mpf
    bound_general: mpf
    bound_asymptotic: mpf | None
    mode: str
    digits: int


def pr_report(L: int, k: int, digits: int = 50,
              include_asymptotic: bool | None = None) -> LikelihoodReport:
    """Evaluate the probability and its companion quantities.

    include_asymptotic=None reports exp(-1/(2L)) exactly when k is L/2
    rounded either way (the regime where nk(L,k) is about 2^(L-1));
    True/False forces the choice.
    """
    nk_value = nk(L, k)
    counts = cardinal_counts(L, k)
    if sum(d * c for d, c in counts.items()) != nk_value:
        raise AssertionError("coset cardinals do not cover the binomial sum")
    n_cosets = sum(counts.values())
    exact = nk_value <= EXACT_NK_BIT_CAP

    product_term, correction = ln_probability_parts(L, k, digits)
    with mp.workdps(digits + _GUARD_DIGITS):
        ln_pr = product_term + correction
        pr_float = mp.exp(ln_pr)
        bound_general = mp.exp(-mpf(nk_value) / (mp.ldexp(1, L) * L))
        asym = None
        if include_asymptotic or (include_asymptotic is None and k in (L // 2, (L + 1) // 2)):
            asym = mp.exp(mpf(-1) / (2 * L))

        if exact:
            m = nfm(L, k)
            f = count_filters(L, k)
            ratio = Fraction(m, f)
            pr_from_ints = mpf(ratio.numerator) / mpf(ratio.denominator)
            if abs(pr_from_ints - pr_float) > mp.ldexp(abs(pr_from_ints), -mp.prec + 12):
                raise AssertionError("exact and log-domain evaluations disagree")
            pr_float = pr_from_ints
            report = LikelihoodReport(L, k, n_cosets, nk_value, m, f, ratio,
                                      pr_float, ln_pr, bound_general, asym,
                                      "exact", digits)
        else:
            report = LikelihoodReport(L, k, n_cosets, nk_value, None, None, None,
                                      pr_float, ln_pr, bound_general, asym,
                                      "log-domain", digits)
    if report.pr_exact is not None and not 0 < report.pr_exact <= 1:
        raise AssertionError("probability out of (0, 1]")
    return report
