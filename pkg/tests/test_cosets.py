from math import comb

import pytest

from filtropt import (cardinal_counts, coset_of, coset_period, cosets_up_to_weight,
                      nk)
from filtropt.cosets import constant_coset, coset_count


def test_coset_of_examples():
    c = coset_of(1, 5)
    assert c.elements == (1, 2, 4, 8, 16)
    assert c.cardinal == 5 and c.weight == 1
    c = coset_of(5, 4)
    assert set(c.elements) == {5, 10}
    assert c.cardinal == 2 and c.weight == 2
    assert coset_of(6, 5) == coset_of(3, 5)
    assert coset_of(6, 5).leader == 3


def test_coset_of_range_errors():
    with pytest.raises(ValueError):
        coset_of(0, 4)
    with pytest.raises(ValueError):
        coset_of(15, 4)


def test_cosets_up_to_weight_examples():
    assert [c.leader for c in cosets_up_to_weight(5, 2)] == [1, 3, 5]
    assert [c.leader for c in cosets_up_to_weight(3, 2)] == [1, 3]
    l4 = cosets_up_to_weight(4, 2)
    assert [c.leader for c in l4] == [1, 3, 5]
    assert [c.cardinal for c in l4] == [4, 4, 2]
    with pytest.raises(ValueError):
        cosets_up_to_weight(4, 0)


def test_constant_coset_only_at_full_weight():
    full = cosets_up_to_weight(4, 4)
    assert full[-1] == constant_coset(4)
    assert all(c.leader != 15 for c in cosets_up_to_weight(4, 3))
    assert coset_period(constant_coset(4), 4) == 1


def test_nk_examples():
    assert nk(5, 2) == 15
    assert nk(3, 2) == 6
    for L in (3, 4, 7):
        assert nk(L, L) == (1 << L) - 1
    with pytest.raises(ValueError):
        nk(5, 6)


def test_coset_period_examples():
    for L in (3, 4, 6):
        assert coset_period(coset_of(1, L), L) == (1 << L) - 1
    assert coset_period(coset_of(5, 4), 4) == 3
    for c in cosets_up_to_weight(6, 6):
        assert ((1 << 6) - 1) % coset_period(c, 6) == 0


@pytest.mark.parametrize("L", [3, 5, 7, 11, 13])
def test_prime_length_cardinals(L):
    cs = cosets_up_to_weight(L, L - 1)  # leave out the weight-L constant coset
    assert all(c.cardinal == L for c in cs)
    for k in range(1, L):
        assert nk(L, k) % L == 0
        assert len(cosets_up_to_weight(L, k)) == nk(L, k) // L


@pytest.mark.parametrize("L", range(2, 17))
def test_weight_classes_cover_binomials(L):
    per_weight = {}
    for c in cosets_up_to_weight(L, L):
        per_weight[c.weight] = per_weight.get(c.weight, 0) + c.cardinal
    for w in range(1, L + 1):
        assert per_weight.get(w, 0) == comb(L, w)


@pytest.mark.parametrize("L", range(2, 17))
def test_cosets_partition_exponent_range(L):
    n = (1 << L) - 1
    seen = []
    for c in cosets_up_to_weight(L, L - 1):
        seen.extend(c.elements)
    assert sorted(seen) == list(range(1, n))


@pytest.mark.parametrize("L", range(2, 17))
def test_cardinal_counts_match_enumeration(L):
    for k in {1, 2, L // 2, L - 1, L}:
        if k < 1:
            continue
        enumerated = {}
        for c in cosets_up_to_weight(L, k):
            enumerated[c.cardinal] = enumerated.get(c.cardinal, 0) + 1
        assert cardinal_counts(L, k) == enumerated
        assert coset_count(L, k) == len(cosets_up_to_weight(L, k))


def test_cardinal_counts_large_prime_length():
    counts = cardinal_counts(257, 128)
    assert set(counts) == {257}
    assert counts[257] == (2**256 - 1) // 257
    assert sum(d * c for d, c in counts.items()) == nk(257, 128)


def test_cardinal_counts_large_composite_length():
    # L = 24: orbit sizes must divide 24 and cover all binomials up to weight 3
    counts = cardinal_counts(24, 3)
    assert sum(d * c for d, c in counts.items()) == nk(24, 3)
    assert all(24 % d == 0 for d in counts)


def test_enumeration_cap():
    with pytest.raises(ValueError, match="capped"):
        cosets_up_to_weight(24, 3)
