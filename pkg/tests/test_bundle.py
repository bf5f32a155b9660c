from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from grasscone import (
    HNBlock,
    HNType,
    RangeError,
    SplitBundle,
    StrongHNData,
    ValidationError,
    dual_split,
    exterior_power_split,
    frobenius_split,
    hn_of_split,
    lambda_char0,
    lambda_strong,
    shift_strong,
    slope,
)
from oracles import brute_max_subset_sum

exponent_lists = st.lists(st.integers(-10, 10), min_size=2, max_size=7)


def hn(*pairs):
    return HNType.from_pairs(pairs)


@pytest.mark.parametrize(
    "exps, blocks",
    [
        ((2, 2, 1), [[2, 4], [1, 1]]),
        ((0, 0, 0), [[3, 0]]),
        ((3, 1, 0), [[1, 3], [1, 1], [1, 0]]),
    ],
)
def test_hn_of_split(exps, blocks):
    assert hn_of_split(SplitBundle(exps)).pairs() == blocks


@pytest.mark.parametrize("rank, degree, expected", [(2, 4, 2), (3, 2, Fraction(2, 3)), (1, -5, -5)])
def test_slope(rank, degree, expected):
    s = slope(HNBlock(rank, degree))
    assert s == expected and isinstance(s, Fraction)


def test_slope_lowest_terms():
    s = slope(HNBlock(4, 6))
    assert (s.numerator, s.denominator) == (3, 2)


@pytest.mark.parametrize(
    "blocks, r, expected",
    [
        ([(2, 3)], 1, Fraction(3, 2)),
        ([(1, 3), (1, 1), (1, 0)], 2, 4),  # brute force over (3,1,0)
        ([(2, 4), (1, 1)], 2, 4),  # brute force over (2,2,1)
    ],
)
def test_lambda_char0(blocks, r, expected):
    assert lambda_char0(hn(*blocks), r) == expected


def test_derived_values_match_oracle():
    assert brute_max_subset_sum((3, 1, 0), 2) == 4
    assert brute_max_subset_sum((2, 2, 1), 2) == 4


@pytest.mark.parametrize("r", [0, 4, -1])
def test_lambda_range(r):
    with pytest.raises(RangeError):
        lambda_char0(hn((1, 3), (1, 1), (1, 0)), r)


@pytest.mark.parametrize(
    "p, delta, blocks, r, expected",
    [
        (2, 1, [(2, 3)], 1, Fraction(3, 4)),
        (5, 0, [(1, 3), (1, 1), (1, 0)], 2, 4),
        (3, 2, [(1, 9), (2, 3)], 2, Fraction(7, 6)),
    ],
)
def test_lambda_strong(p, delta, blocks, r, expected):
    assert lambda_strong(StrongHNData(p, delta, hn(*blocks)), r) == expected


def test_frobenius_split():
    assert frobenius_split(SplitBundle((1, 0)), 2, 1).exponents == (2, 0)
    assert frobenius_split(SplitBundle((3, 1)), 2, 2).exponents == (12, 4)
    e = SplitBundle((5, -2, 7))
    assert frobenius_split(e, 7, 0).exponents == e.exponents


def test_frobenius_rejects_composite():
    with pytest.raises(ValidationError, match="prime"):
        frobenius_split(SplitBundle((1, 0)), 4, 1)


def test_shift_strong():
    d = StrongHNData(2, 1, hn((2, 3)))
    assert shift_strong(d, 1) == StrongHNData(2, 2, hn((2, 6)))
    d = StrongHNData(3, 0, hn((1, 3), (1, 1)))
    assert shift_strong(d, 2) == StrongHNData(3, 2, hn((1, 27), (1, 9)))
    assert shift_strong(d, 0) == d


def test_dual_split():
    assert dual_split(SplitBundle((3, 1, 0))).exponents == (-3, -1, 0)
    assert dual_split(SplitBundle((0, 0))).exponents == (0, 0)
    assert dual_split(SplitBundle((-2, 5))).exponents == (2, -5)


def test_exterior_power_split():
    assert sorted(exterior_power_split(SplitBundle((2, 1, 0)), 2).exponents) == [1, 2, 3]
    assert exterior_power_split(SplitBundle((-4,)), 1).exponents == (-4,)
    assert exterior_power_split(SplitBundle((1, 1)), 2).exponents == (2,)
    with pytest.raises(RangeError):
        exterior_power_split(SplitBundle((1, 1)), 3)


def test_hn_rejects_non_decreasing_slopes():
    with pytest.raises(ValidationError) as exc:
        hn((1, 1), (1, 3))
    assert exc.value.field == "blocks[1]"
    with pytest.raises(ValidationError):
        hn((1, 2), (2, 4))  # equal slopes


def test_strong_rejects_composite_characteristic():
    with pytest.raises(ValidationError, match="prime"):
        StrongHNData(6, 0, hn((2, 3)))
    with pytest.raises(ValidationError, match="delta"):
        StrongHNData(2, -1, hn((2, 3)))


def test_split_multiset_equality():
    assert SplitBundle((1, 3, 0)) == SplitBundle((3, 0, 1))
    assert SplitBundle((1, 3, 0)).exponents == (1, 3, 0)  # stored as given
    assert SplitBundle((1, 3, 0)).canonical() == (3, 1, 0)


@given(exponent_lists)
def test_hn_of_split_invariants(exps):
    h = hn_of_split(SplitBundle(tuple(exps)))
    slopes = [b.slope for b in h.blocks]
    assert all(a > b for a, b in zip(slopes, slopes[1:]))
    assert h.rank == len(exps) and h.degree == sum(exps)


@given(exponent_lists, st.data())
def test_oracle_equivalence(exps, data):
    r = data.draw(st.integers(1, len(exps)))
    assert lambda_char0(hn_of_split(SplitBundle(tuple(exps))), r) == brute_max_subset_sum(exps, r)


@given(exponent_lists)
def test_concavity_and_endpoint(exps):
    h = hn_of_split(SplitBundle(tuple(exps)))
    lam = [lambda_char0(h, r) for r in range(1, h.rank + 1)]
    steps = [b - a for a, b in zip(lam, lam[1:])]
    assert all(s >= t for s, t in zip(steps, steps[1:]))
    assert lam[-1] == sum(exps)


@given(exponent_lists, st.sampled_from([2, 3, 5]), st.integers(0, 2), st.data())
def test_frobenius_scaling(exps, p, j, data):
    e = SplitBundle(tuple(exps))
    r = data.draw(st.integers(1, e.rank))
    pulled = lambda_char0(hn_of_split(frobenius_split(e, p, j)), r)
    assert pulled == p**j * lambda_char0(hn_of_split(e), r)


@given(exponent_lists, st.data())
def test_duality(exps, data):
    e = SplitBundle(tuple(exps))
    r = data.draw(st.integers(1, e.rank - 1))
    lhs = lambda_char0(hn_of_split(e), r)
    rhs = lambda_char0(hn_of_split(dual_split(e)), e.rank - r) + e.degree
    assert lhs == rhs


@given(exponent_lists, st.data())
def test_wedge_max_is_lambda(exps, data):
    e = SplitBundle(tuple(exps))
    r = data.draw(st.integers(1, e.rank))
    assert max(exterior_power_split(e, r).exponents) == lambda_char0(hn_of_split(e), r)


@st.composite
def strong_data(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    delta = draw(st.integers(0, 3))
    pairs = draw(st.lists(st.tuples(st.integers(1, 3), st.integers(-12, 12)), min_size=1, max_size=4))
    by_slope = {}
    for k, d in pairs:
        by_slope.setdefault(Fraction(d, k), (k, d))
    blocks = sorted(by_slope.values(), key=lambda b: Fraction(b[1], b[0]), reverse=True)
    if sum(k for k, _ in blocks) < 2:
        blocks.append((1, min(Fraction(d, k) for k, d in blocks).__floor__() - 1))
    return StrongHNData(p, delta, HNType.from_pairs(blocks))


@given(strong_data(), st.integers(0, 3), st.data())
def test_delta_invariance(d, j, data):
    r = data.draw(st.integers(1, d.hn.rank))
    assert lambda_strong(shift_strong(d, j), r) == lambda_strong(d, r)


@given(strong_data())
def test_strong_endpoint(d):
    assert lambda_strong(d, d.hn.rank) == Fraction(d.hn.degree, d.characteristic**d.delta)
