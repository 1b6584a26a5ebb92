"""Tests for ladder combinatorics and weight functions."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parchern.ladders import ExtendedIndex, Ladder, UndefinedRiserError, WeightFunction

F = Fraction


def test_counts_and_validation():
    lad = Ladder.of_risers(2)
    assert lad.num_treads == 3 and lad.num_risers == 2
    assert lad.top == 2 and lad.bottom == 0
    with pytest.raises(ValueError):
        Ladder(("only",))
    with pytest.raises(ValueError):
        Ladder(("a", "a"))


def test_tread_and_riser_functions_round_trip():
    lad = Ladder.of_risers(3)
    for r in lad.riser_range():
        assert lad.m_minus(r) == r and lad.m_plus(r) == r + 1
        assert lad.c_plus(lad.m_minus(r)) == r
        assert lad.c_minus(lad.m_plus(r)) == r
    for k in lad.tread_range():
        if k != lad.top:
            assert lad.m_minus(lad.c_plus(k)) == k
        if k != lad.bottom:
            assert lad.m_plus(lad.c_minus(k)) == k


def test_riser_functions_fail_loudly_at_the_ends():
    lad = Ladder.of_risers(2)
    with pytest.raises(UndefinedRiserError):
        lad.c_plus(lad.top)
    with pytest.raises(UndefinedRiserError):
        lad.c_minus(lad.bottom)
    with pytest.raises(IndexError):
        lad.m_plus(2)
    with pytest.raises(IndexError):
        lad.c_plus(5)


def test_interleaved_order():
    lad = Ladder.of_risers(2)
    # t0 < r0 < t1 < r1 < t2
    assert lad.tread_below_riser(0, 0)
    assert lad.riser_below_tread(0, 1)
    assert not lad.riser_below_tread(1, 1)
    assert not lad.tread_below_riser(2, 1)


def test_extended_indices_glue_levels():
    lad = Ladder.of_risers(2)
    assert lad.extended(0, lad.top) == ExtendedIndex(1, 0)
    assert lad.extended(0, 1) == ExtendedIndex(0, 1)
    # the riser above the top tread is the first riser of the next level
    assert lad.extended_c_plus(ExtendedIndex(0, lad.top)) == (1, 0)
    assert lad.extended_c_plus(ExtendedIndex(0, 0)) == (0, 0)
    # total order matches the gluing
    key = lad.extended_key
    assert key(ExtendedIndex(0, lad.top)) == key(ExtendedIndex(1, 0))
    assert key(ExtendedIndex(0, 1)) < key(ExtendedIndex(1, 1))


def test_weight_validation():
    lad = Ladder.of_risers(2)
    WeightFunction(lad, (F(-1, 2), F(0)))        # fine, including a 0 weight
    with pytest.raises(ValueError):
        WeightFunction(lad, (F(-1), F(0)))       # -1 excluded
    with pytest.raises(ValueError):
        WeightFunction(lad, (F(0), F(-1, 2)))    # decreasing
    with pytest.raises(ValueError):
        WeightFunction(lad, (F(-1, 2),))         # wrong arity


def test_dom_bounds_two_tread_example():
    lad = Ladder.of_risers(1)
    w = WeightFunction(lad, (F(-1, 2),))
    assert w.dom_bounds(0) == (F(0), F(1, 2))
    assert w.dom_bounds(1) == (F(1, 2), F(1))
    assert w.alpha_minus(0) == -1 and w.alpha_plus(lad.top) == 0


def test_extended_weight_adds_levels():
    lad = Ladder.of_risers(1)
    w = WeightFunction(lad, (F(-1, 4),))
    assert w.extended_weight(0, 0) == F(-1, 4)
    assert w.extended_weight(2, 0) == F(7, 4)


weight_lists = st.lists(
    st.fractions(min_value=F(-11, 12), max_value=0, max_denominator=12),
    min_size=1, max_size=4,
).map(lambda ws: tuple(sorted(ws)))


@given(weight_lists)
def test_dom_intervals_partition_the_unit_interval(ws):
    lad = Ladder.of_risers(len(ws))
    w = WeightFunction(lad, ws)
    bounds = [w.dom_bounds(k) for k in lad.tread_range()]
    assert bounds[0][0] == 0 and bounds[-1][1] == 1
    for (_, hi), (lo, _) in zip(bounds, bounds[1:]):
        assert hi == lo
    assert sum(hi - lo for lo, hi in bounds) == 1
    # ties produce empty intervals but never negative ones
    assert all(hi >= lo for lo, hi in bounds)
