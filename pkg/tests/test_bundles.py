"""Tests for the parabolic bundle model and its derived classes."""

from fractions import Fraction

import pytest

from parchern.bundles import (GradedPiece, LineSummand, ParabolicBundle, ch_of_pushforward,
                              ch_vb, ch_vb_sigma, graded_piece, quotient_class, twist_vector)
from parchern.chow import IntersectionModel
from parchern.ladders import Ladder, WeightFunction

F = Fraction


def simple_bundle():
    """n=1, one riser at weight -1/2, single trivial line: the model case."""
    m = IntersectionModel(1)  # d = 4
    w = WeightFunction(Ladder.of_risers(1), (F(-1, 2),))
    return ParabolicBundle(m, (w,), (LineSummand(m.zero(), (0,)),))


def two_divisor_bundle():
    m = IntersectionModel(2, extra_classes=["H"])  # d = 5
    w1 = WeightFunction(Ladder.of_risers(2), (F(-1, 2), F(-1, 4)))
    w2 = WeightFunction(Ladder.of_risers(1), (F(-1, 3),))
    s1 = LineSummand(m.generator("H"), (0, 0))
    s2 = LineSummand(m.divisor(0) - m.generator("H"), (1, 0))
    s3 = LineSummand(m.zero(), (0, 0))
    return ParabolicBundle(m, (w1, w2), (s1, s2, s3))


def test_validation():
    m = IntersectionModel(1)
    w = WeightFunction(Ladder.of_risers(1), (F(-1, 2),))
    with pytest.raises(ValueError):          # c1 not degree one
        LineSummand(m.one(), (0,))
    with pytest.raises(ValueError):          # jump arity
        ParabolicBundle(m, (w,), (LineSummand(m.zero(), (0, 0)),))
    with pytest.raises(ValueError):          # jump out of range
        ParabolicBundle(m, (w,), (LineSummand(m.zero(), (1,)),))
    with pytest.raises(ValueError):          # weight arity
        ParabolicBundle(m, (), (LineSummand(m.zero(), ()),))
    other = IntersectionModel(1, truncation_degree=2)
    with pytest.raises(ValueError):          # model mismatch
        ParabolicBundle(m, (w,), (LineSummand(other.zero(), (0,)),))


def test_ch_vb_sums_line_exponentials():
    b = two_divisor_bundle()
    m = b.model
    expected = (m.generator("H").exp() + (m.divisor(0) - m.generator("H")).exp() + m.one())
    assert ch_vb(b) == expected
    assert ch_vb(b).grade(0) == m.constant(b.rank)


def test_twist_vector_endpoints():
    b = two_divisor_bundle()
    bottom = (0, 0)
    top = (2, 1)
    for j in range(b.rank):
        assert twist_vector(b, bottom, j) == (-1, -1)
        assert twist_vector(b, top, j) == (0, 0)
    # summand 1 jumps at riser 1 on divisor 0: tread 1 sits below that jump
    assert twist_vector(b, (1, 1), 1) == (-1, 0)
    assert twist_vector(b, (1, 1), 0) == (0, 0)


def test_ch_vb_sigma_at_the_ends():
    b = two_divisor_bundle()
    m = b.model
    D = m.divisor_sum()
    assert ch_vb_sigma(b, (2, 1)) == ch_vb(b)
    assert ch_vb_sigma(b, (0, 0)) == ch_vb(b) * (-D).exp()


def test_graded_piece_matching():
    b = two_divisor_bundle()
    m = b.model
    p = graded_piece(b, (0,), (0,))
    assert isinstance(p, GradedPiece)
    assert p.rank == 2                      # summands 0 and 2 jump at riser 0 of divisor 0
    assert p.pushforward_ch == (m.generator("H").exp() + 1) * m.divisor(0)
    p2 = graded_piece(b, (0, 1), (1, 0))
    assert p2.rank == 1                     # only summand 1
    assert p2.pushforward_ch == (m.divisor(0) - m.generator("H")).exp() * m.divisor(0) * m.divisor(1)
    # ranks over the full riser grid partition the total rank
    for support in b.supports():
        total = sum(graded_piece(b, support, lam).rank for lam in b.riser_grid(support))
        assert total == b.rank


def test_ch_of_pushforward_applies_structure_sheaf_factors():
    b = simple_bundle()
    m = b.model
    D = m.divisor(0)
    # single trivial summand: pushforward is [D], corrected to 1 - exp(-D)
    assert ch_of_pushforward(b, (0,), (0,)) == 1 - (-D).exp()


def test_quotient_class_sums_pieces_above_a_tread():
    b = two_divisor_bundle()
    # above the top tread nothing jumps
    assert quotient_class(b, (0,), (2,)).is_zero()
    assert quotient_class(b, (0, 1), (2, 1)).is_zero()
    # above the bottom tread everything jumps
    everything = sum((ch_of_pushforward(b, (0,), (r,)) for r in range(2)),
                     b.model.zero())
    assert quotient_class(b, (0,), (0,)) == everything
    # strictly above tread 1 on divisor 0: only riser 1 remains
    assert quotient_class(b, (0,), (1,)) == ch_of_pushforward(b, (0,), (1,))
    # and on a pair support the grid sum factors accordingly
    q = quotient_class(b, (0, 1), (1, 0))
    assert q == ch_of_pushforward(b, (0, 1), (1, 0))


def test_empty_bundle_has_zero_classes():
    m = IntersectionModel(1)
    w = WeightFunction(Ladder.of_risers(1), (F(-1, 2),))
    b = ParabolicBundle(m, (w,), ())
    assert b.rank == 0
    assert ch_vb(b).is_zero()
    assert ch_vb_sigma(b, (0,)).is_zero()
    assert quotient_class(b, (0,), (0,)).is_zero()


def test_sigma_grid_and_supports_enumeration():
    b = two_divisor_bundle()
    assert list(b.sigma_grid()) == [(k1, k2) for k1 in range(3) for k2 in range(2)]
    assert list(b.supports()) == [(0,), (1,), (0, 1)]
