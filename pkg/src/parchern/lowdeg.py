"""Closed forms for the parabolic Chern character in degrees 0..3.

These are the hand-expanded polynomial formulas for ch_0 .. ch_3 of a
weighted sum of line summands, written directly in terms of per-divisor
jump data: for each divisor i and riser
r, the weight a = alpha_i(r), the rank of the jump piece, and the
pushforwards of its Chern classes ((xi)_* c_1 = S_1 . [D_i] by the
projection formula with S_1 the sum of the matching summands' first
Chern classes, (xi)_* c_1^2 = S_1^2 . [D_i], and (xi)_* c_2 = e_2 .
[D_i] with e_2 the second elementary symmetric function of the matching
c_1's).  Pair and triple terms use the analogous data on intersections
of two or three divisors, each intersection contributing the single
class [D_p] = prod [D_i].

They provide an evaluation route entirely independent of the
exponential-integral machinery, so exact agreement in degrees <= 3 is a
strong cross-check of both.  Degree 2 comes in two equivalent shapes --
a sum over unordered pairs of divisors, and the symmetrized half-sum
over ordered pairs -- and both are implemented verbatim so their
equality can be asserted rather than assumed.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .bundles import ParabolicBundle, ch_vb
from .chow import GradedClass

F = Fraction


def _single_data(bundle: ParabolicBundle, i: int):
    """Per riser r of divisor i: (weight, rank, S1, e2) of the jump piece."""
    for r in bundle.ladder(i).riser_range():
        c1s = [s.c1 for s in bundle.summands if s.jumps[i] == r]
        s1 = bundle.model.zero()
        e2 = bundle.model.zero()
        for k, c in enumerate(c1s):
            s1 = s1 + c
            for c_later in c1s[k + 1:]:
                e2 = e2 + c * c_later
        yield bundle.weights[i].alpha(r), len(c1s), s1, e2


def _pair_data(bundle: ParabolicBundle, i1: int, i2: int):
    """Per riser pair (r1, r2) on divisors (i1, i2): (a1, a2, rank, S1)."""
    for r1 in bundle.ladder(i1).riser_range():
        for r2 in bundle.ladder(i2).riser_range():
            c1s = [s.c1 for s in bundle.summands
                   if s.jumps[i1] == r1 and s.jumps[i2] == r2]
            s1 = bundle.model.zero()
            for c in c1s:
                s1 = s1 + c
            yield (bundle.weights[i1].alpha(r1), bundle.weights[i2].alpha(r2),
                   len(c1s), s1)


def ch0(bundle: ParabolicBundle) -> GradedClass:
    """rank(E) . [X]"""
    return bundle.model.constant(bundle.rank)


def ch1(bundle: ParabolicBundle) -> GradedClass:
    """ch_1 of the underlying bundle minus the weighted rank of each jump."""
    total = ch_vb(bundle).grade(1)
    for i in range(bundle.num_divisors):
        di = bundle.model.divisor(i)
        for a, rank, _s1, _e2 in _single_data(bundle, i):
            total = total + (-a * rank) * di
    return total


def ch2(bundle: ParabolicBundle) -> GradedClass:
    """Degree-2 closed form, with the cross term over unordered pairs."""
    total = ch_vb(bundle).grade(2)
    for i in range(bundle.num_divisors):
        di = bundle.model.divisor(i)
        for a, rank, s1, _e2 in _single_data(bundle, i):
            total = total - a * (s1 * di)
            total = total + F(1, 2) * a * a * rank * (di * di)
    for i1, i2 in itertools.combinations(range(bundle.num_divisors), 2):
        dp = bundle.model.divisor(i1) * bundle.model.divisor(i2)
        for a1, a2, rank, _s1 in _pair_data(bundle, i1, i2):
            total = total + a1 * a2 * rank * dp
    return total


def ch2_symmetrized(bundle: ParabolicBundle) -> GradedClass:
    """Degree-2 closed form with the cross term as a half-sum over ordered
    pairs of distinct divisors; must agree with ch2 exactly."""
    total = ch_vb(bundle).grade(2)
    for i in range(bundle.num_divisors):
        di = bundle.model.divisor(i)
        for a, rank, s1, _e2 in _single_data(bundle, i):
            total = total - a * (s1 * di)
            total = total + F(1, 2) * a * a * rank * (di * di)
    for i1 in range(bundle.num_divisors):
        for i2 in range(bundle.num_divisors):
            if i1 == i2:
                continue
            dp = bundle.model.divisor(i1) * bundle.model.divisor(i2)
            for a1, a2, rank, _s1 in _pair_data(bundle, i1, i2):
                total = total + F(1, 2) * a1 * a2 * rank * dp
    return total


def ch3(bundle: ParabolicBundle) -> GradedClass:
    """Degree-3 closed form: single-divisor, pair and triple contributions."""
    m = bundle.model
    d_total = m.divisor_sum()
    total = ch_vb(bundle).grade(3)

    for i in range(bundle.num_divisors):
        di = m.divisor(i)
        for a, rank, s1, e2 in _single_data(bundle, i):
            xi_c1 = s1 * di
            total = total + F(-1, 2) * a * rank * (di * d_total * d_total)
            total = total + F(1, 2) * (a * a + 2 * a) * (xi_c1 * di)
            total = total + F(-1, 6) * (a ** 3 + 3 * a * a + 3 * a) * rank * (di * di * di)
            total = total - a * (xi_c1 * d_total)
            total = total + F(1, 2) * (a * a + 2 * a) * rank * (di * di * d_total)
            total = total + F(-1, 2) * a * (s1 * s1 * di)
            total = total + a * (e2 * di)

    for i1, i2 in itertools.combinations(range(bundle.num_divisors), 2):
        d1, d2 = m.divisor(i1), m.divisor(i2)
        dp = d1 * d2
        for a1, a2, rank, s1 in _pair_data(bundle, i1, i2):
            total = total + F(-1, 2) * (a2 * a2 * a1 + 2 * a1 * a2 + a1
                                        + a2 * a2 + 2 * a2) * rank * (d2 * dp)
            total = total + F(-1, 2) * (a1 * a1 * a2 + 2 * a1 * a2 + a2
                                        + a1 * a1 + 2 * a1) * rank * (d1 * dp)
            total = total + (a1 * a2 + a1 + a2) * rank * (d_total * dp)
            total = total + (a1 * a2 + a1 + a2) * (s1 * dp)

    for i1, i2, i3 in itertools.combinations(range(bundle.num_divisors), 3):
        dp = m.divisor(i1) * m.divisor(i2) * m.divisor(i3)
        for r1 in bundle.ladder(i1).riser_range():
            for r2 in bundle.ladder(i2).riser_range():
                for r3 in bundle.ladder(i3).riser_range():
                    rank = sum(1 for s in bundle.summands
                               if (s.jumps[i1], s.jumps[i2], s.jumps[i3]) == (r1, r2, r3))
                    if not rank:
                        continue
                    a1 = bundle.weights[i1].alpha(r1)
                    a2 = bundle.weights[i2].alpha(r2)
                    a3 = bundle.weights[i3].alpha(r3)
                    coef = (a1 * a2 * a3 + a1 * a2 + a2 * a3 + a1 * a3
                            + a1 + a2 + a3)
                    total = total - coef * rank * dp
    return total


def low_degree(bundle: ParabolicBundle) -> dict[int, GradedClass]:
    """The closed forms for every degree visible under the truncation,
    i.e. degrees 0..min(3, d)."""
    forms = (ch0, ch1, ch2, ch3)
    top = min(3, bundle.model.truncation_degree)
    return {k: forms[k](bundle) for k in range(top + 1)}
