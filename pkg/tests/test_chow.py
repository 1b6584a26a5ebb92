"""Tests for the truncated intersection ring."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parchern.chow import GradedClass, IntersectionModel, eab_factor, integrate_exp

F = Fraction


def test_normalize_drops_zeros_truncation_and_relations():
    m = IntersectionModel(2, truncation_degree=2, relations=[{"D1": 1, "D2": 1}])
    x = m.from_terms({
        m.monomial({"D1": 1}): F(0),          # zero coefficient
        m.monomial({"D1": 3}): F(1),          # degree 3 > 2
        m.monomial({"D1": 1, "D2": 1}): F(5),  # killed by relation
        m.monomial({"D2": 2}): F(1, 2),
    })
    assert x.terms == {m.monomial({"D2": 2}): F(1, 2)}


def test_relation_divisibility_is_upward_closed():
    m = IntersectionModel(2, truncation_degree=4, relations=[{"D1": 1, "D2": 1}])
    assert (m.divisor(0) ** 2 * m.divisor(1)).is_zero()
    assert not (m.divisor(0) ** 2).is_zero()


def test_relation_minimality_and_bad_relations():
    m = IntersectionModel(2, truncation_degree=3,
                          relations=[{"D1": 1, "D2": 1}, {"D1": 2, "D2": 1}])
    assert m.relations == (m.monomial({"D1": 1, "D2": 1}),)
    with pytest.raises(ValueError):
        IntersectionModel(1, relations=[{}])


def test_exp_of_divisor_matches_truncated_series():
    m = IntersectionModel(1, truncation_degree=3)
    D = m.divisor(0)
    assert D.exp() == 1 + D + D * D / 2 + D * D * D / 6


def test_exp_requires_nilpotent():
    m = IntersectionModel(1)
    with pytest.raises(ValueError):
        (m.one() + m.divisor(0)).exp()


def test_inverse_of_one_minus_divisor_is_geometric_series():
    m = IntersectionModel(1, truncation_degree=4)
    D = m.divisor(0)
    inv = (1 - D).inverse()
    assert inv == sum((D ** k for k in range(5)), m.zero())
    assert (1 - D) * inv == m.one()


def test_inverse_requires_unit():
    m = IntersectionModel(1)
    with pytest.raises(ValueError):
        m.divisor(0).inverse()


def test_integrate_exp_frozen_values_degree_two():
    m = IntersectionModel(1, truncation_degree=2)
    D = m.divisor(0)
    assert integrate_exp(m, 0, 1, 0) == 1 - D / 2 + D * D / 6
    assert integrate_exp(m, -1, 0, 0) == 1 + D / 2 + D * D / 6


def test_eab_factor_values_and_identity():
    m = IntersectionModel(1, truncation_degree=5)
    D = m.divisor(0)
    assert eab_factor(m, 1, 0) == integrate_exp(m, 0, 1, 0)
    assert eab_factor(m, 0, 0).is_zero()
    # eab(a) * D == 1 - exp(-aD) for a few rational a
    for a in (F(1), F(1, 2), F(-3, 4), F(2)):
        assert eab_factor(m, a, 0) * D == 1 - (-a * D).exp()


def test_relations_collapse_exp_of_sums():
    m = IntersectionModel(2, truncation_degree=4, relations=[{"D1": 1, "D2": 1}])
    D1, D2 = m.divisor(0), m.divisor(1)
    # no cross terms survive: exp(D1+D2) = exp(D1) + exp(D2) - 1 here
    assert (D1 + D2).exp() == D1.exp() + D2.exp() - 1


def test_canonical_text_and_json_forms():
    m = IntersectionModel(2, truncation_degree=3, extra_classes=["H"])
    D1, D2, H = m.divisor(0), m.divisor(1), m.generator("H")
    x = 1 + D1 / 2 - 3 * H + D1 * D2 + D2 * D2 * F(5, 3)
    assert x.to_text() == "1 + 1/2 * D1 + -3 * H + 1 * D1*D2 + 5/3 * D2^2"
    assert x.terms_json() == {
        "1": "1", "D1": "1/2", "H": "-3", "D1*D2": "1", "D2^2": "5/3",
    }
    assert m.zero().to_text() == "0"


def test_grade_picks_homogeneous_parts():
    m = IntersectionModel(1, truncation_degree=3, extra_classes=["H"])
    D, H = m.divisor(0), m.generator("H")
    x = 2 + D - H + D * H
    assert x.grade(0) == m.constant(2)
    assert x.grade(1) == D - H
    assert x.grade(2) == D * H
    assert x.grade(3).is_zero()


def test_model_mismatch_raises():
    a = IntersectionModel(1, truncation_degree=2)
    b = IntersectionModel(1, truncation_degree=3)
    with pytest.raises(ValueError):
        a.divisor(0) + b.divisor(0)


def test_divisor_sum():
    m = IntersectionModel(3, truncation_degree=2)
    assert m.divisor_sum() == m.divisor(0) + m.divisor(1) + m.divisor(2)


# -- property tests ---------------------------------------------------------

MODELS = [
    IntersectionModel(1, truncation_degree=3),
    IntersectionModel(2, truncation_degree=4, extra_classes=["H"]),
    IntersectionModel(2, truncation_degree=3, relations=[{"D1": 1, "D2": 1}]),
]

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=6)


@st.composite
def model_and_classes(draw, count=1, nilpotent=False):
    model = draw(st.sampled_from(MODELS))
    width = len(model.generator_names)
    monomials = st.tuples(*[st.integers(0, 2)] * width).filter(
        lambda m: (1 if nilpotent else 0) <= sum(m) <= model.truncation_degree)
    classes = []
    for _ in range(count):
        terms = draw(st.dictionaries(monomials, rationals, max_size=4))
        classes.append(GradedClass(model, terms))
    return (model, *classes)


@given(model_and_classes(count=3))
def test_ring_axioms(data):
    _, x, y, z = data
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(model_and_classes(count=2, nilpotent=True))
def test_exp_turns_sums_into_products(data):
    _, x, y = data
    assert (x + y).exp() == x.exp() * y.exp()


@given(model_and_classes(count=1, nilpotent=True))
@settings(max_examples=50)
def test_inverse_really_inverts(data):
    model, x = data
    u = 1 + x
    assert u * u.inverse() == model.one()


@given(st.lists(rationals, min_size=3, max_size=3))
def test_integrate_exp_is_additive_in_the_interval(bounds):
    a, b, c = sorted(bounds)
    m = IntersectionModel(1, truncation_degree=4)
    lhs = integrate_exp(m, a, b, 0) + integrate_exp(m, b, c, 0)
    assert lhs == integrate_exp(m, a, c, 0)


@given(model_and_classes(count=1))
def test_grades_decompose_the_class(data):
    model, x = data
    total = model.zero()
    for k in range(model.truncation_degree + 1):
        part = x.grade(k)
        assert part.is_homogeneous(k)
        total = total + part
    assert total == x
