"""Tests for reading and writing bundle descriptions."""

import json
from fractions import Fraction

import pytest

from parchern.engine import ch_par_integral
from parchern.oracle import random_instance
from parchern.serialize import (BadRiserIndexError, BundleSpecError, MalformedDocumentError,
                                MalformedRationalError, SpecShapeError, UnknownGeneratorError,
                                WeightOrderError, WeightRangeError, bundle_from_dict,
                                bundle_from_json, bundle_from_toml, bundle_to_dict,
                                load_bundle, parse_rational)

F = Fraction

MINIMAL = {
    "divisors": 1,
    "ladders": [["-1/2"]],
    "summands": [{"c1": {}, "jumps": [0]}],
}


def full_doc():
    return {
        "divisors": 2,
        "truncation_degree": 4,
        "extra_classes": ["H"],
        "relations": ["D1*D2"],
        "ladders": [["-1/2", "-1/4"], ["-2/3"]],
        "summands": [
            {"c1": {"H": "2", "D1": "-1/3"}, "jumps": [1, 0]},
            {"c1": {}, "jumps": [0, 0]},
        ],
    }


def test_minimal_document():
    b = bundle_from_dict(MINIMAL)
    assert b.rank == 1
    assert b.num_divisors == 1
    assert b.model.truncation_degree == 4          # defaults to n + 3
    assert b.weights[0].weights == (F(-1, 2),)
    # the model case: ch^Par = exp(D/2)
    assert ch_par_integral(b) == (b.model.divisor(0) / 2).exp()


def test_full_document():
    b = bundle_from_dict(full_doc())
    m = b.model
    assert m.extra_classes == ("H",)
    assert m.relations == (m.monomial({"D1": 1, "D2": 1}),)
    assert b.summands[0].c1 == 2 * m.generator("H") - m.divisor(0) / 3
    assert b.summands[0].jumps == (1, 0)
    assert b.weights[1].weights == (F(-2, 3),)


def test_json_and_toml_agree():
    as_json = bundle_from_json(json.dumps(MINIMAL))
    as_toml = bundle_from_toml(
        'divisors = 1\nladders = [["-1/2"]]\n'
        '[[summands]]\nc1 = {}\njumps = [0]\n')
    assert as_json == as_toml


def test_load_bundle_dispatches_on_extension(tmp_path):
    jpath = tmp_path / "b.json"
    jpath.write_text(json.dumps(MINIMAL))
    tpath = tmp_path / "b.toml"
    tpath.write_text('divisors = 1\nladders = [["-1/2"]]\n'
                     '[[summands]]\nc1 = {}\njumps = [0]\n')
    assert load_bundle(str(jpath)) == load_bundle(str(tpath))


def test_round_trip_through_dict():
    for seed in range(8):
        b = random_instance(seed)
        assert bundle_from_dict(bundle_to_dict(b)) == b


def test_parse_rational():
    assert parse_rational("-1/2", "x") == F(-1, 2)
    assert parse_rational("0/1", "x") == 0
    assert parse_rational(" 3 / 6 ", "x") == F(1, 2)
    assert parse_rational(7, "x") == 7
    for bad in ("1/0", "1/-2", "0.5", "", "a/b", 0.5, True, None, [1]):
        with pytest.raises(MalformedRationalError):
            parse_rational(bad, "x")


def test_malformed_document():
    with pytest.raises(MalformedDocumentError, match="JSON"):
        bundle_from_json("{not json")
    with pytest.raises(MalformedDocumentError, match="TOML"):
        bundle_from_toml("= broken =")


def diverge(**changes):
    doc = dict(MINIMAL)
    doc.update(changes)
    return doc


def test_shape_errors_name_the_field():
    with pytest.raises(SpecShapeError, match="divisors"):
        bundle_from_dict(diverge(divisors=None))
    with pytest.raises(SpecShapeError, match="missing"):
        bundle_from_dict({"divisors": 1, "ladders": [["-1/2"]]})
    with pytest.raises(SpecShapeError, match="unknown fields"):
        bundle_from_dict(diverge(weights=[]))
    with pytest.raises(SpecShapeError, match=r"ladders"):
        bundle_from_dict(diverge(ladders=[["-1/2"], ["-1/2"]]))
    with pytest.raises(SpecShapeError, match=r"jumps"):
        bundle_from_dict(diverge(summands=[{"c1": {}, "jumps": [0, 0]}]))
    with pytest.raises(SpecShapeError, match=r"jumps\[0\]"):
        bundle_from_dict(diverge(summands=[{"c1": {}, "jumps": [True]}]))
    with pytest.raises(SpecShapeError, match="truncation_degree"):
        bundle_from_dict(diverge(truncation_degree=-1))
    with pytest.raises(SpecShapeError, match="extra_classes"):
        bundle_from_dict(diverge(extra_classes=["D7"]))
    with pytest.raises(SpecShapeError, match="top level"):
        bundle_from_dict([1, 2, 3])


def test_weight_range_error_positions():
    # -1 itself is excluded; 0 is allowed
    with pytest.raises(WeightRangeError, match=r"ladders\[0\]\[0\]"):
        bundle_from_dict(diverge(ladders=[["-1/1"]]))
    with pytest.raises(WeightRangeError, match=r"outside"):
        bundle_from_dict(diverge(ladders=[["1/2"]]))
    assert bundle_from_dict(diverge(ladders=[["0/1"]])).weights[0].weights == (F(0),)


def test_weight_order_error():
    with pytest.raises(WeightOrderError, match=r"ladders\[0\]\[1\]"):
        bundle_from_dict(diverge(ladders=[["-1/3", "-1/2"]]))


def test_bad_riser_index():
    with pytest.raises(BadRiserIndexError, match=r"summands\[0\].jumps\[0\]"):
        bundle_from_dict(diverge(summands=[{"c1": {}, "jumps": [1]}]))
    with pytest.raises(BadRiserIndexError, match="riser -1"):
        bundle_from_dict(diverge(summands=[{"c1": {}, "jumps": [-1]}]))


def test_unknown_generator():
    with pytest.raises(UnknownGeneratorError, match=r"summands\[0\].c1"):
        bundle_from_dict(diverge(summands=[{"c1": {"H": "1"}, "jumps": [0]}]))
    with pytest.raises(UnknownGeneratorError, match=r"relations\[0\]"):
        bundle_from_dict(diverge(relations=["D1*X"]))


def test_all_named_errors_are_bundle_spec_errors():
    for exc in (MalformedDocumentError, SpecShapeError, MalformedRationalError,
                WeightRangeError, WeightOrderError, BadRiserIndexError,
                UnknownGeneratorError):
        assert issubclass(exc, BundleSpecError)
        assert issubclass(exc, ValueError)
