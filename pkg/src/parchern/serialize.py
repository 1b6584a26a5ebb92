"""Reading and writing bundle descriptions.

A bundle description is a JSON document (TOML is accepted too, for
hand-authored files) of the shape

    {
      "divisors": 2,
      "truncation_degree": 5,          // optional, defaults to divisors + 3
      "extra_classes": ["H"],          // optional degree-one generators
      "relations": ["D1*D2"],          // optional monomial relations
      "ladders": [["-1/2"], ["-1/3", "0"]],
      "summands": [
        {"c1": {"D1": "1", "H": "2"}, "jumps": [0, 0]}
      ]
    }

Each ladder is its riser weight list, bottom to top (the tread count is
one more); jumps are 0-based riser indices, one per divisor, in divisor
order.  Rationals are written "p" or "p/q" (integers may stay bare
numbers); floats are rejected outright, since nothing here is
approximate.

Malformed documents raise one of the named ``BundleSpecError``
subclasses below, each carrying a message that points at the offending
field.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Mapping

from .bundles import LineSummand, ParabolicBundle
from .chow import IntersectionModel, rational_text
from .ladders import Ladder, WeightFunction


class BundleSpecError(ValueError):
    """Base class for malformed bundle descriptions."""


class MalformedDocumentError(BundleSpecError):
    """The document is not valid JSON / TOML at all."""


class SpecShapeError(BundleSpecError):
    """A required field is missing or has the wrong type or arity."""


class MalformedRationalError(BundleSpecError):
    """A rational literal is not of the form p or p/q."""


class WeightRangeError(BundleSpecError):
    """A riser weight lies outside the half-open interval (-1, 0]."""


class WeightOrderError(BundleSpecError):
    """Riser weights of one ladder are not non-decreasing."""


class BadRiserIndexError(BundleSpecError):
    """A summand jump is not a riser index of the matching ladder."""


class UnknownGeneratorError(BundleSpecError):
    """A class or relation mentions a generator the model does not have."""


_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_rational(value: Any, where: str) -> Fraction:
    """Exact rational from "p", "p/q" or a bare int; anything else fails."""
    if isinstance(value, bool):
        raise MalformedRationalError(f"{where}: expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise MalformedRationalError(
            f"{where}: floating point {value!r} is not exact; write \"p/q\"")
    if isinstance(value, str):
        m = _RATIONAL.match(value)
        if m:
            num, den = int(m.group(1)), m.group(2)
            if den is None:
                return Fraction(num)
            if int(den) == 0:
                raise MalformedRationalError(f"{where}: zero denominator in {value!r}")
            if int(den) < 0:
                raise MalformedRationalError(
                    f"{where}: negative denominator in {value!r}; put the sign up front")
            return Fraction(num, int(den))
    raise MalformedRationalError(f"{where}: {value!r} is not a rational \"p/q\"")


def _expect(data: Mapping, key: str, kind, where: str, default=None, required=False):
    if key not in data:
        if required:
            raise SpecShapeError(f"{where}: missing required field {key!r}")
        return default
    value = data[key]
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        raise SpecShapeError(f"{where}.{key}: expected {kind.__name__}, got {type(value).__name__}")
    return value


def _parse_monomial(model: IntersectionModel, text: str, where: str) -> dict[str, int]:
    if not isinstance(text, str) or not text.strip():
        raise SpecShapeError(f"{where}: relation must be a monomial string like \"D1*D2\"")
    exponents: dict[str, int] = {}
    for factor in text.split("*"):
        factor = factor.strip()
        name, _, power = factor.partition("^")
        name = name.strip()
        if name not in model.generator_names:
            raise UnknownGeneratorError(
                f"{where}: unknown generator {name!r}; have {list(model.generator_names)}")
        if power:
            if not power.strip().isdigit() or int(power) < 1:
                raise SpecShapeError(f"{where}: bad exponent in {factor!r}")
            exponents[name] = exponents.get(name, 0) + int(power)
        else:
            exponents[name] = exponents.get(name, 0) + 1
    return exponents


def bundle_from_dict(data: Mapping, where: str = "bundle") -> ParabolicBundle:
    """Build and validate a bundle from a parsed document."""
    if not isinstance(data, Mapping):
        raise SpecShapeError(f"{where}: expected an object at top level")
    unknown = set(data) - {"divisors", "truncation_degree", "extra_classes",
                           "relations", "ladders", "summands"}
    if unknown:
        raise SpecShapeError(f"{where}: unknown fields {sorted(unknown)}")

    n = _expect(data, "divisors", int, where, required=True)
    if n < 0:
        raise SpecShapeError(f"{where}.divisors: must be >= 0")
    d = _expect(data, "truncation_degree", int, where)
    if d is not None and d < 0:
        raise SpecShapeError(f"{where}.truncation_degree: must be >= 0")
    extras = _expect(data, "extra_classes", list, where, default=[])
    for k, name in enumerate(extras):
        if not isinstance(name, str) or not name or name.startswith("D") and name[1:].isdigit():
            raise SpecShapeError(
                f"{where}.extra_classes[{k}]: names must be nonempty strings "
                f"and may not look like divisor names")
    try:
        model = IntersectionModel(n, truncation_degree=d, extra_classes=extras)
    except ValueError as exc:
        raise SpecShapeError(f"{where}: {exc}") from None
    relations = _expect(data, "relations", list, where, default=[])
    parsed_relations = [_parse_monomial(model, rel, f"{where}.relations[{k}]")
                        for k, rel in enumerate(relations)]
    if parsed_relations:
        model = IntersectionModel(n, truncation_degree=d, extra_classes=extras,
                                  relations=parsed_relations)

    ladders = _expect(data, "ladders", list, where, required=True)
    if len(ladders) != n:
        raise SpecShapeError(f"{where}.ladders: need one riser list per divisor "
                             f"({n}), got {len(ladders)}")
    weight_functions = []
    for i, riser_weights in enumerate(ladders):
        spot = f"{where}.ladders[{i}]"
        if not isinstance(riser_weights, list) or not riser_weights:
            raise SpecShapeError(f"{spot}: expected a nonempty list of riser weights")
        weights = [parse_rational(w, f"{spot}[{k}]") for k, w in enumerate(riser_weights)]
        for k, w in enumerate(weights):
            if not (-1 < w <= 0):
                raise WeightRangeError(f"{spot}[{k}]: weight {rational_text(w)} "
                                       f"outside (-1, 0]")
        for k, (a, b) in enumerate(zip(weights, weights[1:])):
            if a > b:
                raise WeightOrderError(f"{spot}[{k + 1}]: weight {rational_text(b)} "
                                       f"below its predecessor {rational_text(a)}")
        weight_functions.append(WeightFunction(Ladder.of_risers(len(weights)), tuple(weights)))

    raw_summands = _expect(data, "summands", list, where, required=True)
    summands = []
    for j, raw in enumerate(raw_summands):
        spot = f"{where}.summands[{j}]"
        if not isinstance(raw, Mapping):
            raise SpecShapeError(f"{spot}: expected an object with c1 and jumps")
        extra_keys = set(raw) - {"c1", "jumps"}
        if extra_keys:
            raise SpecShapeError(f"{spot}: unknown fields {sorted(extra_keys)}")
        c1_map = raw.get("c1", {})
        if not isinstance(c1_map, Mapping):
            raise SpecShapeError(f"{spot}.c1: expected an object of coefficients")
        coefficients = {}
        for name, value in c1_map.items():
            if name not in model.generator_names:
                raise UnknownGeneratorError(
                    f"{spot}.c1: unknown generator {name!r}; have {list(model.generator_names)}")
            coefficients[name] = parse_rational(value, f"{spot}.c1.{name}")
        jumps = raw.get("jumps")
        if not isinstance(jumps, list) or len(jumps) != n:
            raise SpecShapeError(f"{spot}.jumps: need one riser index per divisor ({n})")
        for i, r in enumerate(jumps):
            if isinstance(r, bool) or not isinstance(r, int):
                raise SpecShapeError(f"{spot}.jumps[{i}]: expected an integer riser index")
            if not 0 <= r < weight_functions[i].ladder.num_risers:
                raise BadRiserIndexError(
                    f"{spot}.jumps[{i}]: riser {r} does not exist on ladder {i} "
                    f"(risers 0..{weight_functions[i].ladder.num_risers - 1})")
        summands.append(LineSummand(model.linear_class(coefficients), tuple(jumps)))

    return ParabolicBundle(model, tuple(weight_functions), tuple(summands))


def bundle_from_json(text: str) -> ParabolicBundle:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocumentError(f"not valid JSON: {exc}") from None
    return bundle_from_dict(data)


def bundle_from_toml(text: str) -> ParabolicBundle:
    try:
        import tomllib  # Python >= 3.11
    except ModuleNotFoundError:
        import tomli as tomllib
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise MalformedDocumentError(f"not valid TOML: {exc}") from None
    return bundle_from_dict(data)


def load_bundle(path: str) -> ParabolicBundle:
    """Read a bundle description; TOML by extension, JSON otherwise."""
    with open(path, "rb") as handle:
        text = handle.read().decode("utf-8")
    if str(path).endswith(".toml"):
        return bundle_from_toml(text)
    return bundle_from_json(text)


def bundle_to_dict(bundle: ParabolicBundle) -> dict:
    """Canonical document for a bundle; inverse of ``bundle_from_dict``."""
    model = bundle.model
    out: dict = {"divisors": model.num_divisors,
                 "truncation_degree": model.truncation_degree}
    if model.extra_classes:
        out["extra_classes"] = list(model.extra_classes)
    if model.relations:
        out["relations"] = [model.monomial_text(rel) for rel in model.relations]
    out["ladders"] = [[rational_text(w) for w in wf.weights] for wf in bundle.weights]
    out["summands"] = [
        {"c1": {model.generator_names[k]: rational_text(coef)
                for k, coef in sorted(
                    ((mon.index(1), c) for mon, c in s.c1.terms.items()))},
         "jumps": list(s.jumps)}
        for s in bundle.summands
    ]
    return out
