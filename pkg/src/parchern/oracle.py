"""Randomized instances and an independent integral oracle.

``oracle_integral`` evaluates the defining weight-space integral the
slow, literal way: it cuts (0, 1]^n into the boxes owned by the tread
multi-indices (reading the cell boundaries straight off the weight
lists), expands exp(-t_i D_i) termwise on every axis, integrates each
power of t_i by the rational power rule, and assembles the twisted
integrand of each box from scratch by comparing jump positions with
tread indices.  It shares the ring arithmetic with everything else and
nothing more -- none of the engine's exponential-integral helpers, twist
tables or pushforward bookkeeping -- so agreement with the engine routes
is meaningful evidence rather than an echo.

``random_instance`` draws reproducible bundles inside declared
``InstanceLimits`` (a fixed seed fixes every choice), covering the
awkward corners on purpose: tied weights, zero weights, empty bundles,
pairwise intersection relations, and truncation degrees short enough to
chop the answer.

``cross_check`` runs every route plus the structural identities on one
bundle and folds the outcome into a ``ChernReport``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bundles import LineSummand, ParabolicBundle, ch_vb_sigma
from .chow import GradedClass, IntersectionModel
from .engine import (ChernReport, build_report, ch_par_general, ch_par_integral, ch_par_rr,
                     koszul_ch_sigma, low_degree, verify_grothendieck_relation)
from .ladders import Ladder, WeightFunction

F = Fraction


# -- the oracle -----------------------------------------------------------------


def _axis_integral(model: IntersectionModel, i: int, lo: Fraction, hi: Fraction) -> GradedClass:
    """integral of exp(-t D_{i+1}) dt over (lo, hi], termwise power rule."""
    width = len(model.generator_names)
    terms = {}
    for k in range(model.truncation_degree + 1):
        moment = F(1, k + 1) * (hi ** (k + 1) - lo ** (k + 1))
        coef = F((-1) ** k, factorial(k)) * moment
        terms[tuple(k if j == i else 0 for j in range(width))] = coef
    return GradedClass(model, terms)


def oracle_integral(bundle: ParabolicBundle) -> GradedClass:
    """Direct cellwise evaluation of the defining integral."""
    model = bundle.model
    n = bundle.num_divisors

    # cells per axis: boundaries are 0, w_r + 1 (per riser), 1
    axis_cells: list[list[tuple[int, Fraction, Fraction, GradedClass]]] = []
    for i in range(n):
        lo = F(0)
        cells = []
        uppers = [w + 1 for w in bundle.weights[i].weights] + [F(1)]
        for tread, hi in enumerate(uppers):
            cells.append((tread, lo, hi, _axis_integral(model, i, lo, hi)))
            lo = hi
        axis_cells.append(cells)

    # twisted integrand pieces, built here from raw jump comparisons
    exp_c1 = [s.c1.exp() for s in bundle.summands]
    exp_d = [model.divisor(i).exp() for i in range(n)]
    shifted: dict[tuple[int, tuple[int, ...]], GradedClass] = {}

    # boxes whose tread vectors shift the same summands the same way have
    # equal integrands, so pool their box integrals before multiplying
    pooled: dict[tuple[tuple[int, ...], ...], GradedClass] = {}
    for combo in itertools.product(*axis_cells):
        if any(lo == hi for _, lo, hi, _ in combo):
            continue  # a tied weight owns an empty box
        treads = tuple(tread for tread, _, _, _ in combo)
        box = model.one()
        for _, _, _, cls in combo:
            box = box * cls
        pattern = tuple(
            tuple(i for i in range(n) if s.jumps[i] < treads[i])
            for s in bundle.summands)
        if pattern in pooled:
            pooled[pattern] = pooled[pattern] + box
        else:
            pooled[pattern] = box

    numerator = model.zero()
    for pattern, box in pooled.items():
        integrand = model.zero()
        for j, shifts in enumerate(pattern):
            out = shifted.get((j, shifts))
            if out is None:
                out = exp_c1[j]
                for i in shifts:
                    out = out * exp_d[i]
                shifted[(j, shifts)] = out
            integrand = integrand + out
        numerator = numerator + box * integrand

    denominator = model.one()
    for i in range(n):
        denominator = denominator * _axis_integral(model, i, F(0), F(1))
    return numerator * denominator.inverse()


# -- reproducible random instances ------------------------------------------------


@dataclass(frozen=True)
class InstanceLimits:
    """Bounds for the instance generator (all inclusive)."""

    max_divisors: int = 3
    max_risers: int = 3
    max_summands: int = 4
    max_truncation_degree: int | None = None   # cap on d; None means n + 3
    weight_denominator_bound: int = 12
    c1_coefficient_bound: int = 3
    relation_probability: float = 0.25
    extra_class_probability: float = 0.5

    def __post_init__(self):
        if self.max_divisors < 1 or self.max_risers < 1 or self.max_summands < 0:
            raise ValueError("degenerate limits")
        if self.weight_denominator_bound < 1 or self.c1_coefficient_bound < 0:
            raise ValueError("degenerate limits")
        if self.max_truncation_degree is not None and self.max_truncation_degree < 1:
            raise ValueError("truncation degree cap must be >= 1")
        for p in (self.relation_probability, self.extra_class_probability):
            if not 0 <= p <= 1:
                raise ValueError("probabilities must lie in [0, 1]")

    def to_json_dict(self) -> dict:
        return {
            "max_divisors": self.max_divisors,
            "max_risers": self.max_risers,
            "max_summands": self.max_summands,
            "max_truncation_degree": self.max_truncation_degree,
            "weight_denominator_bound": self.weight_denominator_bound,
            "c1_coefficient_bound": self.c1_coefficient_bound,
            "relation_probability": self.relation_probability,
            "extra_class_probability": self.extra_class_probability,
        }


def _random_weight(rng: random.Random, limits: InstanceLimits) -> Fraction:
    den = rng.randint(1, limits.weight_denominator_bound)
    return F(-rng.randint(0, den - 1), den)


def _random_frame(rng: random.Random, limits: InstanceLimits):
    """Model and weight functions; summands are drawn separately so that
    several bundles can share one frame."""
    n = rng.randint(1, limits.max_divisors)
    d = n + 3
    if limits.max_truncation_degree is not None:
        d = min(d, limits.max_truncation_degree)
    if rng.random() < 0.15:
        d = rng.randint(1, d)  # exercise short truncations too
    extras = ("H",) if rng.random() < limits.extra_class_probability else ()
    relations = []
    if n >= 2 and rng.random() < limits.relation_probability:
        i1, i2 = sorted(rng.sample(range(n), 2))
        relations.append({f"D{i1 + 1}": 1, f"D{i2 + 1}": 1})
    model = IntersectionModel(n, truncation_degree=d, extra_classes=extras,
                              relations=relations)
    weights = []
    for _ in range(n):
        num_risers = rng.randint(1, limits.max_risers)
        ws = sorted(_random_weight(rng, limits) for _ in range(num_risers))
        if num_risers >= 2 and rng.random() < 0.3:
            at = rng.randrange(num_risers - 1)
            ws[at + 1] = ws[at]  # force a tie: an empty Dom interval
        weights.append(WeightFunction(Ladder.of_risers(num_risers), tuple(ws)))
    return model, tuple(weights)


def _random_summands(rng: random.Random, model: IntersectionModel,
                     weights: tuple[WeightFunction, ...], count: int,
                     limits: InstanceLimits) -> tuple[LineSummand, ...]:
    bound = limits.c1_coefficient_bound
    out = []
    for _ in range(count):
        c1 = model.linear_class({name: rng.randint(-bound, bound)
                                 for name in model.generator_names})
        jumps = tuple(rng.randrange(w.ladder.num_risers) for w in weights)
        out.append(LineSummand(c1, jumps))
    return tuple(out)


def _random_count(rng: random.Random, limits: InstanceLimits) -> int:
    if limits.max_summands == 0 or rng.random() < 0.05:
        return 0
    return rng.randint(1, limits.max_summands)


def random_instance(seed: int, limits: InstanceLimits = InstanceLimits()) -> ParabolicBundle:
    """A reproducible bundle: the seed fixes every choice."""
    rng = random.Random(seed)
    model, weights = _random_frame(rng, limits)
    summands = _random_summands(rng, model, weights, _random_count(rng, limits), limits)
    return ParabolicBundle(model, weights, summands)


def random_instance_pair(seed: int,
                         limits: InstanceLimits = InstanceLimits()
                         ) -> tuple[ParabolicBundle, ParabolicBundle]:
    """Two bundles over one frame (same model, ladders and weights), with
    independently drawn summands; useful for additivity checks."""
    rng = random.Random(seed)
    model, weights = _random_frame(rng, limits)
    first = _random_summands(rng, model, weights, _random_count(rng, limits), limits)
    second = _random_summands(rng, model, weights, _random_count(rng, limits), limits)
    return (ParabolicBundle(model, weights, first),
            ParabolicBundle(model, weights, second))


# -- the aggregate check ----------------------------------------------------------


def cross_check(bundle: ParabolicBundle) -> ChernReport:
    """Run every route and every structural identity on one bundle."""
    methods = {
        "integral": ch_par_integral(bundle),
        "general": ch_par_general(bundle),
        "rr": ch_par_rr(bundle),
        "oracle": oracle_integral(bundle),
    }
    koszul_residuals = {
        sigma: koszul_ch_sigma(bundle, sigma) - ch_vb_sigma(bundle, sigma)
        for sigma in bundle.sigma_grid()
    }
    return build_report(bundle, methods,
                        low_degree_parts=low_degree(bundle),
                        koszul_residuals=koszul_residuals,
                        grothendieck_residual=verify_grothendieck_relation(bundle))
