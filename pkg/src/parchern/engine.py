"""Independent evaluation routes for the parabolic Chern character.

All routes compute the same element of the truncated intersection ring
and must agree exactly, coefficient by coefficient:

* ``ch_par_integral`` -- averages the Chern characters of the twisted
  subsheaves E_sigma against exp(-t.D) over the weight intervals owned
  by each tread multi-index, then divides by the same average of the
  trivial filtration; everything is a finite exact sum by nilpotency.
* ``ch_par_general`` -- the closed shape: ch of the underlying bundle
  times exp(D), corrected by an inclusion-exclusion over divisor
  subsets where each jump piece carries a unit bracket
  exp(D_i) . eab(a+1, i) / eab(1, i) . exp(-D_i) per support divisor.
* ``ch_par_rr`` -- the Riemann-Roch-shaped rearrangement of the same
  sum: underlying ch, minus the trivial-weight pushforward correction,
  plus the weighted one.
* ``low_degree`` (re-exported from ``lowdeg``) -- polynomial closed
  forms in degrees <= 3.

Two structural identities guard the model itself:

* ``koszul_ch_sigma`` rebuilds ch(E_sigma) by inclusion-exclusion over
  the pieces jumping above sigma (a structure-sheaf resolution argument)
  and must equal the direct twist computation ``ch_vb_sigma``;
* ``verify_grothendieck_relation`` returns the residual of the sheafy
  sum relation ch(E).(1 - exp(-D)) + sum of signed pushforwards, which
  is identically zero.

``ChernReport`` bundles per-route results with an exact agreement flag
and a first-discrepancy diagnostic naming the offending monomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bundles import (ParabolicBundle, ch_of_pushforward, ch_vb, ch_vb_sigma, graded_piece,
                      quotient_class, twist_vector, _eab_one)
from .chow import GradedClass, IntersectionModel, eab_factor, integrate_exp, rational_text
from .lowdeg import ch2_symmetrized, low_degree

__all__ = [
    "ch_par_integral", "ch_par_general", "ch_par_rr", "low_degree",
    "ch2_symmetrized", "koszul_ch_sigma", "verify_grothendieck_relation",
    "ChernReport", "Discrepancy", "build_report", "METHOD_ORDER",
]

METHOD_ORDER = ("integral", "general", "rr", "oracle")


# -- memoized per-bundle factors ------------------------------------------------


def _integral_factor(bundle: ParabolicBundle, i: int, tread: int) -> GradedClass:
    """integral of exp(-t.D_i) over the weight interval owned by a tread."""
    key = ("integral_factor", i, tread)
    out = bundle._cache.get(key)
    if out is None:
        w = bundle.weights[i]
        out = integrate_exp(bundle.model, w.alpha_minus(tread), w.alpha_plus(tread), i)
        bundle._cache[key] = out
    return out


def _eab_weight(bundle: ParabolicBundle, i: int, riser: int) -> GradedClass:
    """eab(a + 1, i) for the weight a of a riser."""
    key = ("eab_weight", i, riser)
    out = bundle._cache.get(key)
    if out is None:
        a = bundle.weights[i].alpha(riser)
        out = bundle._cache[key] = eab_factor(bundle.model, a + 1, i)
    return out


def _eab_one_inverse(bundle: ParabolicBundle, i: int) -> GradedClass:
    key = ("eab_one_inv", i)
    out = bundle._cache.get(key)
    if out is None:
        out = bundle._cache[key] = _eab_one(bundle, i).inverse()
    return out


def _exp_divisor(bundle: ParabolicBundle, i: int, sign: int) -> GradedClass:
    key = ("exp_divisor", i, sign)
    out = bundle._cache.get(key)
    if out is None:
        out = bundle._cache[key] = (sign * bundle.model.divisor(i)).exp()
    return out


def _bracket(bundle: ParabolicBundle, i: int, riser: int) -> GradedClass:
    """The unit multiplier exp(D_i).eab(a+1, i).eab(1, i)^{-1}.exp(-D_i);
    the cancelled D_i in numerator and denominator is what makes the
    quotient of the two non-units legal."""
    key = ("bracket", i, riser)
    out = bundle._cache.get(key)
    if out is None:
        out = (_exp_divisor(bundle, i, +1) * _eab_weight(bundle, i, riser)
               * _eab_one_inverse(bundle, i) * _exp_divisor(bundle, i, -1))
        bundle._cache[key] = out
    return out


def _exp_total(bundle: ParabolicBundle, sign: int) -> GradedClass:
    key = ("exp_total", sign)
    out = bundle._cache.get(key)
    if out is None:
        out = bundle._cache[key] = (sign * bundle.model.divisor_sum()).exp()
    return out


# -- the evaluation routes ------------------------------------------------------


def ch_par_integral(bundle: ParabolicBundle) -> GradedClass:
    """Weight-interval average of the twisted subsheaf characters.

    Each tread multi-index sigma owns the box prod_i (a_-(sigma_i),
    a_+(sigma_i)] of weight space; integrating ch(E_sigma).exp(-t.D)
    over its box and summing boxes, then dividing by the same integral
    with all weights trivial, yields ch^Par exactly.  With no divisors
    the answer is just the underlying Chern character.
    """
    model = bundle.model
    # cells with the same twist pattern share a character: sum their
    # integral boxes first and multiply through once per pattern
    boxes: dict[tuple, GradedClass] = {}
    representative: dict[tuple, tuple[int, ...]] = {}
    for sigma in bundle.sigma_grid():
        box = model.one()
        for i, tread in enumerate(sigma):
            box = box * _integral_factor(bundle, i, tread)
        pattern = tuple(twist_vector(bundle, sigma, j) for j in range(bundle.rank))
        if pattern in boxes:
            boxes[pattern] = boxes[pattern] + box
        else:
            boxes[pattern] = box
            representative[pattern] = sigma
    numerator = model.zero()
    for pattern, box in boxes.items():
        numerator = numerator + ch_vb_sigma(bundle, representative[pattern]) * box
    denominator = model.one()
    for i in range(bundle.num_divisors):
        denominator = denominator * _eab_one(bundle, i)
    return numerator * denominator.inverse()


def ch_par_general(bundle: ParabolicBundle) -> GradedClass:
    """Closed shape: exp(D) times the bracket-corrected piece sum."""
    acc = ch_vb(bundle)
    for support in bundle.supports():
        sign = (-1) ** len(support)
        for risers in bundle.riser_grid(support):
            term = ch_of_pushforward(bundle, support, risers)
            for i, r in zip(support, risers):
                term = term * _bracket(bundle, i, r)
            acc = acc + sign * term
    return acc * _exp_total(bundle, +1)


def ch_par_rr(bundle: ParabolicBundle) -> GradedClass:
    """Riemann-Roch shape: replace the trivial-weight correction of the
    underlying bundle by the weighted one."""
    trivial = bundle.model.zero()
    weighted = bundle.model.zero()
    for support in bundle.supports():
        sign = (-1) ** len(support)
        for risers in bundle.riser_grid(support):
            push = graded_piece(bundle, support, risers).pushforward_ch
            t_triv, t_wt = push, push
            for i, r in zip(support, risers):
                t_triv = t_triv * _eab_one(bundle, i)
                t_wt = t_wt * _eab_weight(bundle, i, r)
            trivial = trivial + sign * t_triv
            weighted = weighted + sign * t_wt
    exp_d = _exp_total(bundle, +1)
    return ch_vb(bundle) - exp_d * trivial + exp_d * weighted


# -- structural identities ------------------------------------------------------


def koszul_ch_sigma(bundle: ParabolicBundle, sigma) -> GradedClass:
    """ch(E_sigma) via inclusion-exclusion over pieces jumping above sigma.

    Must equal ``ch_vb_sigma(bundle, sigma)`` for every tread
    multi-index; the difference is a sharp detector of sign or indexing
    mistakes in the pushforward bookkeeping.
    """
    sigma = bundle.check_sigma(sigma)
    acc = ch_vb(bundle)
    for support in bundle.supports():
        sign = (-1) ** len(support)
        sub = tuple(sigma[i] for i in support)
        acc = acc + sign * quotient_class(bundle, support, sub)
    return acc


def verify_grothendieck_relation(bundle: ParabolicBundle) -> GradedClass:
    """Residual of ch(E).(1 - exp(-D)) + sum of signed corrected
    pushforwards; the zero class exactly when the bookkeeping is right."""
    acc = ch_vb(bundle) * (1 - _exp_total(bundle, -1))
    for support in bundle.supports():
        sign = (-1) ** len(support)
        for risers in bundle.riser_grid(support):
            acc = acc + sign * ch_of_pushforward(bundle, support, risers)
    return acc


# -- reporting -------------------------------------------------------------------


@dataclass
class Discrepancy:
    """First exact mismatch found, located down to one monomial."""

    kind: str          # "methods" | "low_degree" | "koszul" | "grothendieck"
    left: str
    right: str
    monomial: str
    difference: str    # left minus right, as "p/q"
    context: str = ""

    def to_json_dict(self) -> dict:
        out = {"kind": self.kind, "left": self.left, "right": self.right,
               "monomial": self.monomial, "difference": self.difference}
        if self.context:
            out["context"] = self.context
        return out


def _leading_term(cls: GradedClass) -> tuple[str, str]:
    mon, coef = min(cls.terms.items(),
                    key=lambda kv: IntersectionModel.monomial_key(kv[0]))
    return cls.model.monomial_text(mon), rational_text(coef)


@dataclass
class ChernReport:
    """Per-route results plus exact-agreement diagnostics."""

    truncation_degree: int
    rank: int
    methods: dict[str, GradedClass]
    low_degree: dict[int, GradedClass] | None = None
    koszul_residuals: dict[tuple[int, ...], GradedClass] | None = None
    grothendieck_residual: GradedClass | None = None
    agreement: bool = True
    first_discrepancy: Discrepancy | None = None
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        out: dict = {
            "truncation_degree": self.truncation_degree,
            "rank": self.rank,
            "methods": {name: cls.terms_json() for name, cls in self.methods.items()},
        }
        if self.low_degree is not None:
            out["low_degree"] = {str(k): cls.terms_json()
                                 for k, cls in sorted(self.low_degree.items())}
        if self.koszul_residuals is not None:
            out["koszul_residuals"] = {
                "(" + ",".join(map(str, sigma)) + ")": cls.terms_json()
                for sigma, cls in self.koszul_residuals.items()}
        if self.grothendieck_residual is not None:
            out["grothendieck_residual"] = self.grothendieck_residual.terms_json()
        if self.notes:
            out["notes"] = list(self.notes)
        out["agreement"] = self.agreement
        out["first_discrepancy"] = (self.first_discrepancy.to_json_dict()
                                    if self.first_discrepancy else None)
        return out


def build_report(bundle: ParabolicBundle,
                 methods: dict[str, GradedClass],
                 low_degree_parts: dict[int, GradedClass] | None = None,
                 koszul_residuals: dict[tuple[int, ...], GradedClass] | None = None,
                 grothendieck_residual: GradedClass | None = None,
                 notes: list[str] | None = None) -> ChernReport:
    """Assemble a report, deciding agreement by exact comparison.

    The first method present (in the canonical order integral, general,
    rr, oracle) is the reference; every other result, every low-degree
    part, every residual is compared against it coefficient by
    coefficient, and the first mismatch in scan order is recorded.
    """
    ordered = {name: methods[name] for name in METHOD_ORDER if name in methods}
    for name in methods:
        if name not in ordered:
            ordered[name] = methods[name]
    names = list(ordered)
    discrepancy = None

    if names:
        ref_name, ref = names[0], ordered[names[0]]
        for name in names[1:]:
            diff = ref - ordered[name]
            if not diff.is_zero():
                mono, delta = _leading_term(diff)
                discrepancy = Discrepancy("methods", ref_name, name, mono, delta)
                break
        if discrepancy is None and low_degree_parts is not None:
            for k in sorted(low_degree_parts):
                diff = ref.grade(k) - low_degree_parts[k]
                if not diff.is_zero():
                    mono, delta = _leading_term(diff)
                    discrepancy = Discrepancy("low_degree", ref_name, f"ch{k}", mono, delta)
                    break
    if discrepancy is None and koszul_residuals:
        for sigma, residual in koszul_residuals.items():
            if not residual.is_zero():
                mono, delta = _leading_term(residual)
                discrepancy = Discrepancy("koszul", "ch_vb_sigma", "koszul_ch_sigma",
                                          mono, delta, context=f"sigma={sigma}")
                break
    if discrepancy is None and grothendieck_residual is not None \
            and not grothendieck_residual.is_zero():
        mono, delta = _leading_term(grothendieck_residual)
        discrepancy = Discrepancy("grothendieck", "relation", "zero", mono, delta)

    return ChernReport(
        truncation_degree=bundle.model.truncation_degree,
        rank=bundle.rank,
        methods=ordered,
        low_degree=low_degree_parts,
        koszul_residuals={s: r for s, r in (koszul_residuals or {}).items()
                          if not r.is_zero()} if koszul_residuals is not None else None,
        grothendieck_residual=grothendieck_residual,
        agreement=discrepancy is None,
        first_discrepancy=discrepancy,
        notes=list(notes or []),
    )
