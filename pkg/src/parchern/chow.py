"""Exact arithmetic in a truncated rational intersection ring.

The ambient object is a commutative polynomial ring

    Q[D1, ..., Dn, E1, E2, ...]

in degree-one generators (``n`` distinguished divisor classes plus any
number of extra degree-one classes), truncated in two ways:

* everything of total degree > d is identically zero, and
* an optional set of *monomial relations* (e.g. ``D1*D2 = 0`` when two
  divisors do not meet) kills every monomial divisible by a relation.

Since each generator is nilpotent, exponentials of degree >= 1 classes
and inverses of units are finite sums, so the whole calculus stays in
exact rational arithmetic; no floating point appears anywhere.

A class is stored sparsely in canonical form: a map from exponent
vectors to integer numerators over one positive common denominator,
with zero terms, monomials of degree > d and relation multiples removed
and the gcd of all numerators and the denominator divided out.  (One
shared denominator keeps the hot loops in plain integer arithmetic;
the public face of a class -- ``terms``, ``coefficient`` -- speaks
`fractions.Fraction`.)  Text and JSON forms list terms in graded-
lexicographic order, so equal classes serialize identically.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd, lcm
from typing import Iterable, Mapping

# An exponent vector over (D1..Dn, extras), e.g. (2, 0, 1) = D1^2 * E1.
Monomial = tuple[int, ...]

Rat = Fraction | int


def rational_text(q: Fraction) -> str:
    """Canonical "p/q" form; integers print without the denominator."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class IntersectionModel:
    """Shape of the ambient ring: generators, truncation degree, relations.

    ``num_divisors`` distinguished generators are named D1..Dn; extra
    degree-one classes follow in declaration order.  ``relations`` is a
    collection of monomials declared to vanish; divisibility by any of
    them is checked at normalization time, so the relation ideal is
    upward closed without storing its closure.  The truncation degree
    defaults to ``num_divisors + 3``, enough to see ch_0..ch_3 on the
    smallest interesting models.
    """

    __slots__ = ("num_divisors", "truncation_degree", "extra_classes",
                 "relations", "generator_names", "_name_index")

    def __init__(self, num_divisors: int,
                 truncation_degree: int | None = None,
                 extra_classes: Iterable[str] = (),
                 relations: Iterable[Monomial | Mapping[str, int]] = ()):
        if num_divisors < 0:
            raise ValueError("num_divisors must be >= 0")
        self.num_divisors = int(num_divisors)
        if truncation_degree is None:
            truncation_degree = self.num_divisors + 3
        if truncation_degree < 0:
            raise ValueError("truncation_degree must be >= 0")
        self.truncation_degree = int(truncation_degree)

        self.extra_classes = tuple(str(name) for name in extra_classes)
        names = tuple(f"D{i + 1}" for i in range(self.num_divisors)) + self.extra_classes
        if len(set(names)) != len(names):
            raise ValueError(f"generator names collide: {names}")
        self.generator_names = names
        self._name_index = {name: k for k, name in enumerate(names)}

        rels = []
        for rel in relations:
            if isinstance(rel, Mapping):
                rel = self.monomial(rel)
            rel = tuple(int(e) for e in rel)
            if len(rel) != len(names):
                raise ValueError(f"relation {rel} has wrong length for {names}")
            if any(e < 0 for e in rel):
                raise ValueError(f"negative exponent in relation {rel}")
            if sum(rel) == 0:
                raise ValueError("the empty monomial cannot be a relation (1 = 0)")
            rels.append(rel)
        # keep only divisibility-minimal relations; the rest are implied
        rels = [r for r in rels if sum(r) <= self.truncation_degree]
        minimal = []
        for r in sorted(set(rels), key=lambda m: (sum(m), m)):
            if not any(all(p <= e for p, e in zip(prev, r)) for prev in minimal):
                minimal.append(r)
        self.relations = tuple(minimal)

    # -- monomial helpers -------------------------------------------------

    def monomial(self, exponents: Mapping[str, int]) -> Monomial:
        """Exponent vector from a {generator name: exponent} mapping."""
        vec = [0] * len(self.generator_names)
        for name, e in exponents.items():
            if name not in self._name_index:
                raise KeyError(f"unknown generator {name!r}; have {self.generator_names}")
            vec[self._name_index[name]] = int(e)
        return tuple(vec)

    def monomial_text(self, mon: Monomial) -> str:
        if sum(mon) == 0:
            return "1"
        factors = []
        for name, e in zip(self.generator_names, mon):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors)

    @staticmethod
    def monomial_key(mon: Monomial):
        """Graded-lex sort key: by total degree, then D1-dominant first."""
        return (sum(mon), tuple(-e for e in mon))

    def _killed(self, mon: Monomial) -> bool:
        for rel in self.relations:
            for r, m in zip(rel, mon):
                if r > m:
                    break
            else:
                return True
        return False

    # -- class constructors ------------------------------------------------

    def from_terms(self, terms: Mapping[Monomial, Rat]) -> GradedClass:
        return GradedClass(self, terms)

    def zero(self) -> GradedClass:
        return GradedClass._raw(self, {}, 1)

    def one(self) -> GradedClass:
        return self.constant(1)

    def constant(self, value: Rat) -> GradedClass:
        return GradedClass(self, {(0,) * len(self.generator_names): Fraction(value)})

    def generator(self, name: str) -> GradedClass:
        return GradedClass(self, {self.monomial({name: 1}): Fraction(1)})

    def divisor(self, i: int) -> GradedClass:
        """The class D_{i+1}; divisor indices are 0-based in code."""
        if not 0 <= i < self.num_divisors:
            raise IndexError(f"divisor index {i} out of range 0..{self.num_divisors - 1}")
        return self.generator(self.generator_names[i])

    def divisor_sum(self) -> GradedClass:
        """D = D1 + ... + Dn, the total boundary class."""
        vecs = {}
        for i in range(self.num_divisors):
            mon = tuple(1 if k == i else 0 for k in range(len(self.generator_names)))
            vecs[mon] = Fraction(1)
        return GradedClass(self, vecs)

    def linear_class(self, coefficients: Mapping[str, Rat]) -> GradedClass:
        """Degree-one class sum(c_name * name)."""
        terms = {}
        for name, c in coefficients.items():
            terms[self.monomial({name: 1})] = Fraction(c)
        return GradedClass(self, terms)

    # -- identity ----------------------------------------------------------

    def _signature(self):
        return (self.num_divisors, self.truncation_degree,
                self.extra_classes, self.relations)

    def __eq__(self, other):
        return isinstance(other, IntersectionModel) and self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    def __repr__(self):
        rels = ", ".join(self.monomial_text(r) for r in self.relations)
        return (f"IntersectionModel(n={self.num_divisors}, d={self.truncation_degree}, "
                f"extras={list(self.extra_classes)}, relations=[{rels}])")


class GradedClass:
    """An element of a truncated intersection ring, in canonical form.

    Immutable by convention: arithmetic returns new objects and nothing
    mutates the term data after construction.  Scalars (int / Fraction)
    mix freely with classes in ``+`` and ``*``.
    """

    __slots__ = ("model", "_ints", "_den", "_view")

    def __init__(self, model: IntersectionModel, terms: Mapping[Monomial, Rat] = ()):
        reduced: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mon, coef in items:
            mon = tuple(int(e) for e in mon)
            if len(mon) != len(model.generator_names):
                raise ValueError(f"monomial {mon} has wrong length for {model.generator_names}")
            if any(e < 0 for e in mon):
                raise ValueError(f"negative exponent in monomial {mon}")
            if sum(mon) > model.truncation_degree or model._killed(mon):
                continue
            coef = Fraction(coef)
            if coef:
                acc = reduced.get(mon)
                if acc is None:
                    reduced[mon] = coef
                else:
                    acc += coef
                    if acc:
                        reduced[mon] = acc
                    else:
                        del reduced[mon]
        den = 1
        for coef in reduced.values():
            den = lcm(den, coef.denominator)
        self.model = model
        self._ints = {mon: coef.numerator * (den // coef.denominator)
                      for mon, coef in reduced.items()}
        self._den = den
        self._view = None

    @classmethod
    def _raw(cls, model: IntersectionModel, ints: dict[Monomial, int], den: int) -> GradedClass:
        # internal: ints/den already in canonical reduced form
        self = object.__new__(cls)
        self.model = model
        self._ints = ints
        self._den = den
        self._view = None
        return self

    @classmethod
    def _normalized(cls, model: IntersectionModel, ints: dict[Monomial, int], den: int) -> GradedClass:
        # internal: strip zeros and divide out the common gcd
        ints = {m: v for m, v in ints.items() if v}
        if not ints:
            return cls._raw(model, ints, 1)
        g = den
        for v in ints.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g != 1:
            den //= g
            ints = {m: v // g for m, v in ints.items()}
        return cls._raw(model, ints, den)

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        """The canonical {monomial: coefficient} view, with Fractions."""
        view = self._view
        if view is None:
            den = self._den
            view = self._view = {m: Fraction(v, den) for m, v in self._ints.items()}
        return view

    # -- ring operations ----------------------------------------------------

    def _check_model(self, other: GradedClass):
        if self.model is not other.model and self.model != other.model:
            raise ValueError("operands live in different intersection models")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.model.constant(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        self._check_model(other)
        d1, d2 = self._den, other._den
        if d1 == d2:
            den, s1, s2 = d1, 1, 1
        else:
            den = lcm(d1, d2)
            s1, s2 = den // d1, den // d2
        out = dict(self._ints) if s1 == 1 else {m: v * s1 for m, v in self._ints.items()}
        for mon, v in other._ints.items():
            acc = out.get(mon, 0) + v * s2
            if acc:
                out[mon] = acc
            else:
                out.pop(mon, None)
        return GradedClass._normalized(self.model, out, den)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass._raw(self.model, {m: -v for m, v in self._ints.items()}, self._den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-Fraction(other))
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return self.model.zero()
            return GradedClass._normalized(
                self.model,
                {m: v * q.numerator for m, v in self._ints.items()},
                self._den * q.denominator)
        if not isinstance(other, GradedClass):
            return NotImplemented
        self._check_model(other)
        model = self.model
        d = model.truncation_degree
        killed = model._killed if model.relations else None
        a, b = self._ints, other._ints
        if len(a) > len(b):
            a, b = b, a
        # bucket the larger factor by degree so the cutoff skips whole rows
        buckets: dict[int, list] = {}
        for mon, v in b.items():
            buckets.setdefault(sum(mon), []).append((mon, v))
        out: dict[Monomial, int] = {}
        for m1, v1 in a.items():
            g1 = sum(m1)
            for g2, row in buckets.items():
                if g1 + g2 > d:
                    continue
                for m2, v2 in row:
                    mon = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                    if killed is not None and killed(mon):
                        continue
                    acc = out.get(mon, 0) + v1 * v2
                    if acc:
                        out[mon] = acc
                    else:
                        del out[mon]
        return GradedClass._normalized(model, out, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = self.model.one()
        for _ in range(k):
            out = out * self
        return out

    # -- graded structure ----------------------------------------------------

    def grade(self, k: int) -> GradedClass:
        """The degree-k homogeneous part."""
        return GradedClass._normalized(
            self.model, {m: v for m, v in self._ints.items() if sum(m) == k}, self._den)

    def constant_term(self) -> Fraction:
        zero_mon = (0,) * len(self.model.generator_names)
        return Fraction(self._ints.get(zero_mon, 0), self._den)

    def coefficient(self, mon: Monomial | Mapping[str, int]) -> Fraction:
        if isinstance(mon, Mapping):
            mon = self.model.monomial(mon)
        return Fraction(self._ints.get(tuple(mon), 0), self._den)

    def is_zero(self) -> bool:
        return not self._ints

    def is_homogeneous(self, k: int) -> bool:
        return all(sum(m) == k for m in self._ints)

    def max_degree(self) -> int:
        """Largest degree with a nonzero term (-1 for the zero class)."""
        return max((sum(m) for m in self._ints), default=-1)

    # -- transcendental-ish operations (finite here by nilpotency) -----------

    def exp(self) -> GradedClass:
        """exp of a class with zero constant term; a finite sum."""
        if self.constant_term():
            raise ValueError("exp needs a nilpotent argument (zero constant term)")
        out = self.model.one()
        power = self.model.one()
        for k in range(1, self.model.truncation_degree + 1):
            power = power * self
            if power.is_zero():
                break
            out = out + power * Fraction(1, factorial(k))
        return out

    def inverse(self) -> GradedClass:
        """Multiplicative inverse of a unit, via the geometric series."""
        c = self.constant_term()
        if not c:
            raise ValueError("only units (nonzero constant term) are invertible")
        nil = 1 - self / c          # nilpotent part, sign folded in
        out = self.model.one()
        power = self.model.one()
        for _ in range(self.model.truncation_degree):
            power = power * nil
            if power.is_zero():
                break
            out = out + power
        return out / c

    # -- identity and canonical forms ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.model.constant(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        return (self.model == other.model and self._den == other._den
                and self._ints == other._ints)

    def __hash__(self):
        return hash((self.model, self._den, frozenset(self._ints.items())))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: IntersectionModel.monomial_key(kv[0]))

    def to_text(self) -> str:
        """Canonical text form, graded-lex term order, e.g. "1 + 1/2 * D1"."""
        if not self._ints:
            return "0"
        parts = []
        for mon, coef in self.sorted_terms():
            if sum(mon) == 0:
                parts.append(rational_text(coef))
            else:
                parts.append(f"{rational_text(coef)} * {self.model.monomial_text(mon)}")
        return " + ".join(parts)

    def terms_json(self) -> dict[str, str]:
        """Canonical {monomial: coefficient} map with "p/q" values."""
        return {self.model.monomial_text(mon): rational_text(coef)
                for mon, coef in self.sorted_terms()}

    def __repr__(self):
        return f"<{self.to_text()}>"


# -- weighted exponential integrals -------------------------------------------


def integrate_exp(model: IntersectionModel, a: Rat, b: Rat, i: int) -> GradedClass:
    """The class of integral_a^b exp(-t * D_{i+1}) dt, exactly.

    Expanding the exponential and integrating termwise gives
    sum_k (-1)^k (b^{k+1} - a^{k+1}) / (k+1)! * D^k, a finite sum in the
    truncated ring.  Defined for any rational bounds; orientation
    matters (swapping a and b negates the class).
    """
    a, b = Fraction(a), Fraction(b)
    if not 0 <= i < model.num_divisors:
        raise IndexError(f"divisor index {i} out of range")
    width = len(model.generator_names)
    terms = {}
    for k in range(model.truncation_degree + 1):
        mon = tuple(k if j == i else 0 for j in range(width))
        terms[mon] = Fraction((-1) ** k, factorial(k + 1)) * (b ** (k + 1) - a ** (k + 1))
    return GradedClass(model, terms)


def eab_factor(model: IntersectionModel, a: Rat, i: int) -> GradedClass:
    """The class (1 - exp(-a * D_{i+1})) / D_{i+1}, exactly.

    The numerator is divisible by D, so the quotient is the honest
    polynomial sum_k (-1)^k a^{k+1} / (k+1)! * D^k.  It satisfies
    eab_factor(a, i) * D_{i+1} = 1 - exp(-a * D_{i+1}) and
    eab_factor(1, i) = integrate_exp(0, 1, i); eab_factor(0, i) = 0.
    """
    return integrate_exp(model, 0, a, i)
