"""Locally abelian parabolic bundles: weighted sums of line summands.

A bundle here is a finite direct sum of *line summands*.  Each summand
is an honest line bundle (recorded by its first Chern class, a
degree-one element of the ambient intersection ring) together with one
jump position -- a riser of the corresponding ladder -- on every
boundary divisor.  The weight functions on the ladders then equip the
sum with its parabolic structure.

Everything downstream consumes the bundle through a small set of
derived classes:

* ``ch_vb``           -- Chern character of the underlying sum of lines;
* ``ch_vb_sigma``     -- same for the twisted subsheaf E_sigma picked out
                         by a tread multi-index sigma (each summand gets
                         twisted by -D_i exactly on the divisors where
                         its jump sits at or above sigma_i);
* ``graded_piece``    -- the multigraded jump piece supported on an
                         intersection of divisors, with its rank and the
                         pushforward of its Chern character (projection
                         formula: multiply by prod D_i, one intersection
                         component per subset);
* ``ch_of_pushforward`` -- the same pushforward corrected by the
                         (1 - exp(-D_i))/D_i factor of each divisor in
                         the support, i.e. the class the structure sheaf
                         sequence 0 -> O(-D) -> O -> O_D -> 0 dictates;
* ``quotient_class``  -- the sum of ch_of_pushforward over all pieces
                         jumping strictly above a given tread
                         multi-index, the building block of the sheafy
                         inclusion-exclusion for E_sigma.

Bundles are immutable; expensive derived classes are memoized on a
private per-bundle cache, which is sound because every derived value is
a pure function of the construction data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .chow import GradedClass, IntersectionModel, eab_factor
from .ladders import Ladder, WeightFunction


@dataclass(frozen=True)
class LineSummand:
    """One line bundle with a jump riser on every boundary divisor."""

    c1: GradedClass
    jumps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "jumps", tuple(int(j) for j in self.jumps))
        if not self.c1.is_homogeneous(1):
            raise ValueError(f"summand c1 must be homogeneous of degree one, got {self.c1!r}")


@dataclass(frozen=True)
class GradedPiece:
    """A jump piece on the intersection of the divisors in ``support``.

    ``pushforward_ch`` is the raw projection-formula pushforward of the
    piece's Chern character: (sum of exp(c1) over matching summands)
    times prod of [D_i] over the support.  No structure-sheaf
    correction factors are applied here.
    """

    support: tuple[int, ...]
    risers: tuple[int, ...]
    rank: int
    pushforward_ch: GradedClass


@dataclass(frozen=True)
class ParabolicBundle:
    model: IntersectionModel
    weights: tuple[WeightFunction, ...]
    summands: tuple[LineSummand, ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "summands", tuple(self.summands))
        n = self.model.num_divisors
        if len(self.weights) != n:
            raise ValueError(f"need one weight function per divisor ({n}), got {len(self.weights)}")
        for i, s in enumerate(self.summands):
            if s.c1.model != self.model:
                raise ValueError(f"summand {i}: c1 lives in a different intersection model")
            if len(s.jumps) != n:
                raise ValueError(f"summand {i}: need one jump per divisor ({n}), got {len(s.jumps)}")
            for div, r in enumerate(s.jumps):
                if not 0 <= r < self.ladder(div).num_risers:
                    raise ValueError(f"summand {i}: jump {r} is not a riser of ladder {div}")

    # -- shape ------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.summands)

    @property
    def num_divisors(self) -> int:
        return self.model.num_divisors

    def ladder(self, i: int) -> Ladder:
        return self.weights[i].ladder

    @property
    def ladders(self) -> tuple[Ladder, ...]:
        return tuple(w.ladder for w in self.weights)

    def sigma_grid(self):
        """All tread multi-indices, lexicographically."""
        return itertools.product(*(self.ladder(i).tread_range()
                                   for i in range(self.num_divisors)))

    def supports(self):
        """All nonempty divisor subsets, by size then lexicographically."""
        n = self.num_divisors
        for q in range(1, n + 1):
            yield from itertools.combinations(range(n), q)

    def riser_grid(self, support: tuple[int, ...]):
        """All riser multi-indices over a support, lexicographically."""
        return itertools.product(*(self.ladder(i).riser_range() for i in support))

    def check_sigma(self, sigma) -> tuple[int, ...]:
        sigma = tuple(int(k) for k in sigma)
        if len(sigma) != self.num_divisors:
            raise ValueError(f"sigma needs {self.num_divisors} entries, got {len(sigma)}")
        for i, k in enumerate(sigma):
            self.ladder(i)._check_tread(k)
        return sigma


# -- memoized primitives -------------------------------------------------------


def _exp_c1(bundle: ParabolicBundle, j: int) -> GradedClass:
    key = ("exp_c1", j)
    out = bundle._cache.get(key)
    if out is None:
        out = bundle._cache[key] = bundle.summands[j].c1.exp()
    return out


def _exp_minus_divisor(bundle: ParabolicBundle, i: int) -> GradedClass:
    key = ("exp_minus_d", i)
    out = bundle._cache.get(key)
    if out is None:
        out = bundle._cache[key] = (-bundle.model.divisor(i)).exp()
    return out


def _twist_exp(bundle: ParabolicBundle, gamma: tuple[int, ...]) -> GradedClass:
    """exp(sum_i gamma_i * D_i) for a twist vector gamma in {0, -1}^n."""
    key = ("twist_exp", gamma)
    out = bundle._cache.get(key)
    if out is None:
        out = bundle.model.one()
        for i, g in enumerate(gamma):
            if g == -1:
                out = out * _exp_minus_divisor(bundle, i)
        bundle._cache[key] = out
    return out


def _eab_one(bundle: ParabolicBundle, i: int) -> GradedClass:
    key = ("eab_one", i)
    out = bundle._cache.get(key)
    if out is None:
        out = bundle._cache[key] = eab_factor(bundle.model, 1, i)
    return out


# -- the derived classes -------------------------------------------------------


def ch_vb(bundle: ParabolicBundle) -> GradedClass:
    """Chern character of the underlying vector bundle (sum of lines)."""
    out = bundle._cache.get("ch_vb")
    if out is None:
        out = bundle.model.zero()
        for j in range(bundle.rank):
            out = out + _exp_c1(bundle, j)
        bundle._cache["ch_vb"] = out
    return out


def twist_vector(bundle: ParabolicBundle, sigma, j: int) -> tuple[int, ...]:
    """Twists gamma in {0,-1}^n of summand j inside E_sigma: 0 exactly on
    the divisors where the summand's jump riser sits strictly below the
    tread sigma_i."""
    sigma = bundle.check_sigma(sigma)
    jumps = bundle.summands[j].jumps
    return tuple(0 if bundle.ladder(i).riser_below_tread(jumps[i], k) else -1
                 for i, k in enumerate(sigma))


def _twisted_group(bundle: ParabolicBundle, gamma: tuple[int, ...],
                   js: tuple[int, ...]) -> GradedClass:
    """(sum of exp(c1_j) over js) * exp(sum gamma_i D_i), memoized; summands
    sharing a twist vector are multiplied through in one go."""
    key = ("twisted_group", gamma, js)
    out = bundle._cache.get(key)
    if out is None:
        group_key = ("c1_group", js)
        group = bundle._cache.get(group_key)
        if group is None:
            group = bundle.model.zero()
            for j in js:
                group = group + _exp_c1(bundle, j)
            bundle._cache[group_key] = group
        out = bundle._cache[key] = group * _twist_exp(bundle, gamma)
    return out


def ch_vb_sigma(bundle: ParabolicBundle, sigma) -> GradedClass:
    """Chern character of the twisted subsheaf E_sigma."""
    sigma = bundle.check_sigma(sigma)
    key = ("ch_vb_sigma", sigma)
    out = bundle._cache.get(key)
    if out is None:
        groups: dict[tuple[int, ...], list[int]] = {}
        for j in range(bundle.rank):
            groups.setdefault(twist_vector(bundle, sigma, j), []).append(j)
        out = bundle.model.zero()
        for gamma, js in groups.items():
            out = out + _twisted_group(bundle, gamma, tuple(js))
        bundle._cache[key] = out
    return out


def _check_support(bundle: ParabolicBundle, support, risers) -> tuple[tuple[int, ...], tuple[int, ...]]:
    support = tuple(int(i) for i in support)
    risers = tuple(int(r) for r in risers)
    if len(set(support)) != len(support) or sorted(support) != list(support):
        raise ValueError(f"support must be a sorted set of divisor indices, got {support}")
    if len(risers) != len(support):
        raise ValueError("need one riser per support divisor")
    for i, r in zip(support, risers):
        bundle.ladder(i)._check_riser(r)
    return support, risers


def graded_piece(bundle: ParabolicBundle, support, risers) -> GradedPiece:
    """The jump piece of multidegree ``risers`` along ``support``."""
    support, risers = _check_support(bundle, support, risers)
    key = ("piece", support, risers)
    out = bundle._cache.get(key)
    if out is None:
        matching = [j for j in range(bundle.rank)
                    if all(bundle.summands[j].jumps[i] == r for i, r in zip(support, risers))]
        ch = bundle.model.zero()
        for j in matching:
            ch = ch + _exp_c1(bundle, j)
        for i in support:
            ch = ch * bundle.model.divisor(i)
        out = GradedPiece(support, risers, len(matching), ch)
        bundle._cache[key] = out
    return out


def ch_of_pushforward(bundle: ParabolicBundle, support, risers) -> GradedClass:
    """ch of the graded piece pushed forward from its intersection locus,
    with the (1 - exp(-D_i))/D_i correction of each support divisor."""
    support, risers = _check_support(bundle, support, risers)
    key = ("ch_push", support, risers)
    out = bundle._cache.get(key)
    if out is None:
        out = graded_piece(bundle, support, risers).pushforward_ch
        for i in support:
            out = out * _eab_one(bundle, i)
        bundle._cache[key] = out
    return out


def _suffix_table(bundle: ParabolicBundle, support: tuple[int, ...]) -> dict:
    """Map riser multi-index lam to sum of ch_of_pushforward over mu >= lam
    (componentwise), built by one pass of suffix sums per axis."""
    key = ("suffix", support)
    table = bundle._cache.get(key)
    if table is not None:
        return table
    axes = [bundle.ladder(i).riser_range() for i in support]
    table = {lam: ch_of_pushforward(bundle, support, lam)
             for lam in itertools.product(*axes)}
    for ax in range(len(support)):
        others = [rng for k, rng in enumerate(axes) if k != ax]
        for rest in itertools.product(*others):
            for v in range(len(axes[ax]) - 2, -1, -1):
                here = rest[:ax] + (v,) + rest[ax:]
                above = rest[:ax] + (v + 1,) + rest[ax:]
                table[here] = table[here] + table[above]
    bundle._cache[key] = table
    return table


def quotient_class(bundle: ParabolicBundle, support, treads) -> GradedClass:
    """Sum of ch_of_pushforward over all riser multi-indices jumping
    strictly above the given treads (tread k < riser r means r >= k)."""
    support = tuple(int(i) for i in support)
    treads = tuple(int(k) for k in treads)
    if len(treads) != len(support):
        raise ValueError("need one tread per support divisor")
    for i, k in zip(support, treads):
        bundle.ladder(i)._check_tread(k)
    table = _suffix_table(bundle, support)
    return table.get(treads, bundle.model.zero())
