"""Ladder combinatorics for jump data along a boundary divisor.

A *ladder* records where a filtered object can jump along one divisor:
an ordered list of treads t_0 < t_1 < ... < t_m (the filtration steps,
at least two) separated by m *risers* (the gaps where jumps happen).
Tread k and riser r are plain integer indices here, with riser r lying
strictly between treads r and r+1; the bottom tread is 0 and the top
tread is m.

Tread functions send a riser to the tread just below (`m_minus`) or
just above (`m_plus`) it; riser functions send a tread to the riser
just above (`c_plus`, undefined at the top) or just below (`c_minus`,
undefined at the bottom).  Undefined lookups raise UndefinedRiserError
rather than returning a sentinel.

A *weight function* attaches a rational weight in (-1, 0] to every
riser, non-decreasing from bottom to top.  Each tread k then owns the
half-open interval

    Dom(k) = (alpha_minus(k) + 1, alpha_plus(k) + 1]

where alpha_plus / alpha_minus read the weight of the adjacent riser
(0 above the top tread, -1 below the bottom one).  These intervals
partition (0, 1], with ties in the weights producing empty intervals.

For unbounded twisting the ladder is prolonged to all integer levels:
an *extended index* is a pair (level, tread) with the top tread of one
level glued to the bottom tread of the next, i.e. (k, top) = (k+1, 0);
extended weights add the level to the riser weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class UndefinedRiserError(LookupError):
    """Raised when asking for the riser above the top or below the bottom tread."""


@dataclass(frozen=True)
class ExtendedIndex:
    """A tread of the integer prolongation: ladder tread shifted by a level."""
    level: int
    tread: int


@dataclass(frozen=True)
class Ladder:
    treads: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "treads", tuple(str(t) for t in self.treads))
        if len(self.treads) < 2:
            raise ValueError("a ladder needs at least two treads")
        if len(set(self.treads)) != len(self.treads):
            raise ValueError(f"tread labels must be distinct: {self.treads}")

    @classmethod
    def of_risers(cls, num_risers: int) -> Ladder:
        """A ladder with anonymous treads t0 < t1 < ... < t{num_risers}."""
        if num_risers < 1:
            raise ValueError("a ladder needs at least one riser")
        return cls(tuple(f"t{k}" for k in range(num_risers + 1)))

    @property
    def num_treads(self) -> int:
        return len(self.treads)

    @property
    def num_risers(self) -> int:
        return len(self.treads) - 1

    @property
    def top(self) -> int:
        return len(self.treads) - 1

    bottom = 0

    def tread_range(self) -> range:
        return range(self.num_treads)

    def riser_range(self) -> range:
        return range(self.num_risers)

    def _check_tread(self, k: int):
        if not 0 <= k < self.num_treads:
            raise IndexError(f"tread {k} out of range 0..{self.top}")

    def _check_riser(self, r: int):
        if not 0 <= r < self.num_risers:
            raise IndexError(f"riser {r} out of range 0..{self.num_risers - 1}")

    # -- tread functions of a riser ---------------------------------------

    def m_minus(self, r: int) -> int:
        """The tread just below riser r."""
        self._check_riser(r)
        return r

    def m_plus(self, r: int) -> int:
        """The tread just above riser r."""
        self._check_riser(r)
        return r + 1

    # -- riser functions of a tread ----------------------------------------

    def c_plus(self, k: int) -> int:
        """The riser just above tread k; undefined at the top tread."""
        self._check_tread(k)
        if k == self.top:
            raise UndefinedRiserError(f"no riser above the top tread of {self}")
        return k

    def c_minus(self, k: int) -> int:
        """The riser just below tread k; undefined at the bottom tread."""
        self._check_tread(k)
        if k == self.bottom:
            raise UndefinedRiserError(f"no riser below the bottom tread of {self}")
        return k - 1

    # -- the interleaved order on treads and risers --------------------------

    def riser_below_tread(self, r: int, k: int) -> bool:
        """True when riser r lies strictly below tread k."""
        self._check_riser(r)
        self._check_tread(k)
        return r < k

    def tread_below_riser(self, k: int, r: int) -> bool:
        """True when tread k lies strictly below riser r."""
        self._check_riser(r)
        self._check_tread(k)
        return k <= r

    # -- integer prolongation -------------------------------------------------

    def extended(self, level: int, tread: int) -> ExtendedIndex:
        """Canonical form of a prolonged tread: the top tread of level k
        is identified with the bottom tread of level k+1."""
        self._check_tread(tread)
        if tread == self.top:
            return ExtendedIndex(level + 1, self.bottom)
        return ExtendedIndex(level, tread)

    def extended_key(self, idx: ExtendedIndex) -> tuple[int, int]:
        """Sort key realizing the total order on the prolongation."""
        idx = self.extended(idx.level, idx.tread)
        return (idx.level, idx.tread)

    def extended_c_plus(self, idx: ExtendedIndex) -> tuple[int, int]:
        """The (level, riser) pair just above a prolonged tread; always
        defined, since the top tread rolls over to the next level."""
        idx = self.extended(idx.level, idx.tread)
        return (idx.level, self.c_plus(idx.tread))

    def __repr__(self):
        return f"Ladder({' < '.join(self.treads)})"


@dataclass(frozen=True)
class WeightFunction:
    """Non-decreasing rational weights in (-1, 0], one per riser."""

    ladder: Ladder
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(Fraction(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if len(weights) != self.ladder.num_risers:
            raise ValueError(f"need {self.ladder.num_risers} weights, got {len(weights)}")
        for w in weights:
            if not (-1 < w <= 0):
                raise ValueError(f"weight {w} outside (-1, 0]")
        if any(a > b for a, b in zip(weights, weights[1:])):
            raise ValueError(f"weights must be non-decreasing: {weights}")

    def alpha(self, r: int) -> Fraction:
        self.ladder._check_riser(r)
        return self.weights[r]

    def alpha_plus(self, k: int) -> Fraction:
        """Weight of the riser above tread k, or 0 at the top."""
        self.ladder._check_tread(k)
        if k == self.ladder.top:
            return Fraction(0)
        return self.weights[self.ladder.c_plus(k)]

    def alpha_minus(self, k: int) -> Fraction:
        """Weight of the riser below tread k, or -1 at the bottom."""
        self.ladder._check_tread(k)
        if k == self.ladder.bottom:
            return Fraction(-1)
        return self.weights[self.ladder.c_minus(k)]

    def dom_bounds(self, k: int) -> tuple[Fraction, Fraction]:
        """Endpoints (lo, hi) of the half-open interval Dom(k) = (lo, hi]."""
        return (self.alpha_minus(k) + 1, self.alpha_plus(k) + 1)

    def extended_weight(self, level: int, r: int) -> Fraction:
        """Weight of riser r shifted into integer level `level`."""
        self.ladder._check_riser(r)
        return level + self.weights[r]

    def is_trivial(self) -> bool:
        return all(w == 0 for w in self.weights)
