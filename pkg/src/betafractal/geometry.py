"""Balls, swing sequences, rolls and sum rolls on the line of Laurent polynomials.

Every region handled here is a finite union of order intervals.  Interval
endpoints are *cuts*: a cut ``(p, k, side)`` sits at ``p + side * eps_k`` where
``eps_k`` behaves like ``x^(k + 1/2)`` (bigger than anything of valuation
``> k``, smaller than anything of valuation ``<= k``) and ``eps_inf`` is below
every positive element.  No cut coincides with a point, so membership and
inclusion tests never face a tie.

* open ball ``(c - r, c + r)``: lower cut ``(c - r, inf, +1)``, upper ``(c + r, inf, -1)``
* sum roll of ``beta(c, s)`` at scale ``r``: ``(c - s - 2r, v, +1)`` .. ``(c + s + 2r, v, -1)``
  with ``v = valuation(r)``
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from itertools import islice

from .laurent import INF, Laurent, X, parse_laurent

__all__ = [
    "Ball",
    "BallUnion",
    "Cut",
    "Interval",
    "IntervalUnion",
    "Level",
    "SumRollRegion",
    "SwingSequence",
    "canonical_level_swing_sequence",
    "check_radius",
    "closure",
    "dump_regions",
    "in_ball",
    "in_level_set",
    "is_swing_value",
    "iterated_roll",
    "level_cmp",
    "level_countable_index",
    "level_swing_sequence",
    "load_regions",
    "openness_radius",
    "region_subset",
    "roll",
    "structured_radius",
    "sum_roll",
    "sum_roll_member",
]


def _as_laurent(value):
    return value if isinstance(value, Laurent) else parse_laurent(value) if isinstance(value, str) else Laurent.const(value)


def check_radius(r):
    r = _as_laurent(r)
    if r.sign <= 0:
        raise ValueError(f"radius must be positive, got {r}")
    return r


# -- levels and swing values ----------------------------------------------


class Level(Enum):
    LOWER = "lower"
    EQUAL = "equal"
    HIGHER = "higher"


def level_cmp(r, s):
    """Level of ``s`` relative to ``r``: LOWER means ``s <_L r`` (a finer scale)."""
    vr, vs = _as_laurent(r).valuation, _as_laurent(s).valuation
    if vs > vr:
        return Level.LOWER
    if vs < vr:
        return Level.HIGHER
    return Level.EQUAL


def is_swing_value(s, r, level=False):
    """``2s <= r``; with ``level=True`` also require ``s =_L r``."""
    s, r = _as_laurent(s), _as_laurent(r)
    if s.sign <= 0 or r.sign <= 0:
        return False
    if level and s.valuation != r.valuation:
        return False
    return 2 * s <= r


def level_swing_sequence(r):
    """Infinite generator ``r, r/2, r/4, ...``."""
    r = check_radius(r)
    while True:
        yield r
        r = r / 2


@dataclass(frozen=True)
class SwingSequence:
    radii: tuple

    def __post_init__(self):
        if not self.radii:
            raise ValueError("a swing sequence needs at least one radius")
        object.__setattr__(self, "radii", tuple(check_radius(r) for r in self.radii))

    def __len__(self):
        return len(self.radii)

    def __iter__(self):
        return iter(self.radii)

    def __getitem__(self, i):
        return self.radii[i]

    def is_swing(self):
        return all(is_swing_value(b, a) for a, b in zip(self.radii, self.radii[1:]))

    def is_level(self):
        v = self.radii[0].valuation
        return self.is_swing() and all(r.valuation == v for r in self.radii)


def canonical_level_swing_sequence(r, n):
    if n < 1:
        raise ValueError("n must be at least 1")
    return SwingSequence(tuple(islice(level_swing_sequence(r), n)))


def level_countable_index(r, s):
    """Least ``k >= 1`` with ``r / 2^(k-1) <= s``, for ``s =_L r``.

    Found from the leading coefficients; the exact comparison only decides
    between two neighbouring candidates.
    """
    r, s = check_radius(r), check_radius(s)
    if r.valuation != s.valuation:
        raise ValueError("level countability needs radii on the same level")
    j = 0
    while r.lead > s.lead * 2**j:
        j += 1
    if r / 2**j <= s:
        return j + 1
    return j + 2


def in_level_set(y, x, r):
    """``y`` in L(x, r): equal to ``x`` or differing only below the level of ``r``."""
    d = _as_laurent(y) - _as_laurent(x)
    return not d or d.valuation > _as_laurent(r).valuation


# -- cuts and intervals ---------------------------------------------------


def _half_exponent(level):
    return INF if level == INF else 2 * level + 1


@dataclass(frozen=True)
class Cut:
    """A gap ``point + side * eps_level`` in the order of the line."""

    point: Laurent
    level: object  # int or INF
    side: int

    def __post_init__(self):
        if self.side not in (-1, 1):
            raise ValueError("side must be -1 or +1")
        # the gap only depends on the terms at or above its level
        object.__setattr__(self, "point", _as_laurent(self.point).truncate(self.level))

    def compare(self, other):
        """Sign of ``self - other``; ``other`` is a Cut or a Laurent point."""
        if isinstance(other, Cut):
            return -_signed_gap(self, other)
        return -_signed_gap(self, _PointCut(_as_laurent(other)))

    def __lt__(self, other):
        return self.compare(other) < 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def shift(self, d):
        return Cut(self.point + d, self.level, self.side)

    def negate(self):
        return Cut(-self.point, self.level, -self.side)


@dataclass(frozen=True)
class _PointCut:
    point: Laurent
    level: object = INF
    side: int = 0


def _signed_gap(a, b):
    """Sign of ``b - a`` for cuts or points."""
    low = {}
    d = b.point - a.point
    if d:
        low[2 * d.valuation] = d.sign
    for cut, mult in ((b, 1), (a, -1)):
        if cut.side:
            e = _half_exponent(cut.level)
            low[e] = low.get(e, 0) + mult * cut.side
    live = [(e, c) for e, c in low.items() if c]
    if not live:
        return 0
    e, c = min(live, key=lambda t: t[0])
    return 1 if c > 0 else -1


def _add_cuts(a, b, upper):
    level = min(a.level, b.level)
    if a.level < b.level:
        side = a.side
    elif b.level < a.level:
        side = b.side
    else:
        # openness wins: the supremum of a sum is not attained if either part's is not
        open_side = -1 if upper else 1
        side = open_side if open_side in (a.side, b.side) else a.side
    return Cut(a.point + b.point, level, side)


@dataclass(frozen=True)
class Interval:
    lo: Cut
    hi: Cut

    def contains(self, y):
        y = _as_laurent(y)
        return self.lo.compare(y) < 0 and self.hi.compare(y) > 0

    def is_empty(self):
        return self.lo.compare(self.hi) >= 0

    def __add__(self, other):
        """Minkowski sum."""
        return Interval(_add_cuts(self.lo, other.lo, upper=False), _add_cuts(self.hi, other.hi, upper=True))

    def shift(self, d):
        return Interval(self.lo.shift(d), self.hi.shift(d))

    def intervals(self):
        return (self,)

    @classmethod
    def open_ball(cls, c, r):
        return cls(Cut(c - r, INF, 1), Cut(c + r, INF, -1))

    @classmethod
    def point(cls, c):
        return cls(Cut(c, INF, -1), Cut(c, INF, 1))

    @classmethod
    def reach(cls, r):
        """The set of displacements achievable by a sum roll of scale ``r``."""
        r = check_radius(r)
        v = r.valuation
        return cls(Cut(-2 * r, v, 1), Cut(2 * r, v, -1))


@dataclass(frozen=True)
class IntervalUnion:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    def intervals(self):
        return self.parts

    def contains(self, y):
        return any(iv.contains(y) for iv in self.parts)

    def __len__(self):
        return len(self.parts)


# -- balls ----------------------------------------------------------------


@dataclass(frozen=True)
class Ball:
    """Open ball ``{y : |y - center| < radius}``.

    ``radius == 0`` is allowed and stands for the singleton ``{center}``.
    """

    center: Laurent
    radius: Laurent

    def __post_init__(self):
        object.__setattr__(self, "center", _as_laurent(self.center))
        object.__setattr__(self, "radius", _as_laurent(self.radius))
        if self.radius.sign < 0:
            raise ValueError(f"negative ball radius {self.radius}")

    @classmethod
    def singleton(cls, c):
        return cls(c, Laurent())

    @property
    def is_singleton(self):
        return not self.radius

    def contains(self, y):
        d = abs(_as_laurent(y) - self.center)
        if self.is_singleton:
            return not d
        return d < self.radius

    def interval(self):
        if self.is_singleton:
            return Interval.point(self.center)
        return Interval.open_ball(self.center, self.radius)

    def intervals(self):
        return (self.interval(),)

    def __str__(self):
        return f"beta({self.center}, {self.radius})"


def in_ball(y, b):
    return b.contains(y)


class BallUnion:
    """Finite nonempty union of balls; equality of the denoted sets is semantic."""

    __slots__ = ("balls",)

    def __init__(self, balls):
        balls = tuple(balls)
        if not balls:
            raise ValueError("a ball union must contain at least one ball")
        for b in balls:
            if not isinstance(b, Ball):
                raise TypeError(f"expected Ball, got {type(b).__name__}")
        self.balls = balls

    @classmethod
    def of(cls, *pairs):
        """``BallUnion.of((c, r), ...)`` with literals or numbers."""
        return cls(Ball(c, r) for c, r in pairs)

    def __iter__(self):
        return iter(self.balls)

    def __len__(self):
        return len(self.balls)

    def __repr__(self):
        return "BallUnion([" + ", ".join(str(b) for b in self.balls) + "])"

    @property
    def centers(self):
        return [b.center for b in self.balls]

    def contains(self, y):
        return any(b.contains(y) for b in self.balls)

    def intervals(self):
        return tuple(b.interval() for b in self.balls)

    def set_equal(self, other):
        return region_subset(self, other) and region_subset(other, self)


def closure(ball):
    """Order closure ``[c - r, c + r]`` of an open ball."""
    if ball.is_singleton:
        return Interval.point(ball.center)
    return Interval(Cut(ball.center - ball.radius, INF, -1), Cut(ball.center + ball.radius, INF, 1))


# -- rolls ----------------------------------------------------------------


def roll(A, r):
    """``R_beta(A, r)``: every ball grows by ``r`` (a singleton becomes ``beta(c, r)``)."""
    r = check_radius(r)
    return BallUnion(Ball(b.center, b.radius + r) for b in A)


def iterated_roll(A, seq, n):
    if n < 1:
        raise ValueError("n must be at least 1")
    radii = list(seq)[:n]
    if len(radii) < n:
        raise ValueError(f"swing sequence has only {len(radii)} radii, {n} requested")
    for r in radii:
        A = roll(A, r)
    return A


@dataclass(frozen=True)
class SumRollRegion:
    """Sum roll of one ball: ``|y - c| < s + q * 2r`` for some rational ``q < 1``."""

    base: Ball
    scale: Laurent

    def __post_init__(self):
        object.__setattr__(self, "scale", check_radius(self.scale))

    def contains(self, y):
        return _sum_roll_ball_member(_as_laurent(y), self.base, self.scale)

    def interval(self):
        return self.base.interval() + Interval.reach(self.scale)

    def intervals(self):
        return (self.interval(),)


def _sum_roll_ball_member(y, ball, r):
    d = abs(y - ball.center) - ball.radius
    if d.sign <= 0:
        return True
    v = r.valuation
    if d.valuation > v:
        return True
    return d.valuation == v and d.lead < 2 * r.lead


def sum_roll_member(y, A, r):
    """Closed-form membership in ``R_Sigma(A, r)``.

    Level swing sequences inflate by totals whose leading coefficient stays
    strictly under ``2 * lead(r)``, so the excess distance ``d`` must be
    non-positive, of a finer level than ``r``, or on ``r``'s level with a
    leading coefficient below ``2 * lead(r)``.
    """
    y, r = _as_laurent(y), check_radius(r)
    return any(_sum_roll_ball_member(y, b, r) for b in A)


def sum_roll(region, r):
    """``R_Sigma(region, r)`` for any region exposing ``intervals()``."""
    reach = Interval.reach(r)
    return IntervalUnion(iv + reach for iv in region.intervals())


# -- inclusion ------------------------------------------------------------


def _interval_covered(target, pieces):
    cur = target.lo
    stop = target.hi
    pending = sorted(pieces, key=cmp_to_key(lambda a, b: a.lo.compare(b.lo)))
    best = None
    i = 0
    while cur.compare(stop) < 0:
        while i < len(pending) and pending[i].lo.compare(cur) <= 0:
            hi = pending[i].hi
            if best is None or hi.compare(best) > 0:
                best = hi
            i += 1
        if best is None or best.compare(cur) <= 0:
            return False
        cur = best
    return True


def region_subset(inner, outer):
    """Exact set inclusion between regions (anything with ``intervals()``)."""
    pieces = [iv for iv in outer.intervals() if not iv.is_empty()]
    for iv in inner.intervals():
        if iv.is_empty():
            continue
        if not _interval_covered(iv, pieces):
            return False
    return True


def openness_radius(region, y, r):
    """A ball radius ``s =_L r`` with ``beta(y, s)`` inside ``region``, or None."""
    y, r = _as_laurent(y), check_radius(r)
    v = r.valuation
    for iv in region.intervals():
        if not iv.contains(y):
            continue
        s = r
        for gap in (iv.hi.point - y, y - iv.lo.point):
            if gap.sign <= 0 or gap.valuation > v:
                s = None
                break
            if gap.valuation == v:
                s = min(s, Laurent.monomial(gap.lead / 2, v))
        if s is not None and region_subset(Ball(y, s), region):
            return s
    return None


def structured_radius(A, B):
    """A ``t`` with ``B`` inside ``R_beta(A, t)``: twice the max of centre gap plus radius.

    Doubling keeps the inclusion strict when both sides are singletons.
    """
    t = max(abs(b.center - a.center) + b.radius for a in A for b in B)
    if not t:
        # identical singletons; any radius works
        return Laurent.const(1)
    return 2 * t


# -- region dump ----------------------------------------------------------


def dump_regions(regions):
    """One region per line: ``ball <c> <r>`` or ``sumroll <c> <base> <scale>``."""
    lines = []
    for region in regions:
        if isinstance(region, Ball):
            lines.append(f"ball {region.center.literal()} {region.radius.literal()}")
        elif isinstance(region, SumRollRegion):
            b = region.base
            lines.append(f"sumroll {b.center.literal()} {b.radius.literal()} {region.scale.literal()}")
        else:
            raise TypeError(f"cannot dump {type(region).__name__}")
    return "\n".join(lines) + ("\n" if lines else "")


def load_regions(text):
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "ball" and len(fields) == 3:
            out.append(Ball(parse_laurent(fields[1]), parse_laurent(fields[2])))
        elif kind == "sumroll" and len(fields) == 4:
            out.append(SumRollRegion(Ball(parse_laurent(fields[1]), parse_laurent(fields[2])), parse_laurent(fields[3])))
        else:
            raise ValueError(f"line {lineno}: unrecognised region {line!r}")
    return out
