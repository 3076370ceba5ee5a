"""Hyperspace proximity, strict affine contractions and IFS iteration."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .geometry import (
    Ball,
    BallUnion,
    Level,
    canonical_level_swing_sequence,
    check_radius,
    in_level_set,
    level_cmp,
    region_subset,
    sum_roll,
)
from .laurent import Laurent, parse_laurent
from .sampling import rand_laurent, rand_radius, rand_tail

__all__ = [
    "ContractionError",
    "ContractionMap",
    "IFS",
    "IterationReport",
    "StepRecord",
    "alpha_close_check",
    "alpha_close_witness",
    "alpha_preserving_check",
    "apply_ifs",
    "contraction_degree",
    "hyper_in",
    "in_hyper_level_set",
    "iterate_to_fixed",
    "level_structured_witness",
    "proximity_point",
    "strict_scale",
]


def hyper_in(B, A, r):
    """``B in beta_H(A, r)``: each set lies inside the other's sum r-roll."""
    return region_subset(B, sum_roll(A, r)) and region_subset(A, sum_roll(B, r))


def in_hyper_level_set(B, A, r, depth):
    """Finite-depth stand-in for ``B in L_H(A, r)`` along the canonical level swing sequence."""
    return all(hyper_in(B, A, s) for s in canonical_level_swing_sequence(r, depth))


# -- contractions ---------------------------------------------------------


class ContractionError(ValueError):
    pass


def _degree(a):
    """Least ``N >= 1`` with ``2 |a|^N <= 1``; raises when none exists."""
    mag = abs(a)
    if not mag:
        raise ContractionError("slope must be nonzero")
    if mag.valuation > 0:
        return 1
    if mag.valuation < 0 or mag.lead >= 1:
        # |a| >= 1 at leading order: powers never drop to 1/2
        raise ContractionError(f"slope {a} has no contraction degree")
    q = float(mag.lead)
    bound = math.ceil(math.log(2) / -math.log(q)) + 2
    power = mag
    for n in range(1, bound + 1):
        if 2 * power <= 1:
            return n
        power = power * mag
    raise ContractionError(f"slope {a} has no contraction degree")  # pragma: no cover


@dataclass(frozen=True)
class ContractionMap:
    """Affine map ``y -> a*y + b`` with radius function ``s(r) = |a| r``."""

    a: Laurent
    b: Laurent = field(default_factory=Laurent)
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        a = self.a if isinstance(self.a, Laurent) else parse_laurent(str(self.a))
        b = self.b if isinstance(self.b, Laurent) else parse_laurent(str(self.b))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "degree", _degree(a))

    def __call__(self, y):
        return self.a * y + self.b

    def strict_scale(self, r):
        return abs(self.a) * r

    def image(self, ball):
        return Ball(self(ball.center), abs(self.a) * ball.radius)

    def __str__(self):
        return f"map a={self.a.literal()} b={self.b.literal()}"


def strict_scale(m, r):
    return m.strict_scale(check_radius(r))


def contraction_degree(m):
    return m.degree


@dataclass(frozen=True)
class IFS:
    maps: tuple
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        if not self.maps:
            raise ValueError("an IFS needs at least one map")

    @property
    def degree(self):
        return max(m.degree for m in self.maps)

    @property
    def max_slope(self):
        return max(abs(m.a) for m in self.maps)

    def __call__(self, A):
        return apply_ifs(self, A)

    def __len__(self):
        return len(self.maps)


def apply_ifs(F, A):
    """``F(A) = union of f_i(A)``, image balls grouped by map."""
    return BallUnion(m.image(b) for m in F.maps for b in A)


# -- iteration ------------------------------------------------------------


@dataclass
class StepRecord:
    step: int
    ball_count: int
    certificate_radius: Laurent | None = None
    invariance_radius: Laurent | None = None

    def to_dict(self):
        lit = lambda v: None if v is None else v.literal()
        return {
            "step": self.step,
            "ball_count": self.ball_count,
            "certificate_radius": lit(self.certificate_radius),
            "invariance_radius": lit(self.invariance_radius),
        }


@dataclass
class IterationReport:
    target: Laurent
    steps: list
    converged_at: int | None
    final: BallUnion

    @property
    def converged(self):
        return self.converged_at is not None

    def to_dict(self):
        return {
            "target": self.target.literal(),
            "converged": self.converged,
            "converged_at": self.converged_at,
            "steps": [s.to_dict() for s in self.steps],
        }


def iterate_to_fixed(F, seed, target, max_steps, stop_on_certificate=True):
    """Iterate ``A_{n+1} = F(A_n)`` until ``A_{n+1}`` is ``target``-close to ``A_n``.

    At the first certified step the invariance check looks one step further:
    ``F(A_{n+1})`` must again lie in ``beta_H(A_{n+1}, target)``.  Running out of
    steps is reported through ``converged_at = None``.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    target = check_radius(target)
    A = seed
    steps = []
    converged_at = None
    for n in range(max_steps):
        nxt = F(A)
        rec = StepRecord(n, len(A))
        if hyper_in(nxt, A, target):
            rec.certificate_radius = target
            if converged_at is None:
                converged_at = n
                if hyper_in(F(nxt), nxt, target):
                    rec.invariance_radius = target
        steps.append(rec)
        A = nxt
        if converged_at is not None and stop_on_certificate:
            break
    return IterationReport(target, steps, converged_at, A)


# -- proximity sets and alpha-closeness -----------------------------------


def proximity_point(x, r):
    """``alpha_{x,r}``: ``x`` truncated to exponents at or above the level of ``r``."""
    return x.truncate(check_radius(r).valuation)


def alpha_close_witness(A, r):
    """Per level class of ``L(., r)`` touched by ``A``, a radius ``s <_L r`` covering it.

    Returns ``{alpha: s}`` or None.  A ball whose radius is not finer than ``r``
    contains a whole level class, which no ball of a finer radius covers.
    """
    r = check_radius(r)
    v = r.valuation
    reach = {}
    for b in A:
        if not b.is_singleton and b.radius.valuation <= v:
            return None
        alpha = proximity_point(b.center, r)
        d = abs(b.center - alpha) + b.radius
        reach[alpha] = max(reach.get(alpha, Laurent()), d)
    cover = {alpha: 2 * d if d else Laurent.monomial(1, v + 1) for alpha, d in reach.items()}
    for b in A:
        alpha = proximity_point(b.center, r)
        s = cover[alpha]
        if level_cmp(r, s) is not Level.LOWER or not region_subset(b, Ball(alpha, s)):
            return None  # pragma: no cover
    return cover


def alpha_close_check(A, levels):
    return all(alpha_close_witness(A, r) is not None for r in levels)


def alpha_preserving_check(m, samples, rng=None):
    """Check the level-set and proximity-point conditions on sampled ``(x, r)``.

    ``m`` only needs ``m(y)`` and ``m.strict_scale(r)``, so tests can hand in
    deliberately broken maps.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = rng or random.Random(0)
    for _ in range(samples):
        x = rand_laurent(rng, -3, 3)
        r = rand_radius(rng, -2, 2)
        v = r.valuation
        sr = m.strict_scale(r)
        fx = m(x)
        if not in_level_set(m(proximity_point(x, r)), proximity_point(fx, sr), sr):
            return False
        inside = x + rand_tail(rng, v, v + 3)
        if not in_level_set(m(inside), fx, sr):
            return False
        outside = x + Laurent.monomial(1 + rng.randint(0, 5), v - rng.randint(0, 2)) + rand_tail(rng, v, v + 3)
        if in_level_set(m(outside), fx, sr):
            return False
    return True


def level_structured_witness(A, B, r):
    """A ``t <_L r`` with ``B in beta_H(A, t)`` built from alpha-closeness data.

    Every ball of each set is paired with a ball of the other set in the same
    level class of ``L(., r)``; None if the sets are not alpha-close at ``r`` or
    some class is missing on one side.
    """
    r = check_radius(r)
    if alpha_close_witness(A, r) is None or alpha_close_witness(B, r) is None:
        return None
    by_class = {}
    for b in A:
        by_class.setdefault(proximity_point(b.center, r), []).append(b)
    b_class = {}
    for b in B:
        b_class.setdefault(proximity_point(b.center, r), []).append(b)
    if set(by_class) != set(b_class):
        return None
    t = Laurent()
    for alpha, balls_a in by_class.items():
        for p in balls_a:
            for q in b_class[alpha]:
                t = max(t, abs(p.center - q.center) + p.radius + q.radius)
    t = 2 * t if t else Laurent.monomial(1, r.valuation + 1)
    if level_cmp(r, t) is not Level.LOWER or not hyper_in(B, A, t):
        return None
    return t
