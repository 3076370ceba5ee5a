"""Random Laurent polynomials, radii and ball unions for the property suites."""
from __future__ import annotations

from fractions import Fraction

from .geometry import Ball, BallUnion
from .laurent import Laurent


def rand_fraction(rng, max_den=100, max_num=None, nonzero=False):
    den = rng.randint(1, max_den)
    bound = max_num if max_num is not None else 3 * den
    while True:
        num = rng.randint(-bound, bound)
        if num or not nonzero:
            return Fraction(num, den)


def rand_laurent(rng, lo=-4, hi=4, max_terms=3, max_den=100, nonzero=False):
    while True:
        n = rng.randint(0 if not nonzero else 1, max_terms)
        terms = {}
        for _ in range(n):
            terms[rng.randint(lo, hi)] = rand_fraction(rng, max_den)
        p = Laurent(terms)
        if p or not nonzero:
            return p


def rand_tail(rng, above, hi, max_terms=2, max_den=100):
    """Random polynomial supported strictly above exponent ``above``."""
    if above >= hi:
        return Laurent()
    return rand_laurent(rng, above + 1, hi, max_terms, max_den)


def rand_radius_at(rng, v, hi=None, max_den=100):
    """Positive radius of valuation exactly ``v``."""
    hi = v + 3 if hi is None else hi
    lead = Fraction(rng.randint(1, 3 * max_den), rng.randint(1, max_den))
    return Laurent.monomial(lead, v) + rand_tail(rng, v, hi, max_den=max_den)


def rand_radius(rng, lo=-4, hi=4, max_den=100):
    return rand_radius_at(rng, rng.randint(lo, hi), hi=max(hi, lo + 1), max_den=max_den)


def rand_ball_union(rng, n_max=3, lo=-3, hi=3, level=None, max_den=50):
    """Nonempty ball union; with ``level`` all radii share that valuation."""
    balls = []
    for _ in range(rng.randint(1, n_max)):
        c = rand_laurent(rng, lo, hi, 3, max_den)
        v = level if level is not None else rng.randint(lo, hi)
        balls.append(Ball(c, rand_radius_at(rng, v, max_den=max_den)))
    return BallUnion(balls)


def rand_unit(rng, den=64):
    """Rational in the open interval (-1, 1)."""
    return Fraction(rng.randint(-den + 1, den - 1), den)


def perturb(rng, A, scale):
    """Each ball of ``A`` moved and resized by less than ``scale`` at its level."""
    v = scale.valuation
    balls = []
    for b in A:
        dc = scale * rand_unit(rng) + rand_tail(rng, v, v + 2)
        r = b.radius + scale * rand_unit(rng)
        if r.sign <= 0:
            r = b.radius
        balls.append(Ball(b.center + dc, r))
    return BallUnion(balls)
