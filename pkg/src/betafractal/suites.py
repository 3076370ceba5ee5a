"""Randomised property suites over the geometry, hyperspace and contraction layers.

Each suite takes ``(rng, samples)`` and returns a :class:`SuiteResult`; the
counterexamples it collects are printable strings.  Suites that need their
premise to hold (for instance ``B in beta_H(A, r)``) keep drawing until
``samples`` valid instances are found or the attempt budget runs out, which
is itself reported as a failure.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .fractals import BUILTINS
from .geometry import (
    Ball,
    BallUnion,
    Level,
    SumRollRegion,
    canonical_level_swing_sequence,
    closure,
    in_ball,
    in_level_set,
    is_swing_value,
    level_cmp,
    level_countable_index,
    openness_radius,
    region_subset,
    roll,
    structured_radius,
    sum_roll,
    sum_roll_member,
)
from .hyperspace import (
    IFS,
    ContractionMap,
    alpha_close_check,
    alpha_preserving_check,
    hyper_in,
    in_hyper_level_set,
    level_structured_witness,
    proximity_point,
)
from .laurent import INF, Laurent, X
from .sampling import (
    perturb,
    rand_ball_union,
    rand_fraction,
    rand_laurent,
    rand_radius,
    rand_radius_at,
    rand_tail,
    rand_unit,
)

__all__ = ["SUITES", "GROUPS", "SuiteResult", "brute_force_sum_roll", "run_suites"]

MAX_FAILURES = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    note: str = ""

    @property
    def passed(self):
        return not self.failures

    def fail(self, message):
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(message)
        elif len(self.failures) == MAX_FAILURES:
            self.failures.append("... further failures suppressed")

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.note})" if self.note else ""
        return f"{status} {self.name}: {self.checked} instances in {self.elapsed:.2f}s{extra}"


def _draw(rng, samples, res, make, check, budget=20):
    """Draw instances with ``make`` (None = premise failed) and run ``check`` on valid ones."""
    attempts = 0
    while res.checked < samples and attempts < budget * samples:
        attempts += 1
        inst = make(rng)
        if inst is None:
            continue
        res.checked += 1
        msg = check(*inst)
        if msg:
            res.fail(msg)
    if res.checked < samples:
        res.fail(f"only {res.checked} of {samples} instances satisfied the premise")


def _same_level_fraction(rng, r, lo, hi):
    """``r * q`` for rational ``q`` in ``[lo, hi]``; same valuation as ``r``."""
    den = rng.randint(1, 64)
    q = Fraction(rng.randint(max(1, int(lo * den) + 1), max(1, int(hi * den))), den)
    q = min(max(q, Fraction(lo)), Fraction(hi))
    return r * q


def _swing_of(rng, r):
    """A swing value of ``r``: usually on the same level, sometimes finer."""
    if rng.random() < 0.75:
        s = _same_level_fraction(rng, r, Fraction(1, 8), Fraction(1, 2))
        if rng.random() < 0.3:
            s = s - Laurent.monomial(rand_fraction(rng, 20, 20) ** 2 + Fraction(1, 20), r.valuation + 1)
        return s if is_swing_value(s, r) else r / 2
    return rand_radius_at(rng, r.valuation + rng.randint(1, 2))


def _points_near(rng, region, count):
    """Points clustered around the cut positions of ``region``."""
    pts = []
    ivs = region.intervals()
    for _ in range(count):
        iv = rng.choice(ivs)
        cut = rng.choice((iv.lo, iv.hi))
        lvl = cut.level if cut.level != INF else rng.randint(-2, 4)
        e = lvl + rng.choice((-1, 0, 0, 1, 2))
        pts.append(cut.point + Laurent.monomial(rand_fraction(rng, 16, 40), e))
    return pts


# -- sum roll closed form vs brute force ----------------------------------


def brute_force_sum_roll(y, A, r, depth=6):
    """Does some iterated roll along a dyadic level swing sequence reach ``y``?

    Sequences branch at every step into ``r_i/2``, ``r_i/4`` and
    ``r_i/2 - lead(r) x^(v+1)``; each node rolls the previous union once more.
    """
    v = r.valuation
    notch = Laurent.monomial(r.lead, v + 1)

    def walk(U, last, level):
        if U.contains(y):
            return True
        if level == depth:
            return False
        for nxt in (last / 2, last / 4, last / 2 - notch):
            if nxt.valuation != v or not is_swing_value(nxt, last):
                continue
            if walk(roll(U, nxt), nxt, level + 1):
                return True
        return False

    return walk(roll(A, r), r, 1)


def suite_sumroll_oracle(rng, samples):
    res = SuiteResult("sumroll_oracle")
    depth_reach = 2 - Fraction(1, 32)

    def make(rng):
        A = rand_ball_union(rng, 2, -4, 4, max_den=20)
        r = rand_radius(rng, -4, 4, max_den=20)
        b = rng.choice(A.balls)
        v = r.valuation
        q = Fraction(rng.randint(0, 140), 64)
        d = r.lead * q
        y = b.center + rng.choice((1, -1)) * (b.radius + Laurent.monomial(d, v) + rand_tail(rng, v, v + 2))
        if rng.random() < 0.2:
            y = rand_laurent(rng, -4, 4)
        return A, r, y

    def check(A, r, y):
        closed = sum_roll_member(y, A, r)
        by_interval = sum_roll(A, r).contains(y)
        if closed != by_interval:
            return f"closed form {closed} vs interval route {by_interval}: y={y}, A={A}, r={r}"
        covered = brute_force_sum_roll(y, A, r)
        if covered and not closed:
            return f"oracle covers y={y} but closed form rejects; A={A}, r={r}"
        # dyadic depth-6 sequences reach every excess below (63/32) r at leading order
        safe = any(_excess_below(y, ball, r, depth_reach) for ball in A)
        if safe and not covered:
            return f"excess below depth-6 reach but oracle misses: y={y}, A={A}, r={r}"
        return None

    _draw(rng, samples, res, make, check)
    return res


def _excess_below(y, ball, r, factor):
    d = abs(y - ball.center) - ball.radius
    if d.sign <= 0 or d.valuation > r.valuation:
        return True
    return d.valuation == r.valuation and d.lead < factor * r.lead


# -- point-level beta-space axioms ----------------------------------------


def _point_in_ball(rng, x, r):
    """Random ``y`` with ``|y - x| < r``."""
    while True:
        u = r * rand_unit(rng) + rand_tail(rng, r.valuation, r.valuation + 2)
        if abs(u) < r:
            return x + u


def suite_axiom_center(rng, samples):
    res = SuiteResult("axiom1_center")
    _draw(rng, samples, res, lambda g: (rand_laurent(g), rand_radius(g)),
          lambda x, r: None if in_ball(x, Ball(x, r)) else f"{x} not in beta({x}, {r})")
    return res


def suite_axiom_openness(rng, samples):
    res = SuiteResult("axiom2_openness")

    def make(g):
        x, r = rand_laurent(g), rand_radius(g)
        return x, r, _point_in_ball(g, x, r)

    def check(x, r, y):
        inner = Ball(y, r - abs(y - x))
        if not region_subset(inner, Ball(x, r)):
            return f"{inner} not inside beta({x}, {r})"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_axiom_refinement(rng, samples):
    res = SuiteResult("axiom3_refinement")

    def make(g):
        x, r = rand_laurent(g), rand_radius(g)
        z = _point_in_ball(g, x, r)
        s = rand_radius(g)
        y = _point_in_ball(g, z, s)
        return x, r, y, s, z

    def check(x, r, y, s, z):
        t = min(r - abs(z - x), s - abs(z - y))
        bz = Ball(z, t)
        if not (region_subset(bz, Ball(x, r)) and region_subset(bz, Ball(y, s))):
            return f"beta({z}, {t}) escapes beta({x},{r}) or beta({y},{s})"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_axiom_swing(rng, samples):
    """``r/2`` is a level swing value, and the swing rule matches ball inclusions."""
    res = SuiteResult("axiom4_swing")

    def make(g):
        x, r = rand_laurent(g), rand_radius(g)
        s = r * Fraction(g.randint(1, 96), 64) if g.random() < 0.7 else rand_radius(g)
        return x, r, s

    def check(x, r, s):
        if not is_swing_value(r / 2, r, level=True):
            return f"r/2 is not a level swing value of {r}"
        if is_swing_value(s, r):
            y = _point_in_ball(rng, x, s)
            if not region_subset(Ball(y, s), Ball(x, r)):
                return f"2s <= r but beta({y},{s}) not inside beta({x},{r})"
        else:
            # 2s > r: the point at distance r/2 lies in beta(x, s) and its s-ball overflows
            y = x + r / 2
            if not in_ball(y, Ball(x, s)) or region_subset(Ball(y, s), Ball(x, r)):
                return f"2s > r yet no overflow witness for s={s}, r={r}"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_swing_completeness(rng, samples):
    res = SuiteResult("swing_completeness")

    def check(r):
        seq = canonical_level_swing_sequence(r, 6)
        return None if seq.is_level() else f"canonical sequence of {r} is not a level swing sequence"

    _draw(rng, samples, res, lambda g: (rand_radius(g),), check)
    return res


def suite_level_unbounded(rng, samples):
    res = SuiteResult("level_unbounded")
    _draw(rng, samples, res, lambda g: (rand_radius(g),),
          lambda r: None if level_cmp(r, X * r) is Level.LOWER else f"x*{r} not below {r}")
    return res


def suite_level_countable(rng, samples):
    res = SuiteResult("level_countable")

    def make(g):
        r = rand_radius(g)
        return r, rand_radius_at(g, r.valuation)

    def check(r, s):
        k = level_countable_index(r, s)
        rk = r / 2 ** (k - 1)
        if not rk <= s:
            return f"r_{k} = {rk} > s = {s}"
        if k > 1 and r / 2 ** (k - 2) <= s:
            return f"index {k} not minimal for r={r}, s={s}"
        return None

    _draw(rng, samples, res, make, check)
    return res


# -- exact lemma suite ----------------------------------------------------


def _base_instance(rng, level=0):
    A = rand_ball_union(rng, 3, -2, 2, level=level, max_den=20)
    r = rand_radius_at(rng, level, max_den=20)
    return A, r


def suite_roll_symmetry(rng, samples):
    res = SuiteResult("roll_symmetry")

    def make(g):
        A = rand_ball_union(g, 3)
        return A, rand_radius(g), rand_radius(g)

    def check(A, r, s):
        if not roll(roll(A, r), s).set_equal(roll(roll(A, s), r)):
            return f"roll order matters for A={A}, r={r}, s={s}"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_sumroll_symmetry(rng, samples):
    res = SuiteResult("sumroll_symmetry")

    def make(g):
        A, r = _base_instance(g)
        s = rand_radius_at(g, g.choice((-1, 0, 0, 1)), max_den=20)
        return A, r, s

    def check(A, r, s):
        left = sum_roll(sum_roll(A, r), s)
        right = sum_roll(sum_roll(A, s), r)
        for y in _points_near(rng, left, 5):
            if left.contains(y) != right.contains(y):
                return f"membership of {y} differs for A={A}, r={r}, s={s}"
        return None

    _draw(rng, max(1, samples // 5), res, make, check)
    res.note = f"{res.checked * 5} sampled points"
    return res


def suite_r_open(rng, samples):
    res = SuiteResult("r_open")

    def make(g):
        A, r = _base_instance(g, level=g.randint(-1, 1))
        region = sum_roll(A, r)
        members = [y for y in _points_near(g, region, 6) if region.contains(y)]
        return (A, r, region, members[0]) if members else None

    def check(A, r, region, y):
        s = openness_radius(region, y, r)
        if s is None or level_cmp(r, s) is not Level.EQUAL:
            return f"no same-level ball around {y} inside R_Sigma(A, {r}), A={A}"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_sumroll_monotone(rng, samples):
    res = SuiteResult("sumroll_monotone")

    def make(g):
        A, r = _base_instance(g)
        s = _same_level_fraction(g, r, 0, 1) if g.random() < 0.7 else rand_radius_at(g, 1)
        return A, s, r

    def check(A, s, r):
        if not region_subset(sum_roll(A, s), sum_roll(A, r)):
            return f"R_Sigma(A,{s}) not inside R_Sigma(A,{r}), A={A}"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_double_sum_roll(rng, samples):
    res = SuiteResult("double_sum_roll")

    def make(g):
        A, r = _base_instance(g)
        return A, r, _swing_of(g, r)

    def check(A, r, s):
        if not region_subset(sum_roll(sum_roll(A, s), s), sum_roll(A, r)):
            return f"double sum roll at swing {s} escapes R_Sigma(A, {r}), A={A}"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_geometric_level_sum(rng, samples):
    res = SuiteResult("geometric_level_sum")

    def make(g):
        A, r1 = _base_instance(g)
        r2 = _same_level_fraction(g, r1, Fraction(1, 6), Fraction(1, 2))
        r3 = _same_level_fraction(g, r2, Fraction(1, 6), Fraction(1, 2))
        return A, r1, r2, r3

    def check(A, r1, r2, r3):
        if not region_subset(sum_roll(A, r3), roll(A, r1)):
            return f"R_Sigma(A,{r3}) not inside R_beta(A,{r1}), A={A}"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_closure_containment(rng, samples):
    res = SuiteResult("closure_containment")

    def make(g):
        t1 = rand_radius(g, -2, 2)
        t2 = _swing_of(g, t1)
        t3 = _swing_of(g, t2)
        return rand_laurent(g), t1, t2, t3

    def check(x, t1, t2, t3):
        cl = closure(Ball(x, t3))
        if not cl.contains(x + t3) or Ball(x, t3).contains(x + t3):
            return f"closure of beta({x},{t3}) mis-built"
        if not region_subset(cl, Ball(x, t1)):
            return f"closure of beta({x},{t3}) not inside beta({x},{t1})"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_structured(rng, samples):
    res = SuiteResult("structured")

    def check(A, B):
        t = structured_radius(A, B)
        return None if region_subset(B, roll(A, t)) else f"B not inside R_beta(A, {t}); A={A}, B={B}"

    _draw(rng, samples, res, lambda g: (rand_ball_union(g, 3), rand_ball_union(g, 3)), check)
    return res


def suite_nested_hyper_balls(rng, samples):
    res = SuiteResult("nested_hyper_balls")

    def make(g):
        A, r = _base_instance(g)
        B = perturb(g, A, r / 2)
        if not hyper_in(B, A, r):
            return None
        t = rand_radius_at(g, r.valuation + g.randint(1, 2), max_den=20)
        C = perturb(g, B, t)
        if not hyper_in(C, B, t):
            return None
        return A, B, C, r, t

    def check(A, B, C, r, t):
        return None if hyper_in(C, A, r) else f"C escapes beta_H(A, {r}); A={A}, B={B}, C={C}, t={t}"

    _draw(rng, samples, res, make, check)
    return res


def suite_hyper_swing_transfer(rng, samples):
    res = SuiteResult("hyper_swing_transfer")

    def make(g):
        A, r = _base_instance(g)
        s = _swing_of(g, r)
        B, C = perturb(g, A, s), perturb(g, A, s)
        if not (hyper_in(B, A, s) and hyper_in(C, A, s)):
            return None
        return A, B, C, r, s

    def check(A, B, C, r, s):
        return None if hyper_in(C, B, r) else f"C not in beta_H(B, {r}); s={s}, A={A}, B={B}, C={C}"

    _draw(rng, samples, res, make, check)
    return res


def suite_hyper_order(rng, samples):
    res = SuiteResult("hyper_order")

    def make(g):
        A, r = _base_instance(g)
        s = _same_level_fraction(g, r, 0, 1) if g.random() < 0.7 else rand_radius_at(g, 1)
        B = perturb(g, A, s)
        return (A, B, s, r) if hyper_in(B, A, s) else None

    def check(A, B, s, r):
        return None if hyper_in(B, A, r) else f"B in beta_H(A,{s}) but not beta_H(A,{r})"

    _draw(rng, samples, res, make, check)
    return res


def suite_hausdorff(rng, samples):
    """Separated sets: ``beta_H(A, r/16)`` and ``beta_H(B, r/16)`` are disjoint."""
    res = SuiteResult("hausdorff")

    def make(g):
        A = rand_ball_union(g, 2, -1, 1, level=0, max_den=10)
        B = rand_ball_union(g, 2, -1, 1, level=0, max_den=10)
        x = g.choice(A.centers)
        gaps = [abs(x - b.center) - b.radius for b in B]
        if any(d.sign <= 0 for d in gaps):
            return None
        return A, B, x, min(gaps)

    def check(A, B, x, r):
        if any(Ball(x, r).interval().contains(p) for p in B.centers):
            return "witness ball meets B"
        r5 = r / 16
        # any C in both hyper-balls would force x into this region
        if sum_roll(sum_roll(B, r5), r5).contains(x):
            return f"x={x} inside R_Sigma(R_Sigma(B, r/16), r/16); A={A}, B={B}, r={r}"
        for C in _hausdorff_candidates(rng, A, B, r5):
            if hyper_in(C, A, r5) and hyper_in(C, B, r5):
                return f"C={C} lies in both hyper-balls; A={A}, B={B}, r={r}"
        return None

    _draw(rng, samples, res, make, check, budget=60)
    return res


def _hausdorff_candidates(rng, A, B, r5):
    yield perturb(rng, A, r5)
    yield perturb(rng, B, r5)
    yield BallUnion(A.balls + B.balls)
    yield BallUnion([Ball((a.center + b.center) / 2, a.radius + b.radius) for a in A for b in B])


# -- contraction theorem --------------------------------------------------


def _contraction_maps():
    out = {name: b.ifs for name, b in BUILTINS.items()}
    out["synthetic-2/3"] = IFS((ContractionMap(Laurent.const(Fraction(2, 3)), Laurent()),), "synthetic-2/3")
    return out


EXPECTED_DEGREES = {"cantor": 1, "cantor-paper-literal": 1, "stretched-cantor": 1, "small-cantor": 1, "synthetic-2/3": 2}


def suite_contraction(rng, samples):
    res = SuiteResult("contraction")
    systems = _contraction_maps()
    for name, F in systems.items():
        M = F.degree
        if M != EXPECTED_DEGREES[name]:
            res.fail(f"{name}: degree {M}, expected {EXPECTED_DEGREES[name]}")
        if not 2 * F.max_slope ** M <= 1:
            res.fail(f"{name}: 2*max|a|^M > 1 for M={M}")
        if M > 1 and 2 * F.max_slope ** (M - 1) <= 1:
            res.fail(f"{name}: degree {M} not minimal")

    def check(name, A, r):
        F = systems[name]
        if not region_subset(F(roll(A, r)), roll(F(A), r)):
            return f"{name}: F(R_beta(A, {r})) not inside R_beta(F(A), {r}); A={A}"
        s = r
        for _ in range(F.degree):
            s = F.max_slope * s
        if not is_swing_value(s, r):
            return f"{name}: s^M({r}) = {s} is not a swing value"
        return None

    for name in systems:
        sub = SuiteResult(name)
        _draw(rng, samples, sub, lambda g: (name, rand_ball_union(g, 2, -2, 2), rand_radius(g, -2, 2)), check)
        res.checked += sub.checked
        for f in sub.failures:
            res.fail(f)
    res.note = f"{len(systems)} systems"
    return res


# -- hyperspace level structure -------------------------------------------


def _singleton(p):
    return BallUnion([Ball.singleton(p)])


LEVEL_DEPTH = 24


def suite_level_transfer(rng, samples):
    res = SuiteResult("level_transfer")

    def make(g):
        x = rand_laurent(g, -2, 2, max_den=20)
        r = rand_radius(g, -2, 2)
        v = r.valuation
        if g.random() < 0.5:
            y = x + rand_tail(g, v, v + 3, max_den=20)
        else:
            y = x + Laurent.monomial(rand_fraction(g, 20, 40, nonzero=True), v - g.randint(0, 2)) + rand_tail(g, v, v + 2)
        s_eq = rand_radius_at(g, v, max_den=20)
        s_low = rand_radius_at(g, v + g.randint(1, 2), max_den=20)
        return x, y, r, s_eq, s_low

    def check(x, y, r, s_eq, s_low):
        X1, Y1 = _singleton(x), _singleton(y)
        in_r = in_hyper_level_set(Y1, X1, r, LEVEL_DEPTH)
        if in_r != in_level_set(y, x, r):
            return f"L_H({{x}}, {r}) disagrees with L(x, r) at y={y}, x={x}"
        # part 1: s <_L r
        if in_hyper_level_set(Y1, X1, s_low, LEVEL_DEPTH) and not in_r:
            return f"L_H(.,{s_low}) not inside L_H(.,{r}) at y={y}, x={x}"
        # part 2: s =_L r
        if in_hyper_level_set(Y1, X1, s_eq, LEVEL_DEPTH) != in_r:
            return f"same-level radii {r}, {s_eq} give different L_H at y={y}, x={x}"
        # part 3: a singleton separating the levels
        w = x + Laurent.monomial(1, s_low.valuation)
        W1 = _singleton(w)
        if not in_hyper_level_set(W1, X1, r, LEVEL_DEPTH) or in_hyper_level_set(W1, X1, s_low, LEVEL_DEPTH):
            return f"{{{w}}} does not separate L_H at {r} from {s_low}"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_level_structured(rng, samples):
    res = SuiteResult("level_structured")

    def make(g):
        r = rand_radius_at(g, 0, max_den=20)
        A = rand_ball_union(g, 3, -1, 1, level=g.randint(1, 2), max_den=20)
        B = perturb(g, A, rand_radius_at(g, 1 + g.randint(1, 2), max_den=20))
        return A, B, r

    def check(A, B, r):
        if not in_hyper_level_set(B, A, r, 8):
            return f"premise: B not in L_H(A, {r}) to depth 8; A={A}, B={B}"
        t = level_structured_witness(A, B, r)
        if t is None:
            return f"no t <_L {r} with B in beta_H(A, t); A={A}, B={B}"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_proximity_coherence(rng, samples):
    res = SuiteResult("proximity_coherence")

    def make(g):
        x, r = rand_laurent(g), rand_radius(g, -3, 3)
        s = rand_radius_at(g, r.valuation + g.randint(0, 2))
        a = proximity_point(x, r)
        y = a + rand_tail(g, s.valuation, s.valuation + 3) if g.random() < 0.8 else rand_laurent(g)
        return x, y, r, s

    def check(x, y, r, s):
        a = proximity_point(x, r)
        if not in_level_set(a, x, r):
            return f"alpha_{{x,r}} = {a} outside L({x}, {r})"
        if in_level_set(a, y, s) and a != proximity_point(y, s):
            return f"incoherent proximity points for x={x}, y={y}, r={r}, s={s}"
        return None

    _draw(rng, samples, res, make, check)
    return res


def suite_alpha_preserving(rng, samples):
    res = SuiteResult("alpha_preserving")
    maps = [m for F in _contraction_maps().values() for m in F.maps]
    per = max(1, samples // len(maps))
    for m in maps:
        res.checked += per
        if not alpha_preserving_check(m, per, random.Random(rng.random())):
            res.fail(f"{m} is not alpha-preserving on samples")
    return res


LADDER = (Laurent.const(1), X, X**2, X**3)


def fine_seed(name):
    """An alpha-close seed for a built-in: its default centre with an x^4-level radius."""
    b = BUILTINS[name].seed.balls[0]
    return BallUnion([Ball(b.center, Laurent.monomial(1, 4 + max(0, -b.radius.valuation)) * b.radius)])


def suite_alpha_images(rng, samples):
    """Images of alpha-close ball unions under the example IFSs stay alpha-close."""
    res = SuiteResult("alpha_images")
    for name in ("cantor", "stretched-cantor", "small-cantor"):
        F = BUILTINS[name].ifs
        A = fine_seed(name)
        for n in range(9):
            res.checked += 1
            if not alpha_close_check(A, LADDER):
                res.fail(f"{name}: A_{n} from a fine seed is not alpha-close on the ladder")
            A = F(A)
    return res


SUITES = {
    "sumroll_oracle": (suite_sumroll_oracle, "sumroll"),
    "axiom1_center": (suite_axiom_center, "axioms"),
    "axiom2_openness": (suite_axiom_openness, "axioms"),
    "axiom3_refinement": (suite_axiom_refinement, "axioms"),
    "axiom4_swing": (suite_axiom_swing, "axioms"),
    "swing_completeness": (suite_swing_completeness, "axioms"),
    "level_unbounded": (suite_level_unbounded, "axioms"),
    "level_countable": (suite_level_countable, "axioms"),
    "roll_symmetry": (suite_roll_symmetry, "lemmas"),
    "sumroll_symmetry": (suite_sumroll_symmetry, "lemmas"),
    "r_open": (suite_r_open, "lemmas"),
    "sumroll_monotone": (suite_sumroll_monotone, "lemmas"),
    "double_sum_roll": (suite_double_sum_roll, "lemmas"),
    "geometric_level_sum": (suite_geometric_level_sum, "lemmas"),
    "closure_containment": (suite_closure_containment, "lemmas"),
    "structured": (suite_structured, "lemmas"),
    "nested_hyper_balls": (suite_nested_hyper_balls, "lemmas"),
    "hyper_swing_transfer": (suite_hyper_swing_transfer, "lemmas"),
    "hyper_order": (suite_hyper_order, "lemmas"),
    "hausdorff": (suite_hausdorff, "lemmas"),
    "contraction": (suite_contraction, "contraction"),
    "level_transfer": (suite_level_transfer, "hyperspace"),
    "level_structured": (suite_level_structured, "hyperspace"),
    "proximity_coherence": (suite_proximity_coherence, "hyperspace"),
    "alpha_preserving": (suite_alpha_preserving, "hyperspace"),
    "alpha_images": (suite_alpha_images, "hyperspace"),
}

GROUPS = sorted({g for _, g in SUITES.values()})


def select_suites(name):
    if name == "all":
        return list(SUITES)
    if name in SUITES:
        return [name]
    if name in GROUPS:
        return [n for n, (_, g) in SUITES.items() if g == name]
    raise KeyError(f"unknown suite {name!r}; choose a suite, one of {GROUPS}, or 'all'")


def run_suite(name, samples, seed=0):
    fn, _ = SUITES[name]
    rng = random.Random(f"{seed}:{name}")
    t0 = time.perf_counter()
    res = fn(rng, samples)
    res.elapsed = time.perf_counter() - t0
    return res


def run_suites(name, samples, seed=0):
    return [run_suite(n, samples, seed) for n in select_suites(name)]
