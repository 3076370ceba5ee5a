import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from betafractal.geometry import (
    Ball,
    BallUnion,
    Cut,
    Interval,
    Level,
    SumRollRegion,
    SwingSequence,
    canonical_level_swing_sequence,
    closure,
    dump_regions,
    in_ball,
    in_level_set,
    is_swing_value,
    iterated_roll,
    level_cmp,
    level_countable_index,
    level_swing_sequence,
    load_regions,
    openness_radius,
    region_subset,
    roll,
    structured_radius,
    sum_roll,
    sum_roll_member,
)
from betafractal.laurent import INF, Laurent, X, parse_laurent
from betafractal.sampling import rand_ball_union, rand_laurent, rand_radius, rand_tail
from betafractal.suites import brute_force_sum_roll

L = parse_laurent
seeds = st.integers(0, 2**32)


def ball(c, r):
    return BallUnion([Ball(L(str(c)), L(str(r)))])


# -- radii, levels, swing values ---------------------------------------------


def test_in_ball_examples():
    for r in (Laurent.const(1), X**3, L("5*x^-2")):
        assert in_ball(0, Ball(0, r))
    assert not in_ball(1, Ball(0, 1))
    assert in_ball(X, Ball(0, 1))


def test_level_cmp_examples():
    assert level_cmp(5 * X**2, X**2) is Level.EQUAL
    assert level_cmp(Laurent.const(1), X) is Level.LOWER
    assert level_cmp(Laurent.const(1), L("2/3*x^-1")) is Level.HIGHER


def test_radius_must_be_positive():
    assert not is_swing_value(Laurent(), Laurent.const(1))
    with pytest.raises(ValueError):
        roll(ball(0, 1), -X)
    with pytest.raises(ValueError):
        Ball(0, -1)


def test_swing_examples():
    r = L("3 + x")
    assert is_swing_value(r / 2, r, level=True)
    assert not is_swing_value(Fraction(1, 2) + X, Laurent.const(1))
    assert is_swing_value(X, Laurent.const(1))
    assert not is_swing_value(X, Laurent.const(1), level=True)


def test_canonical_sequences():
    assert list(canonical_level_swing_sequence(Laurent.const(1), 3)) == [1, Fraction(1, 2), Fraction(1, 4)]
    assert list(canonical_level_swing_sequence(X**2, 2)) == [X**2, X**2 / 2]
    gen = level_swing_sequence(X)
    assert [next(gen) for _ in range(3)] == [X, X / 2, X / 4]


def test_swing_sequence_validation():
    one = Laurent.const(1)
    assert SwingSequence((one, one / 2, X)).is_swing()
    assert not SwingSequence((one, one / 2, X)).is_level()
    assert not SwingSequence((one, Fraction(3, 4) * one)).is_swing()


@given(seeds)
@settings(max_examples=200)
def test_canonical_sequence_is_pairwise_swing(seed):
    rng = random.Random(seed)
    seq = canonical_level_swing_sequence(rand_radius(rng), 6)
    assert all(is_swing_value(b, a, level=True) for a, b in zip(seq, list(seq)[1:]))


def test_level_countable_index_examples():
    one = Laurent.const(1)
    assert level_countable_index(one, one) == 1
    assert level_countable_index(one, Fraction(1, 2) * one) == 2
    assert level_countable_index(one, Fraction(1, 3) * one) == 3
    assert level_countable_index(one, Fraction(1, 2) - X) == 3
    with pytest.raises(ValueError):
        level_countable_index(one, X)


def test_in_level_set_examples():
    assert in_level_set(X, X, Laurent.const(7))
    assert in_level_set(1 + X**3, 1, Laurent.const(1))
    assert not in_level_set(1 + X, 1, X**2)


# -- cuts and intervals --------------------------------------------------------


def test_cut_order():
    one = Laurent.const(1)
    assert Cut(one, INF, -1) < Cut(one, INF, 1)
    # eps_0 behaves like x^(1/2): above every constant multiple of x, below every rational
    assert Cut(one, 0, 1) > Cut(one + 1000 * X, INF, 1)
    assert Cut(one, 0, 1) < Cut(one + Fraction(1, 1000), INF, -1)
    assert Cut(one, 0, 1).compare(one + X) > 0
    assert Cut(one + X**5, 0, 1) == Cut(one, 0, 1)


def test_interval_shapes():
    iv = Interval.open_ball(Laurent(), Laurent.const(1))
    assert iv.contains(1 - X) and not iv.contains(1)
    pt = Interval.point(Laurent.const(2))
    assert pt.contains(2) and not pt.contains(2 + X**9)
    sr = SumRollRegion(Ball(0, 1), Laurent.const(1))
    assert sr.contains(Fraction(5, 2)) and sr.contains(Fraction(299, 100))
    assert not sr.contains(3) and not sr.contains(3 - X)
    assert sr.interval().contains(Fraction(299, 100)) and not sr.interval().contains(3 - X)


# -- rolls and sum rolls ------------------------------------------------------


def test_roll_examples():
    assert roll(ball(0, 1), 1).set_equal(ball(0, 2))
    assert roll(ball(0, "x"), 1).set_equal(ball(0, "1 + x"))
    both = BallUnion.of((0, 1), (4, 1))
    assert roll(both, 1).set_equal(BallUnion.of((0, 2), (4, 2)))


def test_iterated_roll_examples():
    A = ball(0, 1)
    seq = canonical_level_swing_sequence(Laurent.const(1), 3)
    assert iterated_roll(A, seq, 1).set_equal(roll(A, 1))
    assert iterated_roll(A, seq, 3).set_equal(ball(0, "11/4"))
    with pytest.raises(ValueError):
        iterated_roll(A, seq, 4)


@given(seeds)
@settings(max_examples=500)
def test_iterated_roll_bound(seed):
    rng = random.Random(seed)
    b = Ball(rand_laurent(rng), rand_radius(rng))
    r = rand_radius(rng)
    n = rng.randint(1, 8)
    grown = iterated_roll(BallUnion([b]), canonical_level_swing_sequence(r, n), n).balls[0]
    assert grown.radius < b.radius + 2 * r


def test_sum_roll_examples():
    A = ball(0, 1)
    one = Laurent.const(1)
    assert sum_roll_member(Fraction(1, 2), A, one)
    assert sum_roll_member(Fraction(5, 2), A, one)
    assert brute_force_sum_roll(L("5/2"), A, one)
    assert not sum_roll_member(3, A, one)
    assert not brute_force_sum_roll(L("3"), A, one)
    # leading excess exactly 2 lead(r) loses even with a negative tail
    assert not sum_roll_member(3 - X, A, one)
    assert sum_roll_member(Fraction(3, 1) - Fraction(1, 100), A, one)
    assert sum_roll_member(1 + X**2, ball(0, 1), X)


def test_region_subset_examples():
    A = BallUnion.of((0, 1), (5, "x"))
    assert region_subset(A, A)
    assert not region_subset(ball(0, 3), sum_roll(ball(0, 1), 1))
    assert region_subset(ball(0, 2), BallUnion.of(("-3/2", 2), ("3/2", 2)))
    assert not region_subset(ball(0, 2), BallUnion.of(("-3/2", 2), ("2", "3/2")))
    # 3 - 2x has excess 2 - 2x, whose leading coefficient is exactly 2
    assert not region_subset(ball(0, "3 - x"), sum_roll(ball(0, 1), 1))
    assert region_subset(ball(0, "299/100"), sum_roll(ball(0, 1), 1))
    # every member lies below 3 - c for a rational c > 0
    assert region_subset(sum_roll(ball(0, 1), 1), ball(0, "3 - x^5"))
    assert not region_subset(sum_roll(ball(0, 1), 1), ball(0, "2999/1000"))


def test_closure():
    cl = closure(Ball(0, 1))
    assert cl.contains(1) and cl.contains(-1) and not cl.contains(1 + X**4)
    assert region_subset(cl, ball(0, "1 + x^7"))
    assert not region_subset(cl, ball(0, 1))


def _sample_in(rng, region, count=20):
    pts = []
    for iv in region.intervals():
        for _ in range(count):
            cut = rng.choice((iv.lo, iv.hi))
            lvl = cut.level if cut.level != INF else rng.randint(-3, 4)
            pts.append(cut.point + Laurent.monomial(Fraction(rng.randint(-40, 40), rng.randint(1, 9)), lvl + rng.randint(-1, 2)))
    return pts


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_region_subset_agrees_with_points(seed):
    rng = random.Random(seed)
    A = rand_ball_union(rng, 3, -2, 2)
    B = rand_ball_union(rng, 3, -2, 2)
    r = rand_radius(rng, -2, 2)
    for inner, outer in ((A, sum_roll(B, r)), (sum_roll(A, r), B), (A, B)):
        sub = region_subset(inner, outer)
        pts = [p for p in _sample_in(rng, inner) if inner.contains(p)]
        if sub:
            assert all(outer.contains(p) for p in pts)


@given(seeds)
@settings(max_examples=300, deadline=None)
def test_interval_route_matches_closed_form(seed):
    rng = random.Random(seed)
    A = rand_ball_union(rng, 3)
    r = rand_radius(rng)
    region = sum_roll(A, r)
    for y in _sample_in(rng, region, 5):
        assert region.contains(y) == sum_roll_member(y, A, r)


@given(seeds)
@settings(max_examples=200, deadline=None)
def test_openness_radius(seed):
    rng = random.Random(seed)
    A = rand_ball_union(rng, 2, -2, 2)
    r = rand_radius(rng, -2, 2)
    region = sum_roll(A, r)
    for y in _sample_in(rng, region, 3):
        if region.contains(y):
            s = openness_radius(region, y, r)
            assert s is not None and s.valuation == r.valuation
            assert region_subset(Ball(y, s), region)


@given(seeds)
@settings(max_examples=200, deadline=None)
def test_structured_radius(seed):
    rng = random.Random(seed)
    A, B = rand_ball_union(rng), rand_ball_union(rng)
    assert region_subset(B, roll(A, structured_radius(A, B)))


def test_structured_radius_singletons():
    p = BallUnion([Ball.singleton(L("1 + x"))])
    assert region_subset(p, roll(p, structured_radius(p, p)))
    q = BallUnion([Ball.singleton(L("2"))])
    assert region_subset(q, roll(p, structured_radius(p, q)))


def test_ball_union_validation():
    with pytest.raises(ValueError):
        BallUnion([])
    with pytest.raises(TypeError):
        BallUnion([(0, 1)])
    assert BallUnion.of((0, 1), (0, 1)).set_equal(ball(0, 1))


# -- dump format ----------------------------------------------------------------


def test_dump_round_trip():
    regions = [Ball(L("1/2"), L("x^2")), SumRollRegion(Ball(L("-x^-1"), L("3")), L("1/3 + x"))]
    text = dump_regions(regions)
    assert text.splitlines()[0] == "ball 1/2 x^2"
    assert text.splitlines()[1] == "sumroll -x^-1 3 1/3+x"
    assert load_regions("# header\n\n" + text) == regions


def test_load_rejects_bad_lines():
    with pytest.raises(ValueError, match="line 2"):
        load_regions("ball 0 1\ncircle 0 1\n")
