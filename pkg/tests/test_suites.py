from fractions import Fraction

import pytest

import betafractal.geometry as geometry
import betafractal.suites as suites
from betafractal.geometry import BallUnion
from betafractal.laurent import Laurent, X, parse_laurent


@pytest.mark.parametrize("name", list(suites.SUITES))
def test_every_suite_passes_small(name):
    res = suites.run_suite(name, 40, seed=1)
    assert res.passed, res.failures
    assert res.checked > 0


def test_select_suites():
    assert suites.select_suites("all") == list(suites.SUITES)
    assert "double_sum_roll" in suites.select_suites("lemmas")
    with pytest.raises(KeyError):
        suites.select_suites("missing")


def test_brute_force_oracle_examples():
    A = BallUnion.of((0, 1))
    one = Laurent.const(1)
    assert suites.brute_force_sum_roll(parse_laurent("5/2"), A, one)
    assert not suites.brute_force_sum_roll(parse_laurent("3"), A, one)
    # independent of the closed form: depth limits what it reaches
    assert not suites.brute_force_sum_roll(parse_laurent("2.99"), A, one, depth=3)
    assert suites.brute_force_sum_roll(1 + X / 2, A, X, depth=1)
    assert not suites.brute_force_sum_roll(1 + X, A, X, depth=1)


def test_results_are_deterministic():
    a = suites.run_suite("hyper_order", 30, seed=5)
    b = suites.run_suite("hyper_order", 30, seed=5)
    assert (a.checked, a.failures) == (b.checked, b.failures)


# mutations of the geometry must be caught


def _loose_member(y, ball, r):
    d = abs(y - ball.center) - ball.radius
    return d.sign <= 0 or d.valuation > r.valuation or (d.valuation == r.valuation and d.lead < 3 * r.lead)


def _tight_member(y, ball, r):
    d = abs(y - ball.center) - ball.radius
    return d.sign <= 0 or d.valuation > r.valuation or (d.valuation == r.valuation and d.lead < r.lead)


@pytest.mark.parametrize("bad", [_loose_member, _tight_member])
def test_sumroll_oracle_catches_wrong_constant(monkeypatch, bad):
    monkeypatch.setattr(geometry, "_sum_roll_ball_member", bad)
    assert not suites.run_suite("sumroll_oracle", 200, seed=2).passed


def test_axiom_swing_catches_wrong_rule(monkeypatch):
    monkeypatch.setattr(suites, "is_swing_value", lambda s, r, level=False: 3 * s <= 2 * r)
    assert not suites.run_suite("axiom4_swing", 200, seed=2).passed


def test_hausdorff_catches_one_sided_proximity(monkeypatch):
    monkeypatch.setattr(suites, "hyper_in", lambda B, A, r: geometry.region_subset(B, geometry.sum_roll(A, r)))
    assert not suites.run_suite("hausdorff", 200, seed=2).passed


def test_contraction_catches_wrong_degree(monkeypatch):
    monkeypatch.setitem(suites.EXPECTED_DEGREES, "synthetic-2/3", 1)
    assert not suites.run_suite("contraction", 5, seed=2).passed


def test_level_transfer_catches_wrong_level_set(monkeypatch):
    monkeypatch.setattr(suites, "in_level_set", lambda y, x, r: (y - x).valuation >= r.valuation)
    assert not suites.run_suite("level_transfer", 100, seed=2).passed
