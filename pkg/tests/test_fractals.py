import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from betafractal.fractals import (
    BUILTINS,
    SpecError,
    cantor_member,
    cantor_points,
    check_invariance,
    oracle,
    parse_ifs_spec,
    resolve_ifs,
    small_cantor_member,
    small_cantor_points,
    stretched_member,
    ternary_digits,
)
from betafractal.hyperspace import ContractionMap
from betafractal.laurent import Laurent, X, parse_laurent

L = parse_laurent


def test_ternary_digits():
    assert ternary_digits(Fraction(1, 4)) == ((), (0, 2))
    assert ternary_digits(Fraction(1, 3)) == ((1,), ())
    assert ternary_digits(Fraction(1, 2)) == ((), (1,))
    assert ternary_digits(Fraction(0)) == ((), ())


@pytest.mark.parametrize(
    "q, expected",
    [
        (0, True), (1, True), ("1/4", True), ("1/2", False), ("1/3", True), ("2/3", True),
        ("4/9", False), ("7/9", True), ("2/9", True), ("3/4", True), ("1/10", True),
        ("-1/3", False), ("4/3", False), ("5/9", False),
    ],
)
def test_cantor_member(q, expected):
    assert cantor_member(Fraction(q)) is expected


def _brute_cantor(q, depth=12):
    """Middle-thirds construction to finite depth: keep q while it is in a kept closed interval."""
    lo, hi = Fraction(0), Fraction(1)
    for _ in range(depth):
        third = (hi - lo) / 3
        if q <= lo + third:
            hi = lo + third
        elif q >= hi - third:
            lo = hi - third
        else:
            return False
    return lo <= q <= hi


@given(st.integers(0, 3**7), st.sampled_from([3**7, 3**6 * 2, 3**5 * 4, 80, 91]))
@settings(max_examples=500)
def test_cantor_member_vs_construction(num, den):
    q = Fraction(num, den)
    if q <= 1 and _brute_cantor(q) != cantor_member(q):
        # a finite-depth construction can only over-accept
        assert _brute_cantor(q) and not cantor_member(q)


def test_cantor_points_are_members():
    for q in cantor_points(random.Random(5), 200):
        assert cantor_member(q) and 0 < q < 1


def test_stretched_member():
    assert stretched_member(Laurent())
    assert stretched_member(L("1/4*x^-1"))
    assert not stretched_member(L("1/4"))
    assert not stretched_member(L("1/2*x^-1"))
    assert not stretched_member(L("1/4*x^-1 + x"))


def test_small_cantor_member():
    assert small_cantor_member(Laurent.const(1))
    assert small_cantor_member(Laurent())
    assert not small_cantor_member(1 + X)
    assert small_cantor_member(L("1 - x + x^5"))
    assert small_cantor_member(L("x^3 - x^4"))
    assert not small_cantor_member(L("-x"))
    assert not small_cantor_member(L("x^-1 - 1"))
    assert not small_cantor_member(L("2*x"))
    for p in small_cantor_points(random.Random(2), 50, 6):
        assert small_cantor_member(p)


def test_oracle_lookup():
    assert oracle("small-cantor") is small_cantor_member
    with pytest.raises(KeyError):
        oracle("koch")


def test_parse_ifs_spec():
    F = parse_ifs_spec("# corrected Cantor\nmap a=1/3 b=0\n\nmap a=1/3 b=2/3\n")
    assert F.maps == BUILTINS["cantor"].ifs.maps
    G = parse_ifs_spec("map a=x b=1-x")
    assert G.maps == (ContractionMap(X, 1 - X),)


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("map a=1 b=0", 1),
        ("map a=1/3 b=0\nmap a=0 b=1", 2),
        ("map a=1/3 b=0\n\nmap a=1/3 b=2/", 3),
        ("mapping a=1/3", 1),
        ("# nothing\n", 0),
    ],
)
def test_parse_ifs_spec_errors(text, lineno):
    with pytest.raises(SpecError) as info:
        parse_ifs_spec(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_resolve_ifs(tmp_path):
    F, seed, name = resolve_ifs("small-cantor")
    assert name == "small-cantor" and len(seed) == 1
    path = tmp_path / "c.ifs"
    path.write_text("map a=1/3 b=0\nmap a=1/3 b=2/3\n")
    F, seed, name = resolve_ifs(str(path))
    assert seed is None and name is None and len(F) == 2
    with pytest.raises(KeyError):
        resolve_ifs("no-such-thing")


def test_builtin_maps():
    assert [str(m) for m in BUILTINS["cantor"].ifs.maps] == ["map a=1/3 b=0", "map a=1/3 b=2/3"]
    assert [str(m) for m in BUILTINS["cantor-paper-literal"].ifs.maps][1] == "map a=1/3 b=1/3"
    assert [str(m) for m in BUILTINS["stretched-cantor"].ifs.maps][1] == "map a=1/3 b=2/3*x^-1"
    assert [str(m) for m in BUILTINS["small-cantor"].ifs.maps] == ["map a=x b=0", "map a=x b=1-x"]


def _iterates(name, n):
    b = BUILTINS[name]
    A, out = b.seed, [b.seed]
    for _ in range(n):
        A = b.ifs(A)
        out.append(A)
    return out


def test_cantor_invariance():
    rng = random.Random(11)
    for n, A in enumerate(_iterates("cantor", 10)):
        radius = Fraction(1, 2 * 3**n)
        pts = [Laurent.const(q) for q in cantor_points(rng, 30)]
        bad, missed = check_invariance(A, "cantor", pts)
        assert not bad and not missed
        # each centre is within the ball radius of a member (its left endpoint)
        assert all(cantor_member(b.center.coefficient(0) - radius) for b in A)
        assert all(A.contains(p) for p in pts)


def test_small_cantor_invariance():
    for n, A in enumerate(_iterates("small-cantor", 10)):
        assert all(small_cantor_member(c) for c in A.centers)
        assert all(A.contains(X**m) for m in range(n))
        assert {c.valuation for c in A.centers if c} == set(range(n))
        bad, missed = check_invariance(A, "small-cantor", small_cantor_points(random.Random(n), 20, n))
        assert not bad and not missed


def test_stretched_single_level():
    A = _iterates("stretched-cantor", 6)[-1]
    assert {c.valuation for c in A.centers if c} == {-1}
    assert {b.radius.valuation for b in A} == {-1}


def test_literal_offset_fails_oracle():
    A = _iterates("cantor-paper-literal", 3)[-1]
    assert not any(cantor_member(c.coefficient(0)) for c in A.centers)
    bad, _ = check_invariance(A, "cantor", [])
    assert bad
