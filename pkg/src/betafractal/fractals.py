"""Built-in example IFSs, their attractor membership oracles and the IFS spec format."""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .geometry import Ball, BallUnion, sum_roll
from .hyperspace import IFS, ContractionError, ContractionMap
from .laurent import Laurent, LiteralError, X, parse_laurent

__all__ = [
    "BUILTINS",
    "SpecError",
    "cantor_member",
    "cantor_points",
    "check_invariance",
    "oracle",
    "parse_ifs_spec",
    "resolve_ifs",
    "small_cantor_member",
    "small_cantor_points",
    "stretched_member",
    "ternary_digits",
]


# -- membership oracles ---------------------------------------------------


def ternary_digits(q):
    """Base-3 digits of ``q`` in [0, 1) as ``(prefix, cycle)``; ``cycle == ()`` if it terminates."""
    q = Fraction(q)
    if not 0 <= q < 1:
        raise ValueError("expected 0 <= q < 1")
    num, den = q.numerator, q.denominator
    seen = {}
    digits = []
    while num and num not in seen:
        seen[num] = len(digits)
        num *= 3
        digits.append(num // den)
        num %= den
    if not num:
        return tuple(digits), ()
    start = seen[num]
    return tuple(digits[:start]), tuple(digits[start:])


def cantor_member(q):
    """Exact membership of a rational in the middle-thirds Cantor set.

    A terminating expansion ending in digit 1 also reads as ``...0222...``, so
    it counts as a member when every earlier digit avoids 1.
    """
    q = Fraction(q)
    if q < 0 or q > 1:
        return False
    if q == 1:
        return True
    prefix, cycle = ternary_digits(q)
    if 1 not in prefix and 1 not in cycle:
        return True
    return not cycle and prefix[-1] == 1 and 1 not in prefix[:-1]


def stretched_member(p):
    """``p = c/x`` with ``c`` in the Cantor set."""
    p = parse_laurent(p)
    if not p:
        return True
    return set(p.terms) == {-1} and cantor_member(p.coefficient(-1))


def small_cantor_member(p):
    """Alternating sums ``x^e0 - x^e1 + x^e2 - ...`` with ``0 <= e0 < e1 < ...``."""
    p = parse_laurent(p)
    for i, (k, c) in enumerate(p.items()):
        if k < 0 or c != (1 if i % 2 == 0 else -1):
            return False
    return True


ORACLES = {
    "cantor": cantor_member,
    "stretched": stretched_member,
    "stretched-cantor": stretched_member,
    "small-cantor": small_cantor_member,
}


def oracle(name):
    try:
        return ORACLES[name]
    except KeyError:
        raise KeyError(f"unknown oracle {name!r}; choose from {sorted(ORACLES)}") from None


# -- oracle point samplers ------------------------------------------------


def cantor_points(rng, count, max_prefix=6, max_cycle=4):
    """Cantor points whose digit cycle mixes 0 and 2, so never an interval endpoint."""
    out = []
    for _ in range(count):
        prefix = [rng.choice((0, 2)) for _ in range(rng.randint(0, max_prefix))]
        cycle = [rng.choice((0, 2)) for _ in range(rng.randint(2, max_cycle))]
        if len(set(cycle)) == 1:
            cycle[rng.randrange(len(cycle))] = 2 - cycle[0]
        n, m = len(prefix), len(cycle)
        head = sum(Fraction(d, 3 ** (i + 1)) for i, d in enumerate(prefix))
        rep = sum(Fraction(d, 3 ** (i + 1)) for i, d in enumerate(cycle))
        out.append(head + rep / 3**n * Fraction(3**m, 3**m - 1))
    return out


def small_cantor_points(rng, count, below):
    """Alternating sums with every exponent ``< below``."""
    out = []
    for _ in range(count):
        k = rng.randint(0, below)
        exps = sorted(rng.sample(range(below), k))
        out.append(Laurent({e: (1 if i % 2 == 0 else -1) for i, e in enumerate(exps)}))
    return out


# -- built-ins ------------------------------------------------------------


@dataclass(frozen=True)
class Builtin:
    ifs: IFS
    seed: BallUnion
    oracle: str


def _third(b):
    return ContractionMap(Laurent.const(Fraction(1, 3)), b)


BUILTINS = {
    "cantor": Builtin(
        IFS((_third(Laurent()), _third(Laurent.const(Fraction(2, 3)))), "cantor"),
        BallUnion.of((Fraction(1, 2), Fraction(1, 2))),
        "cantor",
    ),
    "cantor-paper-literal": Builtin(
        IFS((_third(Laurent()), _third(Laurent.const(Fraction(1, 3)))), "cantor-paper-literal"),
        BallUnion.of((Fraction(1, 2), Fraction(1, 2))),
        "cantor",
    ),
    "stretched-cantor": Builtin(
        IFS((_third(Laurent()), _third(Laurent.monomial(Fraction(2, 3), -1))), "stretched-cantor"),
        BallUnion([Ball(Laurent(), Laurent.monomial(1, -1))]),
        "stretched",
    ),
    "small-cantor": Builtin(
        IFS((ContractionMap(X, Laurent()), ContractionMap(X, 1 - X)), "small-cantor"),
        BallUnion.of((0, 2)),
        "small-cantor",
    ),
}


class SpecError(ValueError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


_MAP_LINE = re.compile(r"^map\s+a=(?P<a>.+?)\s+b=(?P<b>.+)$")


def parse_ifs_spec(text, name=""):
    """Parse ``map a=<literal> b=<literal>`` lines; ``#`` starts a comment line."""
    maps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _MAP_LINE.match(line)
        if not m:
            raise SpecError(lineno, f"expected 'map a=<literal> b=<literal>', got {line!r}")
        try:
            a = parse_laurent(m.group("a"))
            b = parse_laurent(m.group("b"))
        except LiteralError as exc:
            raise SpecError(lineno, str(exc)) from exc
        try:
            maps.append(ContractionMap(a, b))
        except ContractionError as exc:
            raise SpecError(lineno, str(exc)) from exc
    if not maps:
        raise SpecError(0, "spec contains no maps")
    return IFS(tuple(maps), name)


def resolve_ifs(name_or_path):
    """Built-in name or spec-file path -> ``(IFS, default seed or None, oracle name or None)``."""
    if name_or_path in BUILTINS:
        b = BUILTINS[name_or_path]
        return b.ifs, b.seed, b.oracle
    if os.path.exists(name_or_path):
        with open(name_or_path) as fh:
            return parse_ifs_spec(fh.read(), os.path.basename(name_or_path)), None, None
    raise KeyError(f"{name_or_path!r} is neither a built-in IFS ({', '.join(BUILTINS)}) nor a file")


# -- invariance -----------------------------------------------------------


def check_invariance(A, oracle_name, points):
    """Centres of ``A`` against the oracle, and oracle points against ``A``.

    A centre passes when it, or one of its ball's boundary points, is accepted
    (left endpoints of Cantor intervals are members, midpoints are not).  Each
    sampled oracle point must fall in the sum roll of ``A`` at its largest radius.
    Returns ``(bad_centers, missed_points)``.
    """
    member = oracle(oracle_name)
    bad = []
    for b in A:
        cands = (b.center, b.center - b.radius, b.center + b.radius)
        if not any(_member_safe(member, c) for c in cands):
            bad.append(b)
    scale = max(b.radius for b in A)
    missed = []
    if scale:
        region = sum_roll(A, scale)
        missed = [p for p in points if not region.contains(p)]
    else:
        missed = [p for p in points if not A.contains(p)]
    return bad, missed


def _member_safe(member, p):
    p = parse_laurent(p) if not isinstance(p, Laurent) else p
    if member is cantor_member:
        return p.is_constant() and cantor_member(p.coefficient(0))
    return member(p)
