"""Compare the closed-form sum roll with the depth-limited iterated-roll search.

Prints agreement counts and, per depth, how often the search reaches points the
closed form accepts; deeper searches should close the gap near the boundary.
"""
import argparse
import random
from dataclasses import dataclass
from fractions import Fraction

from betafractal.geometry import sum_roll, sum_roll_member
from betafractal.laurent import Laurent
from betafractal.sampling import rand_ball_union, rand_radius, rand_tail
from betafractal.suites import brute_force_sum_roll


@dataclass
class Config:
    instances: int = 300
    depths: tuple = (1, 2, 4, 6)
    seed: int = 0


def sample(rng):
    A = rand_ball_union(rng, 2, -4, 4, max_den=20)
    r = rand_radius(rng, -4, 4, max_den=20)
    b = rng.choice(A.balls)
    v = r.valuation
    d = r.lead * Fraction(rng.randint(0, 140), 64)
    y = b.center + rng.choice((1, -1)) * (b.radius + Laurent.monomial(d, v) + rand_tail(rng, v, v + 2))
    return A, r, y


def run(cfg):
    rng = random.Random(cfg.seed)
    cases = [sample(rng) for _ in range(cfg.instances)]
    closed = [sum_roll_member(y, A, r) for A, r, y in cases]
    interval = [sum_roll(A, r).contains(y) for A, r, y in cases]
    print(f"closed form vs interval route: {sum(a == b for a, b in zip(closed, interval))}/{len(cases)} agree")
    print(f"closed form accepts {sum(closed)} of {len(cases)}")
    for depth in cfg.depths:
        hits = [brute_force_sum_roll(y, A, r, depth) for A, r, y in cases]
        unsound = sum(h and not c for h, c in zip(hits, closed))
        reached = sum(h and c for h, c in zip(hits, closed))
        print(f"depth {depth}: search reaches {reached}/{sum(closed)} accepted points, {unsound} outside the closed form")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--instances", type=int, default=Config.instances)
    p.add_argument("--depths", type=int, nargs="+", default=list(Config.depths))
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    run(Config(a.instances, tuple(a.depths), a.seed))


if __name__ == "__main__":
    main()
