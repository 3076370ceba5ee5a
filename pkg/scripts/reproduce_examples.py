"""Iterate the built-in IFSs and print ball counts, radii and certificate steps."""
import argparse
import json
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from betafractal.fractals import BUILTINS, check_invariance
from betafractal.hyperspace import iterate_to_fixed
from betafractal.laurent import Laurent, X, parse_laurent


@dataclass
class Config:
    steps: int = 10
    cantor_target: str = "1/243"
    small_target: str = "x^3"
    stretched_target: str = "1/243*x^-1"
    json: bool = False


def run(cfg):
    targets = {
        "cantor": cfg.cantor_target,
        "cantor-paper-literal": cfg.cantor_target,
        "stretched-cantor": cfg.stretched_target,
        "small-cantor": cfg.small_target,
    }
    rows = []
    for name, b in BUILTINS.items():
        t0 = time.perf_counter()
        rep = iterate_to_fixed(b.ifs, b.seed, parse_laurent(targets[name]), cfg.steps + 1)
        A = b.seed
        for _ in range(cfg.steps):
            A = b.ifs(A)
        bad, _ = check_invariance(A, b.oracle, [])
        rows.append({
            "ifs": name,
            "target": targets[name],
            "certificate_step": rep.converged_at,
            "balls": len(A),
            "radii": sorted({str(ball.radius) for ball in A}),
            "center_valuations": sorted({c.valuation for c in A.centers if c}),
            "oracle_rejected_centers": len(bad),
            "seconds": round(time.perf_counter() - t0, 3),
        })
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    for field, default in asdict(Config()).items():
        if isinstance(default, bool):
            p.add_argument(f"--{field.replace('_', '-')}", action="store_true")
        else:
            p.add_argument(f"--{field.replace('_', '-')}", type=type(default), default=default)
    cfg = Config(**vars(p.parse_args()))
    rows = run(cfg)
    if cfg.json:
        print(json.dumps(rows, indent=2))
        return
    for r in rows:
        print(f"{r['ifs']:22s} cert@{r['certificate_step']}  A_{cfg.steps}: {r['balls']} balls, radii {r['radii']}, "
              f"valuations {r['center_valuations']}, rejected centres {r['oracle_rejected_centers']}  ({r['seconds']}s)")


if __name__ == "__main__":
    main()
