"""``betafractal`` command line: iterate, member, axioms, invariance.

Exit status is 0 on success, 1 when a property check fails and 2 on usage or
parse errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .fractals import (
    BUILTINS,
    ORACLES,
    SpecError,
    cantor_points,
    check_invariance,
    oracle,
    resolve_ifs,
    small_cantor_points,
)
from .geometry import Ball, BallUnion, dump_regions
from .hyperspace import iterate_to_fixed
from .laurent import Laurent, LiteralError, parse_laurent
from .suites import GROUPS, SUITES, run_suites, select_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_seed(text):
    """``"<center>,<radius>"`` -> one-ball union."""
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"seed must look like '<center>,<radius>', got {text!r}")
    c, r = (parse_laurent(p) for p in parts)
    if r.sign <= 0:
        raise UsageError(f"seed radius must be positive, got {r}")
    return BallUnion([Ball(c, r)])


def _resolve(args):
    try:
        F, default_seed, oracle_name = resolve_ifs(args.ifs)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    seed = parse_seed(args.seed) if args.seed else default_seed
    if seed is None:
        raise UsageError("--seed is required for an IFS loaded from a file")
    return F, seed, oracle_name


def _emit(args, payload, text_lines):
    if args.format == "structured":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_iterate(args):
    F, seed, _ = _resolve(args)
    target = parse_laurent(args.target)
    if target.sign <= 0:
        raise UsageError("--target must be positive")
    report = iterate_to_fixed(F, seed, target, args.max)
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(dump_regions(report.final))
    lines = []
    for s in report.steps:
        cert = s.certificate_radius.literal() if s.certificate_radius is not None else "-"
        inv = s.invariance_radius.literal() if s.invariance_radius is not None else "-"
        lines.append(f"step {s.step}: {s.ball_count} balls, certificate {cert}, invariance {inv}")
    if report.converged:
        lines.append(f"certified at step {report.converged_at} (target {target.literal()})")
    else:
        lines.append(f"no certificate within {args.max} steps (target {target.literal()})")
    _emit(args, report.to_dict(), lines)
    return EXIT_OK if report.converged else EXIT_FAIL


def cmd_member(args):
    try:
        member = oracle(args.oracle)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    p = parse_laurent(args.point)
    if args.oracle == "cantor":
        verdict = p.is_constant() and member(p.coefficient(0))
    else:
        verdict = member(p)
    _emit(args, {"oracle": args.oracle, "point": p.literal(), "member": verdict}, ["true" if verdict else "false"])
    return EXIT_OK


def _rng_seed(args):
    value = args.seed_rng if args.seed_rng is not None else args.seed
    if value is None:
        return 0
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"RNG seed must be an integer, got {value!r}") from None


def cmd_axioms(args):
    try:
        select_suites(args.suite)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    results = run_suites(args.suite, args.samples, _rng_seed(args))
    lines = []
    for r in results:
        lines.append(r.line())
        lines.extend(f"  counterexample: {f}" for f in r.failures)
    payload = [
        {"suite": r.name, "passed": r.passed, "checked": r.checked, "failures": r.failures, "elapsed": r.elapsed}
        for r in results
    ]
    _emit(args, payload, lines)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _oracle_points(oracle_name, rng, count, n):
    if oracle_name == "cantor":
        return [Laurent.const(q) for q in cantor_points(rng, count)]
    if oracle_name in ("stretched", "stretched-cantor"):
        return [Laurent.monomial(q, -1) if q else Laurent() for q in cantor_points(rng, count)]
    if oracle_name == "small-cantor":
        return small_cantor_points(rng, count, n)
    raise UsageError(f"no point sampler for oracle {oracle_name!r}")


def cmd_invariance(args):
    F, seed, oracle_name = _resolve(args)
    oracle_name = args.oracle or oracle_name
    if oracle_name is None:
        raise UsageError("--oracle is required for an IFS loaded from a file")
    if oracle_name not in ORACLES:
        raise UsageError(f"unknown oracle {oracle_name!r}")
    A = seed
    for _ in range(args.max):
        A = F(A)
    rng = random.Random(_rng_seed(args))
    points = _oracle_points(oracle_name, rng, args.points, args.max)
    bad, missed = check_invariance(A, oracle_name, points)
    ok = not bad and not missed
    lines = [f"A_{args.max}: {len(A)} balls, {len(bad)} centres rejected, {len(missed)} of {len(points)} points missed"]
    lines += [f"  rejected centre: {b}" for b in bad[:5]]
    lines += [f"  missed point: {p}" for p in missed[:5]]
    lines.append("PASS" if ok else "FAIL")
    payload = {
        "step": args.max,
        "ball_count": len(A),
        "rejected_centers": [str(b) for b in bad],
        "missed_points": [p.literal() for p in missed],
        "passed": ok,
    }
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="betafractal", description="Exact IFS attractors over Laurent polynomials.")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "structured"), default=argparse.SUPPRESS)

    it = sub.add_parser("iterate", parents=[fmt], help="iterate an IFS until a proximity certificate")
    it.add_argument("--ifs", required=True, help=f"built-in ({', '.join(BUILTINS)}) or spec file")
    it.add_argument("--seed", help="seed ball as '<center>,<radius>'")
    it.add_argument("--target", required=True)
    it.add_argument("--max", type=int, default=12)
    it.add_argument("--dump", help="write the last iterate as region lines")
    it.set_defaults(func=cmd_iterate)

    me = sub.add_parser("member", parents=[fmt], help="attractor membership oracle")
    me.add_argument("--oracle", required=True, help=", ".join(ORACLES))
    me.add_argument("--point", required=True)
    me.set_defaults(func=cmd_member)

    ax = sub.add_parser("axioms", parents=[fmt], help="run property suites")
    ax.add_argument("--suite", default="all", help=f"suite name, group ({', '.join(GROUPS)}) or 'all'")
    ax.add_argument("--samples", type=int, default=200)
    ax.add_argument("--seed", help="RNG seed (same as --seed-rng)")
    ax.add_argument("--seed-rng", type=int)
    ax.add_argument("--list", action="store_true", help="list suites and exit")
    ax.set_defaults(func=cmd_axioms)

    inv = sub.add_parser("invariance", parents=[fmt], help="oracle checks on an iterate")
    inv.add_argument("--ifs", required=True)
    inv.add_argument("--seed", help="seed ball as '<center>,<radius>'")
    inv.add_argument("--max", type=int, default=8, help="iterate index n")
    inv.add_argument("--oracle", help="override the built-in oracle")
    inv.add_argument("--points", type=int, default=100, help="oracle points to sample")
    inv.add_argument("--seed-rng", type=int)
    inv.set_defaults(func=cmd_invariance)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "axioms" and args.list:
            for name, (_, group) in SUITES.items():
                print(f"{group:12s} {name}")
            return EXIT_OK
        if getattr(args, "max", 1) < 1:
            raise UsageError("--max must be at least 1")
        return args.func(args)
    except UsageError as exc:
        print(f"betafractal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LiteralError, SpecError, OSError) as exc:
        print(f"betafractal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
