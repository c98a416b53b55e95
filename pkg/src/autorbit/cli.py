"""Command-line front end.

Groups are comma-separated cyclic orders (`-g 2,4,8,8`), elements are
comma-separated residues with matching arity.  Results go to stdout,
diagnostics to stderr.  JSON output renders unbounded integers as decimal
strings so 64-bit consumers cannot truncate them.

Exit codes: 0 success (autoeq: equivalent), 1 autoeq inequivalent, 2 parse
error, 3 arity mismatch, 4 factorization failure, 5 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from . import kernels, oracle
from .arith import factorize
from .equivalence import are_automorphic, quotient_key
from .errors import (
    CapacityExceeded,
    DimensionMismatch,
    FactorizationFailure,
    NonPositiveModulus,
)
from .groups import AbelianGroup, CanonicalGroupKey, GroupElement
from .orbits import DEFAULT_ENUMERATION_CAP, enumerate_orbits

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_PARSE = 2
EXIT_ARITY = 3
EXIT_FACTORIZATION = 4
EXIT_CAPACITY = 5


class SpecError(Exception):
    """A group/element spec failed to parse."""


def parse_int_list(spec: str) -> list[int]:
    try:
        return [int(part.strip()) for part in spec.split(",")]
    except ValueError as exc:
        raise SpecError(f"cannot parse integer list {spec!r}") from exc


def parse_group(spec: str) -> AbelianGroup:
    try:
        return AbelianGroup(parse_int_list(spec))
    except NonPositiveModulus as exc:
        raise SpecError(str(exc)) from exc


def parse_element(G: AbelianGroup, spec: str) -> GroupElement:
    return G.element(parse_int_list(spec))


def _key_json(key: CanonicalGroupKey) -> dict:
    return {
        "primary": {str(p): list(exps) for p, exps in key.parts},
        "elementary": [str(d) for d in key.elementary_divisors()],
        "invariant": [str(m) for m in key.invariant_factors()],
        "order": str(key.order()),
    }


def cmd_quotient(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    x = parse_element(G, args.element)
    key = quotient_key(G, x, method=args.method)
    if args.format == "json":
        payload = {
            "group": [str(d) for d in G.moduli],
            "element": [str(c) for c in x.coords],
            "method": args.method,
            "quotient": _key_json(key),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"elementary: {key.describe_elementary()}")
        print(f"invariant: {key.describe_invariant()}")
    return EXIT_OK


def cmd_autoeq(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    x = parse_element(G, args.x)
    y = parse_element(G, args.y)
    kx = quotient_key(G, x, method=args.method)
    ky = quotient_key(G, y, method=args.method)
    if args.oracle:
        equivalent = oracle.is_automorphic_image_bruteforce(G, x, y, cap=args.cap)
    else:
        equivalent = are_automorphic(G, x, y, method=args.method)
    if args.format == "json":
        payload = {
            "group": [str(d) for d in G.moduli],
            "x": [str(c) for c in x.coords],
            "y": [str(c) for c in y.coords],
            "x_quotient": _key_json(kx),
            "y_quotient": _key_json(ky),
            "equivalent": equivalent,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"x quotient: {kx.describe_invariant()}")
        print(f"y quotient: {ky.describe_invariant()}")
        print("equivalent" if equivalent else "not equivalent")
    return EXIT_OK if equivalent else EXIT_NOT_EQUIVALENT


def cmd_orbits(args: argparse.Namespace) -> int:
    G = parse_group(args.group)
    if args.oracle:
        partition = oracle.brute_orbits(G, cap=args.cap)
        rows = []
        for orbit in partition:
            rep = min(e.coords for e in orbit)
            rows.append(
                {
                    "size": len(orbit),
                    "representative": rep,
                    "quotient": quotient_key(G, G.element(rep)),
                }
            )
    else:
        summaries = enumerate_orbits(G, cap=args.cap)
        rows = [
            {
                "size": s.size,
                "representative": s.representatives[0].realize(G).coords,
                "quotient": s.quotient_key,
                "forms": len(s.representatives),
            }
            for s in summaries
        ]
    total = sum(r["size"] for r in rows)
    if args.format == "json":
        payload = {
            "group": [str(d) for d in G.moduli],
            "order": str(G.order),
            "orbit_count": len(rows),
            "size_total": str(total),
            "orbits": [
                {
                    "quotient": _key_json(r["quotient"]),
                    "size": str(r["size"]),
                    "representative": [str(c) for c in r["representative"]],
                    **({"forms": r["forms"]} if "forms" in r else {}),
                }
                for r in rows
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"group: {','.join(str(d) for d in G.moduli)}")
        print(f"order: {G.order}")
        name_width = max(
            [len(r["quotient"].describe_invariant()) for r in rows] + [len("quotient")]
        )
        print(f"{'quotient':<{name_width}}  {'size':>8}  representative")
        for r in rows:
            rep = ",".join(str(c) for c in r["representative"])
            print(
                f"{r['quotient'].describe_invariant():<{name_width}}  {r['size']:>8}  {rep}"
            )
        print(f"orbits: {len(rows)}")
        print(f"size total: {total}")
    return EXIT_OK


def cmd_factor(args: argparse.Namespace) -> int:
    try:
        n = int(args.n)
    except ValueError as exc:
        raise SpecError(f"cannot parse integer {args.n!r}") from exc
    if n < 1:
        raise SpecError(f"factor requires n >= 1, got {n}")
    factors = factorize(n)
    if args.format == "json":
        print(json.dumps({"n": str(n), "factors": {str(p): e for p, e in factors.items()}}))
    else:
        body = " * ".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in factors.items())
        print(f"{n} = {body if body else 1}")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    if args.model:
        rows = bench_mod.model_rows(max_rank=args.max_rank if args.max_rank else 600)
        sys.stdout.write(bench_mod.model_to_csv(rows))
        print(f"model crossover rank: {bench_mod.model_crossover()}", file=sys.stderr)
        return EXIT_OK
    if args.ranks:
        ranks = parse_int_list(args.ranks)
    else:
        ranks = bench_mod.default_rank_schedule(args.max_rank or 64)
    methods = tuple(m.strip() for m in args.methods.split(","))
    for m in methods:
        if m not in ("fast", "snf"):
            raise SpecError(f"unknown method {m!r}")
    rows = bench_mod.run_scaling(
        ranks,
        methods=methods,
        trials=args.trials,
        backend=args.backend,
        snf_max_rank=args.snf_max_rank,
    )
    sys.stdout.write(bench_mod.rows_to_csv(rows))
    for method in sorted({r.method for r in rows}):
        points = bench_mod.method_points(rows, method)
        if len(points) >= 2:
            fit = bench_mod.fit_power_law(points)
            print(
                f"fit {method}: mean_ms ~= {fit.coefficient:.6g} * rank^{fit.exponent:.4f}"
                f" (r2={fit.r_squared:.4f})",
                file=sys.stderr,
            )
    print(f"kernel backend: {kernels.active_backend()}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autorbit",
        description="Finite abelian groups: quotients by cyclic subgroups, "
        "automorphic equivalence of elements, and orbit enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quotient", help="canonical form of G/<x>")
    q.add_argument("-g", "--group", required=True, help="cyclic orders, e.g. 2,4,8,8")
    q.add_argument("-x", "--element", required=True, help="coordinates, e.g. 2,1,2,4")
    q.add_argument("--method", choices=("fast", "snf"), default="fast")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_quotient)

    a = sub.add_parser("autoeq", help="is some automorphism mapping x to y?")
    a.add_argument("-g", "--group", required=True)
    a.add_argument("-x", required=True, help="first element")
    a.add_argument("-y", required=True, help="second element")
    a.add_argument("--method", choices=("fast", "snf"), default="fast")
    a.add_argument(
        "--oracle",
        action="store_true",
        help="decide by exhaustive automorphism search instead (desk-scale)",
    )
    a.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(func=cmd_autoeq)

    o = sub.add_parser("orbits", help="list all automorphic orbits")
    o.add_argument("-g", "--group", required=True)
    o.add_argument("--format", choices=("text", "json"), default="text")
    o.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    o.add_argument(
        "--oracle",
        action="store_true",
        help="partition by exhaustive automorphism action instead (desk-scale)",
    )
    o.set_defaults(func=cmd_orbits)

    f = sub.add_parser("factor", help="prime factorization")
    f.add_argument("n")
    f.add_argument("--format", choices=("text", "json"), default="text")
    f.set_defaults(func=cmd_factor)

    b = sub.add_parser("bench", help="time the fast and snf paths on C4^n")
    b.add_argument("--max-rank", type=int, default=None)
    b.add_argument("--ranks", help="explicit comma-separated rank list")
    b.add_argument("--trials", type=int, default=5)
    b.add_argument("--methods", default="fast,snf")
    b.add_argument(
        "--backend", choices=("auto", "compiled", "pure", "both"), default="auto"
    )
    b.add_argument(
        "--snf-max-rank",
        type=int,
        default=128,
        help="skip the snf method above this rank (it is cubic)",
    )
    b.add_argument(
        "--family",
        choices=("c4",),
        default="c4",
        help="benchmark family (C4^n)",
    )
    b.add_argument(
        "--model",
        action="store_true",
        help="emit the analytic operation-count curves instead of timings",
    )
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DimensionMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARITY
    except FactorizationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FACTORIZATION
    except CapacityExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
