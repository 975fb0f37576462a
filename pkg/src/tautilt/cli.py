"""Command-line entry point: ``tautilt count|table|enumerate|verify|roots``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size guard.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

from . import cache, oracle, spectral
from .algebra import AlgebraSpec, InvalidAlgebraError, make_linear_kupisch, make_uniform
from .counting import ENGINE, CountEngine, InconsistencyError
from .verify import VerifyConfig, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3
SIZE_LIMIT = 80
TABLE_FAMILIES = ("t_lin", "s_lin", "t_cyc", "s_cyc", "ps_lin", "ps_cyc")

log = logging.getLogger("tautilt")


class UsageError(Exception):
    pass


def build_table(engine: CountEngine, family: str, r_max: int, n_max: int) -> List[List[int]]:
    if r_max < 1 or n_max < 1:
        raise UsageError("--r-max and --n-max must be >= 1")
    return [[engine.count(family, r, n) for n in range(1, n_max + 1)] for r in range(1, r_max + 1)]


def render_table(family: str, rows: List[List[int]], fmt: str, header: bool = False) -> str:
    n_max = len(rows[0])
    if fmt == "markdown":
        lines = [
            "| r \\ n | " + " | ".join(str(n) for n in range(1, n_max + 1)) + " |",
            "|---" * (n_max + 1) + "|",
        ]
        lines += [f"| {r} | " + " | ".join(map(str, row)) + " |" for r, row in enumerate(rows, start=1)]
        return "\n".join(lines)
    if fmt == "csv":
        lines = ["r," + ",".join(str(n) for n in range(1, n_max + 1))] if header else []
        lines += [(f"{r}," if header else "") + ",".join(map(str, row)) for r, row in enumerate(rows, start=1)]
        return "\n".join(lines)
    if fmt == "json":
        return json.dumps({"family": family, "r": list(range(1, len(rows) + 1)),
                           "n": list(range(1, n_max + 1)), "values": rows})
    raise UsageError(f"unknown format {fmt!r}")


def _parse_kupisch(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"--kupisch expects comma-separated integers, got {text!r}") from None


def _algebra_from_args(args) -> AlgebraSpec:
    if args.kupisch is not None:
        if args.shape != "linear":
            raise UsageError("--kupisch is only accepted for linear algebras; use --n/--r for cyclic")
        return make_linear_kupisch(_parse_kupisch(args.kupisch))
    if args.n is None or args.r is None:
        raise UsageError("give either --kupisch or both --n and --r")
    return make_uniform(args.shape, args.n, args.r)


def enumerate_lines(A: AlgebraSpec, kind: str) -> List[str]:
    if kind == "tau":
        modules = list(oracle.enumerate_tau_tilting(A))
    else:
        pairs = oracle.enumerate_support_tau_tilting(A)
        if kind != "support":
            proper, proper_np = oracle.filter_proper_np(A, pairs)
            pairs = proper if kind == "proper" else proper_np
        modules = [p.module for p in pairs]
    return [oracle.render_module(M) for M in modules] + [f"count: {len(modules)}"]


def cmd_count(args, engine: CountEngine) -> int:
    print(engine.count(args.family, args.r, args.n))
    return EXIT_OK


def cmd_table(args, engine: CountEngine) -> int:
    rows = build_table(engine, args.family, args.r_max, args.n_max)
    print(render_table(args.family, rows, args.format, args.header))
    return EXIT_OK


def cmd_enumerate(args, engine: CountEngine) -> int:
    A = _algebra_from_args(args)
    size = sum(A.kupisch)
    if size > SIZE_LIMIT:
        log.warning("%s has %d indecomposables (limit %d)", A, size, SIZE_LIMIT)
        if not args.force:
            print(f"refusing to enumerate {size} indecomposables; pass --force", file=sys.stderr)
            return EXIT_SIZE
    for line in enumerate_lines(A, args.kind):
        print(line)
    return EXIT_OK


def cmd_verify(args, engine: CountEngine) -> int:
    cfg = VerifyConfig(
        n_max_lin=args.n_max_lin,
        r_max_lin=args.r_max_lin,
        n_max_cyc=args.n_max_cyc,
        r_max_cyc=args.r_max_cyc,
        tol=args.tol,
        random_kupisch=args.random_kupisch,
        seed=args.seed,
        engine=engine,
    )
    results = run_verification(cfg, args.groups)
    for res in results:
        print(res.line())
    failed = [res for res in results if not res.ok]
    print(f"{len(results) - len(failed)}/{len(results)} groups passed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_roots(args, engine: CountEngine) -> int:
    p = spectral.char_poly(args.r)
    rs = spectral.find_roots(p, args.tol)
    print(f"F_{args.r}(X) = {p}")
    for z, res in zip(rs.roots, rs.residuals):
        print(f"  {z.real:+.15f} {z.imag:+.15f}i   |F| = {res:.2e}")
    print(f"min gap: {rs.min_gap:.6g}")
    print(f"dominant growth: {max(abs(z) for z in rs.roots):.15f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tautilt", description=__doc__.splitlines()[0])
    parser.add_argument("--cache", help=f"count cache file (default: ${cache.CACHE_ENV}, none if unset)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print one exact count")
    p.add_argument("family", type=str.lower, choices=TABLE_FAMILIES)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="render a table of counts, rows r and columns n")
    p.add_argument("family", type=str.lower, choices=TABLE_FAMILIES)
    p.add_argument("--r-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    p.add_argument("--header", action="store_true", help="add row/column labels to csv output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="list modules by brute force")
    p.add_argument("shape", choices=("linear", "cyclic"))
    p.add_argument("--kupisch", help="comma-separated Kupisch series (linear only)")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--kind", choices=("tau", "support", "proper", "proper_np"), default="tau")
    p.add_argument("--force", action="store_true", help=f"enumerate beyond {SIZE_LIMIT} indecomposables")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="cross-check enumeration, formulas and tables")
    p.add_argument("--n-max-lin", type=int, default=8)
    p.add_argument("--r-max-lin", type=int, default=6)
    p.add_argument("--n-max-cyc", type=int, default=8)
    p.add_argument("--r-max-cyc", type=int, default=5)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--random-kupisch", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--groups", nargs="*", help="run only these check groups")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("roots", help="roots of the characteristic polynomial")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--tol", type=float, default=spectral.DEFAULT_ROOT_TOL)
    p.set_defaults(func=cmd_roots)
    return parser


def main(argv: Optional[Sequence[str]] = None, engine: Optional[CountEngine] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    engine = engine or ENGINE
    cache_path = cache.resolve_path(args.cache)
    if args.command in ("count", "table", "verify"):
        loaded = cache.load_into(engine, cache_path)
        log.debug("loaded %d cached counts", loaded)
    try:
        code = args.func(args, engine)
    except (UsageError, InvalidAlgebraError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InconsistencyError, spectral.RootFindingError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.command in ("count", "table"):
        cache.store_from(engine, cache_path)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
