"""Command-line front end.

Exit codes: 0 success / property holds, 1 property fails or a constraint is
violated, 2 usage error, 3 search budget or capacity exhausted.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from .analyze import analyze_certificate, constraint_report
from .bounds import lower_bound_terms, start_bound, upper_bound_terms, upper_bound_value
from .construct import (
    compose_robust, extend_plus_one, find_regular_high_girth, from_regular_graph,
    johnson3_certificate, upper_bound_certificate,
)
from .errors import BudgetExhausted, CapacityError, ResolveKitError
from .groups import (
    irredundant_group_sizes, rank, sigma_group, verify_extremal_structure, DEFAULT_ORDER_CAP,
)
from .io import format_certificate, read_certificate, read_group
from .search import exists_of_size, local_search, sigma_exact
from .verify import is_robust, is_separating, witness_unseparated

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _tf(x: bool) -> str:
    return "true" if x else "false"


def cmd_verify(args) -> int:
    cert = read_certificate(args.cert)
    ok = is_robust(cert) if args.robust else is_separating(cert)
    print(f"{'robust' if args.robust else 'separating'}: {_tf(ok)}")
    print(f"m: {cert.m}  k: {cert.k}  size: {len(cert)}")
    if not ok:
        a, b = witness_unseparated(cert, robust_mode=args.robust)
        print(f"witness: {{{','.join(map(str, a))}}} {{{','.join(map(str, b))}}}")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_analyze(args) -> int:
    cert = read_certificate(args.cert)
    rep = analyze_certificate(cert)
    for key, val in rep.as_dict().items():
        print(f"{key}: {val}")
    status = constraint_report(cert, rep)
    for label, st in status.items():
        print(f"constraint {label}: {st}")
    return EXIT_FALSE if any(st == "fail" for st in status.values()) else EXIT_OK


def cmd_search(args) -> int:
    if args.local:
        if args.size is None:
            print("error: --local needs --size", file=sys.stderr)
            return EXIT_USAGE
        cert = local_search(args.m, args.k, args.size, args.robust, seed=args.seed, iterations=args.iterations)
        if cert is None:
            print("found: false")
            return EXIT_FALSE
        print("found: true")
        sys.stdout.write(format_certificate(cert))
        return EXIT_OK
    threads = 1 if args.canonical else args.threads
    if args.size is not None:
        cert = exists_of_size(args.m, args.k, args.size, args.robust, args.budget, threads)
        print(f"exists: {_tf(cert is not None)}")
        if cert is not None:
            sys.stdout.write(format_certificate(cert))
        return EXIT_OK if cert is not None else EXIT_FALSE
    value, cert = sigma_exact(args.m, args.k, args.robust, args.budget, threads)
    print(f"{'sigma*' if args.robust else 'sigma'}({args.m},{args.k}) = {value}")
    sys.stdout.write(format_certificate(cert))
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.method == "extend":
        cert = extend_plus_one(read_certificate(args.cert), args.alpha_index)
    elif args.method == "compose":
        cert = compose_robust(read_certificate(args.cert), read_certificate(args.cert2 or args.cert))
    elif args.method == "girth":
        g = find_regular_high_girth(args.k, args.max_vertices, args.seed)
        if g is None:
            print(f"error: no {args.k}-regular graph of girth >= {2 * args.k + 1} found", file=sys.stderr)
            return EXIT_BUDGET
        cert = from_regular_graph(g, args.k)
    elif args.method == "johnson3":
        cert = johnson3_certificate(args.q)
    else:
        if args.m is None:
            print("error: --method auto needs --m", file=sys.stderr)
            return EXIT_USAGE
        cert = upper_bound_certificate(args.m, args.k)
    text = format_certificate(cert)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}: m={cert.m} k={cert.k} size={len(cert)}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    m, k = args.m, args.k
    if k >= 3 and m >= 2 * k - 1:
        terms = lower_bound_terms(m, k)
        for label, v in terms:
            print(f"lower term [{label}]: {v}")
        print(f"lower={max(v for _, v in terms)}")
        for label, v in upper_bound_terms(m, k):
            print(f"upper term [{label}]: {v}")
        print(f"upper={upper_bound_value(m, k)}")
    else:
        print(f"lower term [plumbing: counting log_{{k+1}} C(m,k)]: {start_bound(m, k)}")
        print(f"lower={start_bound(m, k)}")
    return EXIT_OK


def cmd_group(args) -> int:
    G = read_group(args.file)
    if args.action == "rank":
        print(f"rank: {rank(G)}")
    elif args.action == "sigma":
        value, witness = sigma_group(G, args.budget)
        print(f"sigma: {value}")
        print(f"witness: {' '.join(map(str, witness))}")
    elif args.action == "extremal":
        rep = verify_extremal_structure(G, args.budget, args.order_cap)
        print("\n".join(rep.as_lines()))
        return EXIT_OK if rep.passed() else EXIT_FALSE
    else:
        res = irredundant_group_sizes(G, args.cap)
        print(f"sizes: {' '.join(map(str, sorted(res.sizes)))}")
        print(f"complete: {_tf(res.complete)}")
        return EXIT_OK if res.complete else EXIT_BUDGET
    return EXIT_OK


TABLE1 = {4: (3, 3), 5: (3, 4), 6: (4, 5), 7: (5, 5), 8: (5, 5), 9: (6, 6),
          10: (7, 7), 11: (7, 7), 12: (8, 8), 13: (8, 9)}


def cmd_table1(args) -> int:
    ms = list(range(4, args.max_m + 1))
    rows = {False: [], True: []}
    for robust in (False, True):
        for m in ms:
            t0 = time.perf_counter()
            value, _ = sigma_exact(m, 3, robust, args.budget)
            rows[robust].append(value)
            logging.info("m=%d robust=%s value=%d (%.2fs)", m, robust, value, time.perf_counter() - t0)
    width = max(len("sigma*(m,3)"), 3)
    print("m".ljust(width) + "".join(f"{m:>4}" for m in ms))
    print("sigma(m,3)".ljust(width) + "".join(f"{v:>4}" for v in rows[False]))
    print("sigma*(m,3)".ljust(width) + "".join(f"{v:>4}" for v in rows[True]))
    mismatch = [m for i, m in enumerate(ms) if m in TABLE1 and (rows[False][i], rows[True][i]) != TABLE1[m]]
    if mismatch:
        print(f"mismatch with the published table at m = {mismatch}")
        return EXIT_FALSE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="resolvekit", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("--cert", required=True)
    p.add_argument("--robust", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="structural report and constraint checks")
    p.add_argument("--cert", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", help="exact or local search for the Johnson action")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--robust", action="store_true")
    p.add_argument("--size", type=int, help="decide a single target size instead of minimizing")
    p.add_argument("--budget", type=int, help="search node limit")
    p.add_argument("--canonical", action="store_true", help="single-threaded, canonical witness")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--local", action="store_true", help="randomized local search (needs --size)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=int, default=100_000)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("construct", help="upper-bound constructions")
    p.add_argument("--method", choices=["extend", "compose", "girth", "johnson3", "auto"], required=True)
    p.add_argument("--cert", help="input certificate (extend, compose)")
    p.add_argument("--cert2", help="second certificate (compose; defaults to --cert)")
    p.add_argument("--alpha-index", type=int, default=0)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="lower and upper bound terms")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("group", help="permutation-group operations")
    p.add_argument("action", choices=["sigma", "rank", "extremal", "irredundant"])
    p.add_argument("--file", required=True)
    p.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    p.add_argument("--budget", type=int)
    p.add_argument("--cap", type=int, default=1 << 16, help="subset enumeration cap (irredundant)")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("table1", help="exact values of sigma(m,3) and sigma*(m,3) from m=4")
    p.add_argument("--max-m", type=int, default=9)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_table1)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (BudgetExhausted, CapacityError) as exc:
        extra = ""
        if isinstance(exc, BudgetExhausted) and exc.lower is not None:
            extra = f" (interval [{exc.lower}, {exc.upper if exc.upper is not None else '?'}])"
        print(f"budget exhausted: {exc}{extra}", file=sys.stderr)
        return EXIT_BUDGET
    except (ResolveKitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
