"""Command-line front end: single counts, verified scans, error reports.

Exit statuses: 0 success, 2 usage error, 3 computation error or failed
verification check.
"""

import argparse
import sys

from . import arith, asymptotic, counter, diophantine, poset

SCAN_HEADER = ["n", "T", "method", "terms_evaluated"]
REPORT_HEADER = ["n", "T", "M", "f_half_nsq", "abs_err_M", "abs_err_f", "normalized_err"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_COMPUTE = 3


def _real(x: float) -> str:
    return format(x, ".17g")


def _emit(rows, header, fmt, out_path):
    if fmt in ("csv", "tsv"):
        sep = "," if fmt == "csv" else "\t"
        lines = [sep.join(header)] + [sep.join(row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
                  for i, h in enumerate(header)]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        for row in rows:
            lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)))
        text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_count(args) -> int:
    result = counter.count_T3_mobius(args.n)
    print(f"T3({args.n}) = {result.T}")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    result = counter.count_T3_oracle(args.n, budget=max(args.oracle_limit, args.n))
    print(f"T3({args.n}) = {result.T}")
    return EXIT_OK


def _cmd_scan(args) -> int:
    results = counter.scan(args.n_from, args.n_to, args.stride,
                           oracle_limit=args.oracle_limit)
    rows = [[str(r.n), str(r.T), r.method, str(r.terms_evaluated)] for r in results]
    _emit(rows, SCAN_HEADER, args.format, args.out)
    return EXIT_OK


def _cmd_report(args) -> int:
    rows = asymptotic.error_report(args.n_from, args.n_to, args.stride,
                                   truncation=args.truncation)
    table = [
        [str(r.n), str(r.T), _real(r.M), _real(r.fn_half_nsq),
         _real(r.abs_err_M), _real(r.abs_err_f), _real(r.normalized_err)]
        for r in rows
    ]
    _emit(table, REPORT_HEADER, args.format, args.out)
    return EXIT_OK


def _verify_checks(oracle_limit: int):
    """Yield (name, passed) for the built-in cross-check suite."""
    import random

    # Mobius: closed form vs. recursion on products of up to 3 local posets
    for primes in [(2,), (2, 3), (2, 3, 5)]:
        elements = poset.enumerate_poset(primes)
        ok = all(
            poset.mobius_closed(x) == poset.mobius_recursive(poset.BOTTOM, x, elements)
            for x in elements
        )
        yield f"mobius closed=recursive on primes {primes}", ok

    # Diophantine: closed count vs. brute force on random instances
    rng = random.Random(20260826)
    triples = diophantine.coprime_squarefree_triples(200)
    ok = True
    for _ in range(200):
        g = triples[rng.randrange(len(triples))]
        m = rng.randint(1, 10_000)
        closed = diophantine.count_positive_closed(m, g).count
        if closed != diophantine.count_positive_bruteforce(m, g):
            ok = False
            break
    yield "diophantine closed=bruteforce on 200 random instances", ok

    # Counter: signed sum vs. direct enumeration
    limit = max(oracle_limit, 10)
    ok = all(
        counter.count_T3_mobius(n).T == counter.count_T3_oracle(n, budget=limit).T
        for n in range(3, limit + 1)
    )
    yield f"T3 mobius=oracle for 3 <= n <= {limit}", ok

    # Totient identity for 2-part compositions
    ok = all(counter.count_T2_oracle(n) == arith.euler_phi(n) for n in range(2, 2001))
    yield "T2 oracle = euler_phi for 2 <= n <= 2000", ok


def _cmd_verify(args) -> int:
    failed = 0
    for name, ok in _verify_checks(args.oracle_limit):
        print(f"[{'PASS' if ok else 'FAIL'}] {name}")
        if not ok:
            failed += 1
    return EXIT_OK if failed == 0 else EXIT_COMPUTE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coprime-count",
        description="Count 3-part compositions of n with pairwise-coprime parts.",
    )
    parser.add_argument("--oracle-limit", type=int, default=120,
                        help="cross-check scans against brute force up to this n")
    parser.add_argument("--truncation", type=int, default=None,
                        help="prime truncation for the density constant f(n)")
    parser.add_argument("--format", choices=["csv", "tsv", "human"], default="human")
    parser.add_argument("--out", default=None, help="write output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact T3(n) via the signed triple sum")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("oracle", help="exact T3(n) via brute-force enumeration")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("scan", help="T3(n) over a range with oracle cross-check")
    p.add_argument("n_from", type=int)
    p.add_argument("n_to", type=int)
    p.add_argument("stride", type=int, nargs="?", default=1)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("report", help="error rows T vs. main term over a range")
    p.add_argument("n_from", type=int)
    p.add_argument("n_to", type=int)
    p.add_argument("stride", type=int, nargs="?", default=1)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("verify", help="run the built-in cross-check suite")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, arith.ResourceLimitError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
