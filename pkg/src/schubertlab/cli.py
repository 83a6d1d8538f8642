"""Command-line entry point: ``schubertlab <subcommand> ...``.

Exit status is 0 iff no reported claim has status ``fail``; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import report
from .bundles import BundleError
from .cohomology import GrassmannProduct, SchubertClass, degree_wrt, integrate
from .grammar import parse_bundle
from .partitions import Partition
from .series import ROWS, check_row, row_status

DEFAULTS = {"prime": 1009, "seed": 0, "samples": 100}


def _sampling_flags(p: argparse.ArgumentParser, samples: int = DEFAULTS["samples"]) -> None:
    p.add_argument("--prime", type=int, default=DEFAULTS["prime"], help="field size (default 1009)")
    p.add_argument("--seed", type=int, default=DEFAULTS["seed"], help="master seed (default 0)")
    p.add_argument("--samples", type=int, default=samples, help=f"sample count (default {samples})")


def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--timings", action="store_true", help="include per-claim runtimes")


def _parse_sigma(text: str, ring: GrassmannProduct) -> SchubertClass:
    """``4,3,2,1`` on one factor; ``2,1|1|`` on a product (empty = identity)."""
    chunks = text.split("|")
    if len(chunks) != len(ring.factors):
        raise ValueError(f"sigma {text!r} needs {len(ring.factors)} '|'-separated parts")
    parts = [Partition(int(x) for x in c.split(",") if x.strip()) for c in chunks]
    return ring.sigma(*parts)


def _parse_chern(text: str, ring: GrassmannProduct) -> SchubertClass:
    """``<bundle-expr>:<degree>``."""
    expr, sep, degree = text.rpartition(":")
    if not sep:
        raise ValueError(f"expected <bundle>:<degree>, got {text!r}")
    return ring.chern(parse_bundle(expr), int(degree))


def _product(args, ring: GrassmannProduct) -> SchubertClass:
    out = ring.one()
    for c in args.chern or []:
        out = out * _parse_chern(c, ring)
    for s in args.sigma or []:
        out = out * _parse_sigma(s, ring)
    return out


def _print(obj, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(obj)


def cmd_series(args) -> int:
    labels = [args.row] if args.row else list(ROWS)
    rows = [ROWS[label] for label in labels]
    results = [(row, check_row(row)) for row in rows]
    if args.json:
        _print([{"row": row.to_json(), "status": row_status(lines),
                 "checks": [c.to_json() for c in lines]} for row, lines in results], True)
    else:
        for row, lines in results:
            print(f"{row.label}  a={row.a}  C={row.C.label}  X={row.X.label if row.X else '??'}  "
                  f"P={row.P.label if row.P else '??'}  [{row_status(lines)}]")
            for c in lines:
                extra = f"  ({c.note})" if c.note else ""
                print(f"    {c.name:<28} expected {c.expected!s:<6} computed {c.computed!s:<6} "
                      f"{c.status}{extra}")
    return int(any(row_status(lines) == "fail" for _, lines in results))


def cmd_chern(args) -> int:
    ring = GrassmannProduct.parse(args.ring)
    e = parse_bundle(args.bundle)
    c = ring.chern(e, args.degree)
    _print(c.to_json() if args.json else repr(c), args.json)
    return 0


def cmd_integrate(args) -> int:
    ring = GrassmannProduct.parse(args.ring)
    value = integrate(_product(args, ring))
    _print({"ring": str(ring), "integral": str(value)} if args.json else value, args.json)
    return 0


def cmd_degree(args) -> int:
    ring = GrassmannProduct.parse(args.ring)
    weights = tuple(int(w) for w in args.weights.split(","))
    value = degree_wrt(_product(args, ring), weights)
    _print({"ring": str(ring), "weights": [str(w) for w in weights], "degree": str(value)}
           if args.json else value, args.json)
    return 0


def _suite(run) -> callable:
    def handler(args) -> int:
        rec = report.Recorder()
        run(rec, args)
        seed = getattr(args, "seed", None)
        prime = getattr(args, "prime", None)
        sys.stdout.write(report.emit(rec.entries, "json" if args.json else "text",
                                     prime=prime, seed=seed, timings=args.timings))
        return report.exit_code(rec.entries)
    return handler


def cmd_reproduce_all(args) -> int:
    report.check_prime(args.prime)
    entries = report.run_all(args.prime, args.seed)
    sys.stdout.write(report.emit(entries, "json" if args.json else "text",
                                 prime=args.prime, seed=args.seed, timings=args.timings))
    return report.exit_code(entries)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schubertlab",
                                 description="Exact verifiers for Schubert calculus, forms and tensors.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="exceptional-series table and its formula checks")
    p.add_argument("--row", choices=list(ROWS))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("chern", help="Chern class of a bundle expression in the Schubert basis")
    p.add_argument("bundle", help="e.g. 'wedge(3,dual(taut(0)))'")
    p.add_argument("--ring", required=True, help="e.g. 'G(5,9)', 'G(2,4)^3', 'G(2,4)xG(3,6)'")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chern)

    for name, func, helptext in (("integrate", cmd_integrate, "integral of a product of classes"),
                                 ("degree", cmd_degree, "degree w.r.t. a mixed polarization")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--ring", required=True)
        p.add_argument("--chern", action="append", metavar="BUNDLE:DEGREE",
                       help="factor c_d(bundle); repeatable")
        p.add_argument("--sigma", action="append", metavar="PARTS",
                       help="factor sigma_lambda, e.g. '4,3,2,1' or '2,1|1|'; repeatable")
        if name == "degree":
            p.add_argument("--weights", required=True, help="comma-separated, e.g. '1,1,0'")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    suites = (
        ("five-spaces", "count of 5-spaces killing a 2-form and a 3-form on V9", None,
         lambda rec, a: report.suite_five_spaces(rec, a.prime, a.seed)),
        ("d4-degrees", "degrees and Chern identities on G(2,4)^3", False,
         lambda rec, a: report.suite_d4(rec)),
        ("orbits", "restricted rank of random 6-spaces and orbit witnesses", 1000,
         lambda rec, a: report.suite_orbits(rec, a.prime, a.seed, a.samples)),
        ("kernels", "contraction kernels and dim T^Lambda", DEFAULTS["samples"],
         lambda rec, a: report.suite_kernels(rec, a.prime, a.seed, a.samples)),
        ("cayley", "S3-points, triality and plane triples for a random tensor", DEFAULTS["samples"],
         lambda rec, a: report.suite_cayley(rec, a.prime, a.seed, a.samples)),
        ("graph-identity", "graph-subspace vanishing identity", DEFAULTS["samples"],
         lambda rec, a: report.suite_graph(rec, a.prime, a.seed, a.samples)),
    )
    for name, helptext, samples, run in suites:
        p = sub.add_parser(name, help=helptext)
        if samples is None:
            p.add_argument("--prime", type=int, default=DEFAULTS["prime"])
            p.add_argument("--seed", type=int, default=DEFAULTS["seed"])
        elif samples is not False:
            _sampling_flags(p, samples)
        _output_flags(p)
        p.set_defaults(func=_suite(run))

    p = sub.add_parser("reproduce-all", help="every claim at acceptance sample sizes")
    p.add_argument("--prime", type=int, default=DEFAULTS["prime"])
    p.add_argument("--seed", type=int, default=DEFAULTS["seed"])
    _output_flags(p)
    p.set_defaults(func=cmd_reproduce_all)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "prime", None) is not None:
        try:
            report.check_prime(args.prime)
        except ValueError as exc:
            parser.error(str(exc))
    try:
        return args.func(args)
    except (BundleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
