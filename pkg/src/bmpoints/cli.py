"""Command-line front end.

Subcommands: compute (run an algorithm on a point file and print or
serialize the result after verifying it), gen (seeded point-set files),
bench (algorithm grid with CSV output), verify (re-check a stored result
against its point file).  Exit codes: 0 success, 1 failed verification,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import bench_csv, run_bench
from .bm import BMResult, bm_run, gpbm_run, spbm_run
from .fields import FieldError, make_field
from .orders import ORDERS, order_by_name
from .points import format_point_file, parse_point_file
from .poly import (monomial_text, poly_from_json_terms, poly_json_terms,
                   poly_text)
from .randgen import gen_points
from .verify import verify_parts, verify_result


def result_to_json(result: BMResult) -> dict:
    order = result.order
    return {
        "field": result.field.name,
        "order": order.name,
        "algorithm": result.algorithm,
        "G": [poly_json_terms(g, order) for g in result.G],
        "N": [[i, j] for i, j in result.N],
        "Q": [poly_json_terms(q, order) for q in result.Q],
        "pointPermutation": list(result.point_permutation),
    }


def result_text(result: BMResult) -> str:
    order = result.order
    lines = [f"field: {result.field.name}",
             f"order: {order.name}",
             f"algorithm: {result.algorithm}",
             f"points: {len(result.points)}",
             "G:"]
    lines += [f"  {poly_text(g, order)}" for g in result.G]
    lines.append("N: " + ", ".join(monomial_text(e) for e in result.N))
    lines.append("Q:")
    lines += [f"  {poly_text(q, order)}" for q in result.Q]
    lines.append("pointPermutation: "
                 + " ".join(str(k) for k in result.point_permutation))
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="bmpoints",
        description="Groebner bases and Newton interpolation bases of "
                    "vanishing ideals for planar point sets.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="run one algorithm on a point file")
    p.add_argument("--field", required=True,
                   help="field spec: q:<prime> or rational")
    p.add_argument("--order", required=True, choices=sorted(ORDERS))
    p.add_argument("--algo", default="auto",
                   choices=["bm", "spbm", "gpbm", "auto"])
    p.add_argument("--points", required=True, help="point file, one x,y per line")
    p.add_argument("--out", default="text", choices=["json", "text"])

    p = sub.add_parser("gen", help="write a seeded random point file")
    p.add_argument("--field", required=True)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("bench", help="time an algorithm grid, emit CSV")
    p.add_argument("--field", required=True)
    p.add_argument("--order", required=True, choices=sorted(ORDERS))
    p.add_argument("--sizes", required=True,
                   help="comma-separated point counts")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--algos", default="bm,spbm",
                   help="comma-separated subset of bm,spbm,gpbm")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("-o", "--output", help="CSV path (default: stdout)")

    p = sub.add_parser("verify", help="re-check a stored JSON result")
    p.add_argument("--result", required=True)
    p.add_argument("--points", required=True)
    return top


def _resolve_algo(algo: str, order_name: str) -> str:
    if algo == "auto":
        return "spbm" if order_name in ("lex", "inlex") else "gpbm"
    if algo == "spbm" and order_name not in ("lex", "inlex"):
        raise ValueError("spbm supports only lex and inlex")
    return algo


def _cmd_compute(args) -> int:
    field = make_field(args.field)
    order = order_by_name(args.order)
    algo = _resolve_algo(args.algo, order.name)
    ps = parse_point_file(field, Path(args.points).read_text())
    result = {"bm": bm_run, "spbm": spbm_run, "gpbm": gpbm_run}[algo](ps, order)
    report = verify_result(result)
    if args.out == "json":
        doc = result_to_json(result)
        doc["verify"] = report.to_json()
        print(json.dumps(doc, indent=2))
    else:
        print(result_text(result))
        print("verify: " + ("PASS" if report.passed else "FAIL"))
        if not report.passed:
            print(report.text())
    return 0 if report.passed else 1


def _cmd_gen(args) -> int:
    field = make_field(args.field)
    ps = gen_points(field, args.n, args.seed)
    header = f"# field {field.name} n {args.n} seed {args.seed}\n"
    Path(args.output).write_text(header + format_point_file(ps))
    return 0


def _cmd_bench(args) -> int:
    field = make_field(args.field)
    order = order_by_name(args.order)
    sizes = [int(s) for s in args.sizes.split(",") if s]
    algos = [a for a in args.algos.split(",") if a]
    for a in algos:
        _resolve_algo(a, order.name)
    records = run_bench(field, order, sizes, args.reps, algos, args.seed)
    text = bench_csv(records)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    doc = json.loads(Path(args.result).read_text())
    field = make_field(doc["field"])
    order = order_by_name(doc["order"])
    ps = parse_point_file(field, Path(args.points).read_text())
    G = [poly_from_json_terms(field, t) for t in doc["G"]]
    N = [(int(i), int(j)) for i, j in doc["N"]]
    Q = [poly_from_json_terms(field, t) for t in doc["Q"]]
    perm = [int(k) for k in doc["pointPermutation"]]
    report = verify_parts(ps, order, G, N, Q, perm)
    print(report.text())
    return 0 if report.passed else 1


def run_cli(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    handlers = {"compute": _cmd_compute, "gen": _cmd_gen,
                "bench": _cmd_bench, "verify": _cmd_verify}
    try:
        return handlers[args.command](args)
    except (FieldError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return run_cli(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
