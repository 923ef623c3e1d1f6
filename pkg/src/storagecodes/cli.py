"""Batch command line front end with machine-readable output.

Subcommands: field-info, nm-table, graph, code-report, certify, verify-all.
Reports are JSON (or CSV where noted) on stdout or at --output.  Exit codes:
0 success, 2 parameter error, 3 budget error, 4 violated invariant or failed
verification claim.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, carryfree, graphs, polyf2, storage, verification
from .errors import BudgetError, ParameterError, PropertyViolation
from .field import GF2m
from .graphs import FamilyParams

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_BUDGET = 3
EXIT_PROPERTY = 4


def _meta(field: GF2m | None = None, **params) -> dict:
    meta = {"version": __version__, **params}
    if field is not None:
        meta["modulus"] = field.modulus
    return meta


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _emit_json(doc: dict, output: str | None) -> None:
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", output)


def cmd_field_info(args) -> int:
    start = time.perf_counter()
    field = GF2m(args.m)
    terms = [i for i in range(args.m, -1, -1) if (field.modulus >> i) & 1]
    doc = {
        "meta": _meta(field, m=args.m),
        "m": args.m,
        "q": field.q,
        "modulus": field.modulus,
        "modulus_binary": bin(field.modulus),
        "modulus_terms": terms,
    }
    doc["meta"]["elapsed_ms"] = int(1000 * (time.perf_counter() - start))
    _emit_json(doc, args.output)
    return EXIT_OK


def cmd_nm_table(args) -> int:
    start = time.perf_counter()
    rows = []
    for m in range(args.m_max + 1):
        value, holds = carryfree.nm_bound(m, args.r)
        bound = carryfree.fifteen_sixteenths_bound(m, args.r)
        rows.append((m, args.r, value, bound, holds))
    if args.format == "json":
        doc = {
            "meta": _meta(m_max=args.m_max, r=args.r),
            "rows": [
                {"m": m, "r": r, "N_m": v, "bound": b, "bound_holds": h}
                for m, r, v, b, h in rows
            ],
        }
        doc["meta"]["elapsed_ms"] = int(1000 * (time.perf_counter() - start))
        _emit_json(doc, args.output)
    else:
        lines = ["m,r,N_m,bound,bound_holds"]
        lines += [f"{m},{r},{v},{b},{str(h).lower()}" for m, r, v, b, h in rows]
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_graph(args) -> int:
    start = time.perf_counter()
    params = FamilyParams(args.n, args.m)
    field = GF2m(args.m)
    g = graphs.build_graph(params, field)
    doc = {
        "meta": _meta(field, n=args.n, m=args.m),
        "n": args.n,
        "m": args.m,
        "vertices": g.num_vertices,
        "degree": (1 << args.m) - 1,
        "edges": g.edge_count(),
    }
    if args.check:
        triangle_free = graphs.is_triangle_free_criterion(params, field)
        connected = graphs.is_connected(params, field)
        if graphs.triangle_oracle(g) != triangle_free:
            raise PropertyViolation("triangle oracle disagrees with the criterion")
        if graphs.bfs_connected(g) != connected:
            raise PropertyViolation("breadth-first search disagrees with the span test")
        doc["triangle_free"] = triangle_free
        doc["connected"] = connected
    if args.export:
        with open(args.export, "w") as fh:
            graphs.export_edges(g, fh)
        doc["exported_to"] = args.export
    doc["meta"]["elapsed_ms"] = int(1000 * (time.perf_counter() - start))
    _emit_json(doc, args.output)
    return EXIT_OK


def cmd_code_report(args) -> int:
    start = time.perf_counter()
    params = FamilyParams(args.n, args.m)
    field = GF2m(args.m)
    report = storage.code_report(params, field)
    if args.dump:
        matrix = {
            "H": lambda: storage.coset_matrix(params, field),
            "W": lambda: storage.w_matrix(storage.coset_matrix(params, field)),
            "D": lambda: storage.d_matrix(params, field),
        }[args.dump]()
        with open(args.dump_path, "w") as fh:
            matrix.dump(fh)
    doc = report.to_json_dict()
    doc["meta"] = _meta(field, n=args.n, m=args.m)
    doc["meta"]["elapsed_ms"] = int(1000 * (time.perf_counter() - start))
    if args.format == "csv":
        rate = doc["rate_num"] / doc["rate_den"]
        lines = [
            "n,m,size,rank_H,rank_W,rank_D,dimension,rate_num,rate_den,rate,N_m",
            f'{doc["n"]},{doc["m"]},{doc["size"]},{doc["rank_H"]},{doc["rank_W"]},'
            f'{doc["rank_D"]},{doc["dimension"]},{doc["rate_num"]},{doc["rate_den"]},'
            f'{rate:.6f},{doc["N_m"]}',
        ]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit_json(doc, args.output)
    return EXIT_OK


def cmd_certify(args) -> int:
    start = time.perf_counter()
    heavy = args.n >= 11 and args.t_max >= 7
    if heavy and not args.extended:
        raise BudgetError(
            f"n={args.n} at t_max={args.t_max} is a long run; pass --extended to allow it"
        )
    result = polyf2.certify_unit_rate(args.n, t_max=args.t_max, budget=args.budget)
    doc = {
        "meta": _meta(n=args.n, t_max=args.t_max),
        "n": result.n,
        "trace": [
            {"t": t, "rank": rank, "threshold": threshold}
            for t, rank, threshold in result.trace
        ],
        "certified": result.certified,
        "t_star": result.t if result.certified else None,
        "c_constant": result.c_constant,
        "elapsed_ms": int(1000 * (time.perf_counter() - start)),
    }
    _emit_json(doc, args.output)
    return EXIT_OK


def cmd_verify_all(args) -> int:
    results = verification.run_all(args.budget, seed=args.seed, sink=sys.stdout)
    failed = [r for r in results if not r.ok]
    sys.stdout.write(
        f"{len(results) - len(failed)}/{len(results)} claims pass at budget '{args.budget}'\n"
    )
    return EXIT_OK if not failed else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="storagecodes",
        description="Exact computations for storage codes on triangle-free Cayley graphs",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="modulus and size of one GF(2^m)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_field_info)

    p = sub.add_parser("nm-table", help="monomial-count table with bounds, CSV")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_nm_table)

    p = sub.add_parser("graph", help="graph statistics, checks and edge export")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--check", action="store_true", help="run triangle and connectivity checks")
    p.add_argument("--export", default=None, help="write the edge list to this path")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_graph)

    p = sub.add_parser("code-report", help="ranks, dimension and rate of one member")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--dump", choices=("H", "W", "D"), default=None)
    p.add_argument("--dump-path", default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_code_report)

    p = sub.add_parser("certify", help="search for the first certifying exponent")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t-max", type=int, default=polyf2.DEFAULT_T_MAX)
    p.add_argument("--budget", type=int, default=polyf2.DEFAULT_MONOMIAL_BUDGET)
    p.add_argument("--extended", action="store_true", help="allow the long n >= 11 runs")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser("verify-all", help="run the verification claims")
    p.add_argument("--budget", choices=verification.BUDGETS, default="full")
    p.add_argument("--seed", type=int, default=verification.DEFAULT_SEED,
                   help="seed for the randomised claims")
    p.set_defaults(handler=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "dump", None) and not args.dump_path:
        parser.error("--dump needs --dump-path")
    try:
        return args.handler(args)
    except ParameterError as err:
        print(f"parameter error: {err}", file=sys.stderr)
        return EXIT_PARAMETER
    except BudgetError as err:
        print(f"budget error: {err}", file=sys.stderr)
        return EXIT_BUDGET
    except PropertyViolation as err:
        print(f"property violation: {err}", file=sys.stderr)
        return EXIT_PROPERTY


if __name__ == "__main__":
    sys.exit(main())
