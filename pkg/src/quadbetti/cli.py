"""Command line front end: bound tables, intersection tables, audits.

Exit codes: 0 all PASS, 1 any VIOLATION, 2 usage error, 3 inconclusive
results (and no violation).  Rationals are emitted as numerator and
denominator columns in CSV and as "p/q" strings in JSON; outputs are
byte-identical across reruns with the same flags and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import harness
from .bounds import bound_aggregate, bound_betti, b_ci
from .homology import INCONCLUSIVE, VIOLATION
from .quadforms import DeformationParams, QuadraticForm, parse_rational

__all__ = ["main", "build_parser"]


def _parse_range(text: str) -> List[int]:
    """Accept '3', '2:5' (inclusive) or '1,3,5'."""
    out: List[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ":" in chunk:
            lo, hi = chunk.split(":", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError(f"empty range {chunk!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(chunk))
    return out


def _rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _emit(rows: List[Dict], columns: List[str], fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row.get(col, "") for col in columns])
    else:
        out.write(json.dumps({"rows": rows}, indent=2, sort_keys=True))
        out.write("\n")


def _emit_document(document: Dict, fmt: str, out, rows: List[Dict], columns: List[str]) -> None:
    if fmt == "csv":
        _emit(rows, columns, "csv", out)
    else:
        out.write(json.dumps(document, indent=2, sort_keys=True))
        out.write("\n")


def _exit_code(verdicts: Sequence[str]) -> int:
    if VIOLATION in verdicts:
        return 1
    if INCONCLUSIVE in verdicts:
        return 3
    return 0


def _cmd_bounds(args, out) -> int:
    svals = _parse_range(args.s)
    kvals = _parse_range(args.k)
    if args.aggregate:
        rows = []
        for k in kvals:
            for s in svals:
                if not 1 <= s <= k:
                    continue
                agg = bound_aggregate(s, k)
                row: Dict = {
                    "s": s,
                    "k": k,
                    "total_num": agg.total.numerator,
                    "total_den": agg.total.denominator,
                }
                if agg.simple is not None:
                    row["simple_num"] = agg.simple.numerator
                    row["simple_den"] = agg.simple.denominator
                    row["nonexact_exp_form"] = repr(agg.exp_form)
                rows.append(row)
        columns = ["s", "k", "simple_num", "simple_den", "total_num", "total_den",
                   "nonexact_exp_form"]
        if not rows:
            raise ValueError("no valid (s, k) combinations in the requested ranges")
        json_rows = [
            {
                "s": r["s"],
                "k": r["k"],
                "total": f"{r['total_num']}/{r['total_den']}",
                **(
                    {
                        "simple": f"{r['simple_num']}/{r['simple_den']}",
                        "nonexact_exp_form": r["nonexact_exp_form"],
                    }
                    if "simple_num" in r
                    else {}
                ),
            }
            for r in rows
        ]
        _emit(rows if args.format == "csv" else json_rows, columns, args.format, out)
        return 0
    rows = []
    for k in kvals:
        ivals = _parse_range(args.i) if args.i else list(range(k))
        for s in svals:
            for i in ivals:
                if not (1 <= s <= k and 0 <= i <= k - 1):
                    continue
                bound = bound_betti(s, k, i)
                row = {
                    "s": s,
                    "k": k,
                    "i": i,
                    "bound_num": bound.numerator,
                    "bound_den": bound.denominator,
                }
                if args.compare_classical:
                    row["nonrigorous_sd_pow_k"] = (2 * s) ** k
                    row["nonrigorous_k_pow_s"] = k**s
                rows.append(row)
    if not rows:
        raise ValueError("no valid (s, k, i) combinations in the requested ranges")
    columns = ["s", "k", "i", "bound_num", "bound_den"]
    if args.compare_classical:
        columns += ["nonrigorous_sd_pow_k", "nonrigorous_k_pow_s"]
    if args.format == "csv":
        _emit(rows, columns, "csv", out)
    else:
        json_rows = []
        for r in rows:
            jr = {"s": r["s"], "k": r["k"], "i": r["i"],
                  "bound": f"{r['bound_num']}/{r['bound_den']}"}
            for key in ("nonrigorous_sd_pow_k", "nonrigorous_k_pow_s"):
                if key in r:
                    jr[key] = r[key]
            json_rows.append(jr)
        _emit(json_rows, columns, "json", out)
    return 0


def _cmd_ci(args, out) -> int:
    kvals = _parse_range(args.k)
    if args.degrees:
        degrees = tuple(int(d) for d in args.degrees.split(","))
        j = len(degrees)
        if args.j is not None and int(args.j) != j:
            raise ValueError(f"--j {args.j} disagrees with {j} degrees")
        jvals = [j]
    else:
        if args.j is None:
            raise ValueError("need --j or --degrees")
        jvals = _parse_range(args.j)
        degrees = None
    rows = []
    for k in kvals:
        for j in jvals:
            if not 0 <= j <= k:
                continue
            degs = degrees if degrees is not None else (2,) * j
            rows.append(
                {
                    "j": j,
                    "k": k,
                    "degrees": ";".join(map(str, degs)),
                    "betti_total": b_ci(j, k, degs),
                }
            )
    if not rows:
        raise ValueError("no valid (j, k) combinations in the requested ranges")
    _emit(rows, ["j", "k", "degrees", "betti_total"], args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    results = harness.run_verification_suite(seed=args.seed, full=args.full)
    rows = [{"name": r.name, "verdict": r.verdict, "note": r.note} for r in results]
    if args.format == "csv":
        _emit(rows, ["name", "verdict", "note"], "csv", out)
    else:
        document = {
            "seed": args.seed,
            "results": [
                {"name": r.name, "verdict": r.verdict, "note": r.note,
                 **({"document": r.document} if r.document else {})}
                for r in results
            ],
        }
        out.write(json.dumps(document, indent=2, sort_keys=True))
        out.write("\n")
    return _exit_code([r.verdict for r in results])


def _audit_by_name(args):
    name = args.name
    eps = parse_rational(args.eps)
    delta = parse_rational(args.delta)
    params = DeformationParams(eps=eps, delta=delta)
    sphere_res = parse_rational(args.resolution) if args.resolution else None
    if name.startswith("products-bounds"):
        rep = harness.bound_audit(harness.scenario_products(args.k))
        return rep.overall, rep.to_dict(), [r.to_dict() for r in rep.rows], [
            "i", "betti", "bound_num", "bound_den", "verdict"]
    if name.startswith("shell-bounds"):
        sc = harness.scenario_shell(args.k, parse_rational(args.r_in),
                                    parse_rational(args.r_out))
        rep = harness.bound_audit(sc)
        return rep.overall, rep.to_dict(), [r.to_dict() for r in rep.rows], [
            "i", "betti", "bound_num", "bound_den", "verdict"]
    if name == "smith-cone":
        cone = QuadraticForm.make(3, [[1, 0, 0], [0, 1, 0], [0, 0, -1]])
        rep = harness.smith_audit([cone], radius=parse_rational(args.radius))
        doc = rep.to_dict()
        return rep.verdict, doc, [doc], list(doc.keys())
    if name == "double-cover-products":
        rep = harness.double_cover_audit(
            harness.scenario_products(args.k), params, sphere_resolution=sphere_res
        )
        doc = rep.to_dict()
        return rep.verdict, doc, [doc], list(doc.keys())
    if name == "deformation-products":
        ts = [parse_rational(t) for t in args.t_values.split(",")]
        rep = harness.deformation_audit(
            harness.scenario_products(args.k), params, t_values=ts,
            sphere_resolution=sphere_res, seed=args.seed,
        )
        doc = rep.to_dict()
        rows = [{"t": t, "betti": json.dumps(v)} for t, v in doc["betti_by_t"].items()]
        return rep.verdict, doc, rows, ["t", "betti"]
    if name == "alexander-equator":
        rep = harness.alexander_equator_audit()
        doc = rep.to_dict()
        return rep.verdict, doc, [doc], list(doc.keys())
    mv_map = {
        "mv-wedge": harness.mv_wedge_example,
        "mv-disjoint": harness.mv_disjoint_example,
        "mv-three": harness.mv_three_arc_example,
        "mv-fabricated-violation": harness.mv_fabricated_example,
    }
    if name in mv_map:
        example = mv_map[name]()
        doc = example.to_dict()
        rows = [{"name": example.name, "degree": example.degree,
                 "verdict": example.verdict}]
        return example.verdict, doc, rows, ["name", "degree", "verdict"]
    raise ValueError(f"unknown audit {name!r}")


def _cmd_audit(args, out) -> int:
    verdict, document, rows, columns = _audit_by_name(args)
    _emit_document(document, args.format, out, rows, columns)
    return _exit_code([verdict])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadbetti",
        description="Betti bound tables and verification audits for quadratic systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="per-degree bound table")
    p_bounds.add_argument("--s", required=True, help="value, a:b range, or comma list")
    p_bounds.add_argument("--k", required=True)
    p_bounds.add_argument("--i", default=None, help="defaults to all valid degrees")
    p_bounds.add_argument("--aggregate", action="store_true",
                          help="emit aggregate bounds instead of per-degree rows")
    p_bounds.add_argument("--compare-classical", action="store_true",
                          help="append illustrative non-rigorous reference columns")

    p_ci = sub.add_parser("ci", help="complete-intersection Betti totals")
    p_ci.add_argument("--j", default=None)
    p_ci.add_argument("--k", required=True)
    p_ci.add_argument("--degrees", default=None, help="comma list, e.g. 2,2,3")

    p_verify = sub.add_parser("verify", help="run the built-in verification suite")
    p_verify.add_argument("--full", action="store_true", help="include the slow audits")

    p_audit = sub.add_parser("audit", help="run one named audit")
    p_audit.add_argument("--name", required=True)
    p_audit.add_argument("--k", type=int, default=2)
    p_audit.add_argument("--r-in", dest="r_in", default="1/2")
    p_audit.add_argument("--r-out", dest="r_out", default="1")
    p_audit.add_argument("--radius", default="1")
    p_audit.add_argument("--eps", default="1/10")
    p_audit.add_argument("--delta", default="1/1000")
    p_audit.add_argument("--t-values", dest="t_values", default="0,1/1000")
    p_audit.add_argument("--resolution", default=None)

    for p in (p_bounds, p_ci, p_verify, p_audit):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", default=None, help="file path; defaults to stdout")
        p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {
        "bounds": _cmd_bounds,
        "ci": _cmd_ci,
        "verify": _cmd_verify,
        "audit": _cmd_audit,
    }
    buffer = io.StringIO()
    try:
        code = handlers[args.command](args, buffer)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = buffer.getvalue()
    if args.output:
        with open(args.output, "w") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
