"""Command-line front end.

Subcommands
-----------
pwe         closed-form partition weight enumerator of an MDS code
brute       exhaustive partition weight enumerator of any code
binary      averaged binary weight distribution (exact rationals)
dual-pwe    two-block enumerator of the dual code via the MacWilliams
            transform of the brute-force enumerator
property-a  uniform-coordinate-weight check (exit 1 + witnesses on failure)
errprob     decoder error-probability curves over an SNR grid
verify      run the built-in verification suites

Code specs: ``rs:<q>:<n>:<k>``, ``rm1:<m>``, ``dual:<spec>``,
``file:<path>`` (JSON object with "field" spec string and integer
"rows").  Field specs: ``gf:<p>^<m>[:poly=<hex bitmask>]``.

Exit codes: 0 success, 1 failed check, 2 usage error.  Exact quantities
are emitted as decimal strings (or "num/denom" for rationals); binary64
values use shortest round-trip decimals.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import verify as verify_mod
from .binary_avg import (avg_binary_pwgf, avg_binary_weights_from_distribution,
                         avg_binary_wgf, bits_per_symbol)
from .duality import macwilliams_pwe, property_a_check
from .errorprob import (bep_curve, bm_curve, multiuser_curve, parse_condition, snr_grid)
from .gf import field_from_order, parse_field_spec
from .linear_code import (BudgetExceededError, LinearCode, Partition, brute_force_pwe,
                          brute_force_weights, code_from_generator, dual, rm1_code,
                          rs_code)
from .mds_enum import MdsParams, pwgf


class UsageError(ValueError):
    """Bad command-line input; reported with exit code 2."""


def parse_code_spec(spec: str) -> LinearCode:
    kind, _, rest = spec.partition(":")
    if kind == "rs":
        try:
            q_s, n_s, k_s = rest.split(":")
            q, n, k = int(q_s), int(n_s), int(k_s)
        except ValueError:
            raise UsageError(f"--code: bad RS spec {spec!r}; expected rs:<q>:<n>:<k>")
        return rs_code(field_from_order(q), n, k)
    if kind == "rm1":
        try:
            return rm1_code(int(rest))
        except ValueError:
            raise UsageError(f"--code: bad RM spec {spec!r}; expected rm1:<m>")
    if kind == "dual":
        return dual(parse_code_spec(rest))
    if kind == "file":
        with open(rest, encoding="utf-8") as fh:
            doc = json.load(fh)
        try:
            field = parse_field_spec(doc["field"])
            rows = doc["rows"]
        except (KeyError, ValueError) as exc:
            raise UsageError(f"--code: bad generator file {rest!r}: {exc}")
        return code_from_generator(field, rows)
    raise UsageError(f"--code: unknown code spec {spec!r}")


def parse_partition_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"--partition: bad sizes {text!r}; expected n1,n2,...")
    if any(s <= 0 for s in sizes):
        raise UsageError(f"--partition: sizes must be positive, got {text!r}")
    return sizes


def parse_snr_range(text: str) -> list[float]:
    try:
        start_s, stop_s, step_s = text.split(":")
        start, stop, step = float(start_s), float(stop_s), float(step_s)
    except ValueError:
        raise UsageError(f"--snr: bad range {text!r}; expected start:stop:step")
    if step <= 0 or stop < start:
        raise UsageError(f"--snr: bad range {text!r}")
    return snr_grid(start, stop, step)


def _format_exact(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 \
            else str(value.numerator)
    return str(value)


def _emit(doc: dict, rows: list[dict], args) -> None:
    """Write the document as canonical JSON or CSV to --out / stdout."""
    if args.format == "json":
        text = json.dumps(doc, indent=2) + "\n"
    else:
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table_document(args, sizes, counts, extra: Optional[dict] = None) -> tuple[dict, list[dict]]:
    terms = [{"profile": list(profile), "count": str(count)}
             for profile, count in sorted(counts.items())]
    doc = {"code": args.code, "partition": list(sizes),
           "total": str(sum(counts.values())), "terms": terms}
    if extra:
        doc.update(extra)
    rows = [{"profile": ",".join(map(str, t["profile"])), "count": t["count"]}
            for t in terms]
    return doc, rows


def _cmd_pwe(args) -> int:
    code = parse_code_spec(args.code)
    sizes = parse_partition_sizes(args.partition)
    params = MdsParams.from_code(code)
    poly = pwgf(params, sizes)
    doc, rows = _table_document(args, sizes, poly.terms,
                                {"n": params.n, "k": params.k, "q": params.q})
    _emit(doc, rows, args)
    return 0


def _cmd_brute(args) -> int:
    code = parse_code_spec(args.code)
    sizes = parse_partition_sizes(args.partition)
    table = brute_force_pwe(code, Partition.contiguous(sizes), budget=args.budget)
    doc, rows = _table_document(args, sizes, table.counts,
                                {"n": code.n, "k": code.k, "q": code.field.order})
    _emit(doc, rows, args)
    return 0


def _cmd_binary(args) -> int:
    code = parse_code_spec(args.code)
    m = bits_per_symbol(code.field.order)
    if args.partition:
        # exercise the partition route: substitute per block, then collapse
        sizes = parse_partition_sizes(args.partition)
        params = MdsParams.from_code(code)
        merged = avg_binary_pwgf(pwgf(params, sizes), m).collapse([0] * len(sizes), 1)
        top = m * code.n
        weights = [merged.coeff((h,)) for h in range(top + 1)]
    else:
        weights = avg_binary_weights_from_distribution(
            brute_force_weights(code, budget=args.budget), m)
    rows = [{"h_b": h, "exact": _format_exact(Fraction(w)), "float64": repr(float(w))}
            for h, w in enumerate(weights)]
    doc = {"code": args.code, "bits_per_symbol": m,
           "rows": [{"h_b": r["h_b"], "exact": r["exact"],
                     "float64": float(r["float64"])} for r in rows]}
    _emit(doc, rows, args)
    return 0


def _cmd_dual_pwe(args) -> int:
    code = parse_code_spec(args.code)
    sizes = parse_partition_sizes(args.partition)
    if len(sizes) != 2:
        raise UsageError("--partition: dual-pwe needs exactly two block sizes")
    table = brute_force_pwe(code, Partition.contiguous(sizes), budget=args.budget)
    dual_table = macwilliams_pwe(table, code.field.order, code.k)
    doc, rows = _table_document(args, sizes, dual_table.counts,
                                {"n": code.n, "k": code.n - code.k,
                                 "q": code.field.order, "transform": "macwilliams"})
    _emit(doc, rows, args)
    return 0


def _cmd_property_a(args) -> int:
    code = parse_code_spec(args.code)
    report = property_a_check(code, budget=args.budget)
    doc = {
        "code": args.code,
        "holds": report.holds,
        "method": report.method,
        "witnesses": [{"coordinate": w.coordinate, "weight": w.weight,
                       "observed": str(w.observed),
                       "expected": _format_exact(w.expected)}
                      for w in report.witnesses],
    }
    rows = [{"coordinate": w["coordinate"], "weight": w["weight"],
             "observed": w["observed"], "expected": w["expected"]}
            for w in doc["witnesses"]]
    _emit(doc, rows, args)
    return 0 if report.holds else 1


def _cmd_errprob(args) -> int:
    code = parse_code_spec(args.code)
    params = MdsParams.from_code(code)
    gammas = parse_snr_range(args.snr)
    metric = args.metric
    decoder = args.decoder or ("bm" if metric in ("cep", "sep") else "ml-union")
    if metric in ("cep", "sep") and decoder != "bm":
        raise UsageError(f"--decoder: {metric} is computed for the bm decoder")
    if metric == "bep" and decoder != "ml-union":
        raise UsageError("--decoder: bep is computed for the ml-union decoder")

    if args.user is not None:
        if not args.condition:
            raise UsageError("--condition: required when --user is given")
        if not args.partition:
            raise UsageError("--partition: required when --user is given")
        sizes = parse_partition_sizes(args.partition)
        try:
            conditions = tuple(parse_condition(tok) for tok in args.condition.split(","))
        except ValueError as exc:
            raise UsageError(f"--condition: {exc}")
        if not 1 <= args.user <= len(sizes):
            raise UsageError(f"--user: index {args.user} outside 1..{len(sizes)}")
        curve = multiuser_curve(params, sizes, args.user - 1, conditions, gammas, metric)
    elif metric == "bep":
        curve = bep_curve(params, gammas)
    else:
        curve = bm_curve(params, gammas, metric)

    rows = [{"gamma_db": repr(g), "probability": repr(v)} for g, v in curve.points]
    doc = {"code": args.code, "decoder": curve.decoder, "metric": curve.metric,
           "user": args.user,
           "conditions": [str(c) for c in curve.conditions] if curve.conditions else None,
           "points": [{"gamma_db": g, "probability": v} for g, v in curve.points]}
    _emit(doc, rows, args)
    return 0


def _cmd_verify(args) -> int:
    names = [tok.strip() for tok in args.suite.split(",")]
    try:
        ok = verify_mod.run_suites(names, seed=args.seed)
    except ValueError as exc:
        raise UsageError(f"--suite: {exc}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdswe",
        description="Exact partition weight enumerators of MDS codes and "
                    "decoder error-probability curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, partition=False, partition_required=False):
        p.add_argument("--code", required=True, help="code spec, e.g. rs:8:7:3")
        if partition:
            p.add_argument("--partition", required=partition_required,
                           help="block sizes, e.g. 1,1,2,3")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--budget", type=int, default=None,
                       help="max codewords for exhaustive enumeration")
        p.add_argument("--threads", type=int, default=1,
                       help="reserved; results do not depend on it")
        p.add_argument("--seed", type=int, default=7, help="seed for randomized checks")

    p = sub.add_parser("pwe", help="closed-form partition weight enumerator")
    add_common(p, partition=True, partition_required=True)
    p.set_defaults(fn=_cmd_pwe)

    p = sub.add_parser("brute", help="exhaustive partition weight enumerator")
    add_common(p, partition=True, partition_required=True)
    p.set_defaults(fn=_cmd_brute)

    p = sub.add_parser("binary", help="averaged binary weight distribution")
    add_common(p, partition=True, partition_required=False)
    p.set_defaults(fn=_cmd_binary)

    p = sub.add_parser("dual-pwe", help="dual code enumerator via MacWilliams")
    add_common(p, partition=True, partition_required=True)
    p.set_defaults(fn=_cmd_dual_pwe)

    p = sub.add_parser("property-a", help="uniform-coordinate-weight check")
    add_common(p)
    p.set_defaults(fn=_cmd_property_a)

    p = sub.add_parser("errprob", help="decoder error-probability curves")
    add_common(p, partition=True, partition_required=False)
    p.add_argument("--decoder", choices=("bm", "ml-union"), default=None)
    p.add_argument("--metric", choices=("cep", "sep", "bep"), required=True)
    p.add_argument("--user", type=int, default=None,
                   help="1-based block index of the user under study")
    p.add_argument("--condition",
                   help="comma list per block: free|zero|full|atmost:<frac>")
    p.add_argument("--snr", required=True, help="gamma grid start:stop:step in dB")
    p.set_defaults(fn=_cmd_errprob)

    p = sub.add_parser("verify", help="run built-in verification suites")
    p.add_argument("--suite", default="all",
                   help="comma list of suites, or 'all' "
                        f"({', '.join(verify_mod.SUITES)})")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--threads", type=int, default=1,
                   help="reserved; results do not depend on it")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
