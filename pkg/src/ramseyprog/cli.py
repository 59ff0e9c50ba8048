"""Command-line frontend.

One subcommand per computation:

    bound semi|quasi   analytic lower-bound bases (and floor(base^k))
    table              the quasi bound base over a (colors, diameter) grid
    oracle ...         exhaustive small-N counts and consistency checks
    search exact       exact thresholds with witness certificates
    search witness     randomized witness search at a fixed size
    check FILE         re-verify a witness certificate file

Exit codes: 0 success; 1 a checked inequality failed or a certificate is
invalid; 2 usage or format error; 3 budget exhausted (including eigenvalue
non-convergence and witness-not-found).  Output is text by default, CSV for
the table, and JSON everywhere on request; with --format json, errors are
also emitted as a JSON object on stdout.

Environment variables RAMSEYPROG_MAX_NODES, RAMSEYPROG_MAX_LENGTH,
RAMSEYPROG_MAX_POINTS and RAMSEYPROG_MAX_COLORINGS override the default
search and enumeration budgets; explicit flags beat the environment.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import List, Optional

from .bounds import beta_quasi, beta_table, semi_bound
from .errors import BudgetExceededError, ConvergenceError, WitnessFormatError
from .oracle import (
    CountReport,
    OracleBudget,
    count_mono_colorings,
    forced_count_check,
    primary_partition_check,
    verify_counting_inequality,
)
from .progressions import Family
from .search import (
    SearchBudget,
    check_witness,
    exact_threshold,
    random_witness_search,
    read_witness,
    write_witness,
)

DEFAULT_MAX_NODES = 2_000_000
DEFAULT_MAX_LENGTH = 64
DEFAULT_MAX_POINTS = 24
DEFAULT_MAX_COLORINGS = 2**24


def _truncate5(x: float) -> str:
    """Five decimals, truncated toward zero: 1.0823922 displays as 1.08239."""
    s = f"{x:.12f}"
    return s[: s.index(".") + 6]


def _beta_cell(base: float) -> str:
    return "<1" if base <= 1 else _truncate5(base)


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def _emit(fmt: str, payload, lines: List[str]) -> None:
    """Render one record: text lines, a JSON object, or a one-row CSV."""
    if fmt == "json":
        print(json.dumps(payload))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(payload.keys())
        writer.writerow(payload.values())
        sys.stdout.write(buf.getvalue())
    else:
        for line in lines:
            print(line)


def _family(args) -> Family:
    return Family(args.family, args.param)


def _search_budget(args) -> SearchBudget:
    max_nodes = args.max_nodes
    if max_nodes is None:
        max_nodes = _env_int("RAMSEYPROG_MAX_NODES", DEFAULT_MAX_NODES)
    max_length = getattr(args, "max_length", None)
    if max_length is None:
        max_length = _env_int("RAMSEYPROG_MAX_LENGTH", DEFAULT_MAX_LENGTH)
    return SearchBudget(
        max_nodes=max_nodes,
        max_length=max_length,
        seed=args.seed,
        restarts=args.restarts,
    )


def _oracle_budget(args) -> OracleBudget:
    max_points = args.max_points
    if max_points is None:
        max_points = _env_int("RAMSEYPROG_MAX_POINTS", DEFAULT_MAX_POINTS)
    max_colorings = args.max_colorings
    if max_colorings is None:
        max_colorings = _env_int("RAMSEYPROG_MAX_COLORINGS", DEFAULT_MAX_COLORINGS)
    return OracleBudget(max_points=max_points, max_colorings=max_colorings)


def cmd_bound(args) -> int:
    if args.bound_kind == "semi":
        res = semi_bound(args.m)
        payload = {"family": "semi", "param": args.m, "alpha": res.base}
        lines = [f"alpha({args.m}) = {res.base:.6f}"]
        if args.k is not None:
            t = res.threshold(args.k)
            payload["k"] = args.k
            payload["threshold"] = t
            lines.append(f"floor(alpha^{args.k}) = {t}")
        _emit(args.format, payload, lines)
        return 0
    res = beta_quasi(args.r, args.n, args.tol)
    payload = {
        "family": "quasi",
        "param": args.n,
        "r": args.r,
        "alpha": 1 - 1 / args.r,
        "lambda_max": res.lambda_max,
        "residual": res.residual,
        "beta": res.base,
        "useful": res.useful,
    }
    lines = [
        f"beta(r={args.r}, n={args.n}) = {_beta_cell(res.base)} (raw {res.base!r})",
        f"lambda_max = {res.lambda_max!r}",
        f"residual = {res.residual:.3e}",
        f"useful = {str(res.useful).lower()}",
    ]
    if args.k is not None:
        t = res.threshold(args.k)
        payload["k"] = args.k
        payload["threshold"] = t
        lines.append(f"floor(beta^{args.k}) = {t}")
    _emit(args.format, payload, lines)
    return 0


def cmd_table(args) -> int:
    results = beta_table(args.r_max, args.n_max, args.tol)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "r": res.r,
                        "n": res.family.param,
                        "alpha": 1 - 1 / res.r,
                        "lambda_max": res.lambda_max,
                        "residual": res.residual,
                        "beta": res.base,
                        "useful": res.useful,
                    }
                    for res in results
                ]
            )
        )
        return 0
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["r", "n", "alpha", "lambda_max", "residual", "beta", "useful"])
        for res in results:
            writer.writerow(
                [
                    res.r,
                    res.family.param,
                    repr(1 - 1 / res.r),
                    repr(res.lambda_max),
                    f"{res.residual:.3e}",
                    _beta_cell(res.base),
                    str(res.useful).lower(),
                ]
            )
        sys.stdout.write(buf.getvalue())
        return 0
    by_cell = {(res.r, res.family.param): res for res in results}
    header = ["r\\n"] + [f"n={n}" for n in range(1, args.n_max + 1)]
    rows = [header]
    for r in range(2, args.r_max + 1):
        rows.append(
            [f"r={r}"]
            + [_beta_cell(by_cell[(r, n)].base) for n in range(1, args.n_max + 1)]
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    return 0


def _report_payload(rep: CountReport) -> dict:
    return {
        "N": rep.N,
        "k": rep.k,
        "family": rep.family.kind,
        "param": rep.family.param,
        "r": rep.r,
        "mono_count": rep.mono_count,
        "total": rep.total,
        "bound_value": None if rep.bound_value is None else str(rep.bound_value),
        "bound_value_float": None if rep.bound_value is None else float(rep.bound_value),
        "bound_satisfied": rep.bound_satisfied,
    }


def cmd_oracle(args) -> int:
    family = _family(args)
    budget = _oracle_budget(args)
    if args.oracle_cmd == "count":
        rep = count_mono_colorings(args.r, args.N, args.k, family, budget)
        _emit(
            args.format,
            _report_payload(rep),
            [f"monochromatic colorings: {rep.mono_count} / {rep.total}"],
        )
        return 0
    if args.oracle_cmd == "verify":
        rep = verify_counting_inequality(args.r, args.N, args.k, family, budget)
        verdict = "holds" if rep.bound_satisfied else "VIOLATED"
        _emit(
            args.format,
            _report_payload(rep),
            [
                f"monochromatic colorings: {rep.mono_count} / {rep.total}",
                f"analytic bound: {float(rep.bound_value):.6g}",
                f"inequality {verdict}",
            ],
        )
        return 0 if rep.bound_satisfied else 1
    check = (
        primary_partition_check
        if args.oracle_cmd == "partition"
        else forced_count_check
    )
    ok = check(args.r, args.N, args.k, family, args.a, args.d, budget)
    _emit(
        args.format,
        {
            "check": args.oracle_cmd,
            "N": args.N,
            "k": args.k,
            "family": family.kind,
            "param": family.param,
            "r": args.r,
            "a": args.a,
            "d": args.d,
            "ok": ok,
        },
        [f"{args.oracle_cmd} check: {'ok' if ok else 'FAILED'}"],
    )
    return 0 if ok else 1


def _cert_payload(cert) -> dict:
    return {
        "family": cert.family.kind,
        "param": cert.family.param,
        "r": cert.r,
        "k": cert.k,
        "value": cert.value,
        "witness": cert.witness.digits(),
        "witness_length": cert.witness.n_points,
        "nodes_explored": cert.nodes_explored,
        "exhaustive": cert.exhaustive,
    }


def cmd_search(args) -> int:
    family = _family(args)
    budget = _search_budget(args)
    if args.search_cmd == "exact":
        try:
            cert = exact_threshold(args.r, args.k, family, budget)
        except BudgetExceededError as exc:
            if exc.partial is not None:
                _emit(
                    args.format,
                    dict(_cert_payload(exc.partial), error=str(exc)),
                    [
                        f"budget exhausted: {exc}",
                        f"best lower bound: value >= {exc.partial.value}",
                        f"witness (length {exc.partial.witness.n_points}) = "
                        f"{exc.partial.witness.digits()}",
                    ],
                )
                if args.witness_out:
                    write_witness(
                        args.witness_out, exc.partial.witness, args.k, family
                    )
                return 3
            raise
        _emit(
            args.format,
            _cert_payload(cert),
            [
                f"value = {cert.value}",
                f"witness (length {cert.witness.n_points}) = {cert.witness.digits()}",
                f"nodes explored = {cert.nodes_explored}",
                f"exhaustive = {str(cert.exhaustive).lower()}",
            ],
        )
        if args.witness_out:
            write_witness(args.witness_out, cert.witness, args.k, family)
        return 0
    chi = random_witness_search(args.r, args.N, args.k, family, budget)
    if chi is None:
        _emit(
            args.format,
            {"found": False, "N": args.N, "k": args.k, "error": "no witness found"},
            [f"no witness found for N={args.N} within budget"],
        )
        return 3
    if not check_witness(chi, args.k, family):
        _emit(
            args.format,
            {"found": True, "valid": False},
            ["search returned a coloring that fails re-verification"],
        )
        return 1
    _emit(
        args.format,
        {
            "found": True,
            "valid": True,
            "N": chi.n_points,
            "k": args.k,
            "family": family.kind,
            "param": family.param,
            "r": args.r,
            "witness": chi.digits(),
        },
        [f"witness (length {chi.n_points}) = {chi.digits()}"],
    )
    if args.witness_out:
        write_witness(args.witness_out, chi, args.k, family)
    return 0


def cmd_check(args) -> int:
    chi, k, family = read_witness(args.file)
    ok = check_witness(chi, k, family)
    _emit(
        args.format,
        {
            "file": args.file,
            "valid": ok,
            "N": chi.n_points,
            "k": k,
            "family": family.kind,
            "param": family.param,
            "r": chi.r,
        },
        [f"{args.file}: {'valid' if ok else 'INVALID'} "
         f"(N={chi.n_points}, k={k}, {family})"],
    )
    return 0 if ok else 1


def _add_format(p: argparse.ArgumentParser, default: str = "text") -> None:
    p.add_argument(
        "--format", choices=("text", "csv", "json"), default=default,
        help=f"output format (default {default})",
    )


def _add_family(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--family", choices=("semi", "quasi"), required=True,
        help="progression family",
    )
    p.add_argument(
        "--param", type=int, required=True,
        help="scope (semi) or diameter (quasi)",
    )


def _add_search_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=None,
                   help="search node / repair-move cap")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.add_argument("--restarts", type=int, default=10,
                   help="random restarts for witness search")


def _add_oracle_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-points", type=int, default=None,
                   help="largest ground set the oracle will sweep")
    p.add_argument("--max-colorings", type=int, default=None,
                   help="largest r^N the oracle will sweep")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramseyprog",
        description="Lower bounds, exhaustive oracles, and exact threshold "
        "search for semi- and quasi-progression Ramsey functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bound = sub.add_parser("bound", help="analytic lower-bound bases")
    bound_sub = bound.add_subparsers(dest="bound_kind", required=True)
    bound_semi = bound_sub.add_parser("semi", help="scope-m base alpha(m)")
    bound_semi.add_argument("--m", type=int, required=True, help="scope")
    bound_semi.add_argument("--k", type=int, default=None, help="term count")
    _add_format(bound_semi)
    bound_semi.set_defaults(handler=cmd_bound, bound_kind="semi")
    bound_quasi = bound_sub.add_parser("quasi", help="diameter-n base beta(r,n)")
    bound_quasi.add_argument("--r", type=int, required=True, help="colors")
    bound_quasi.add_argument("--n", type=int, required=True, help="diameter")
    bound_quasi.add_argument("--k", type=int, default=None, help="term count")
    bound_quasi.add_argument("--tol", type=float, default=1e-12,
                             help="eigenvalue residual tolerance")
    _add_format(bound_quasi)
    bound_quasi.set_defaults(handler=cmd_bound, bound_kind="quasi")

    table = sub.add_parser("table", help="beta over a grid of (r, n)")
    table.add_argument("--r-max", type=int, default=4)
    table.add_argument("--n-max", type=int, default=6)
    table.add_argument("--tol", type=float, default=1e-12)
    _add_format(table, default="csv")
    table.set_defaults(handler=cmd_table)

    oracle = sub.add_parser("oracle", help="exhaustive small-N ground truth")
    oracle_sub = oracle.add_subparsers(dest="oracle_cmd", required=True)
    for name, help_text in (
        ("count", "count colorings with a monochromatic progression"),
        ("verify", "compare the exhaustive count against the analytic bound"),
        ("partition", "check the primary-progression partition argument"),
        ("forced", "check the per-progression forced-cell count bound"),
    ):
        p = oracle_sub.add_parser(name, help=help_text)
        p.add_argument("--r", type=int, default=2, help="colors (default 2)")
        p.add_argument("--N", type=int, required=True, help="ground-set size")
        p.add_argument("--k", type=int, required=True, help="term count")
        _add_family(p)
        if name in ("partition", "forced"):
            p.add_argument("--a", type=int, required=True, help="first term")
            p.add_argument("--d", type=int, required=True, help="low-difference")
        _add_oracle_budget(p)
        _add_format(p)
        p.set_defaults(handler=cmd_oracle, oracle_cmd=name)

    search = sub.add_parser("search", help="threshold search")
    search_sub = search.add_subparsers(dest="search_cmd", required=True)
    search_exact = search_sub.add_parser("exact", help="exact threshold by backtracking")
    search_exact.add_argument("--r", type=int, default=2, help="colors (default 2)")
    search_exact.add_argument("--k", type=int, required=True, help="term count")
    _add_family(search_exact)
    _add_search_budget(search_exact)
    search_exact.add_argument("--max-length", type=int, default=None,
                              help="largest N to attempt")
    search_exact.add_argument("--witness-out", default=None,
                              help="write the witness certificate to this file")
    _add_format(search_exact)
    search_exact.set_defaults(handler=cmd_search, search_cmd="exact")
    search_wit = search_sub.add_parser("witness", help="randomized witness search")
    search_wit.add_argument("--r", type=int, default=2, help="colors (default 2)")
    search_wit.add_argument("--N", type=int, required=True, help="ground-set size")
    search_wit.add_argument("--k", type=int, required=True, help="term count")
    _add_family(search_wit)
    _add_search_budget(search_wit)
    search_wit.add_argument("--witness-out", default=None,
                            help="write the witness certificate to this file")
    _add_format(search_wit)
    search_wit.set_defaults(handler=cmd_search, search_cmd="witness")

    check = sub.add_parser("check", help="re-verify a witness certificate file")
    check.add_argument("file", help="witness certificate path")
    _add_format(check)
    check.set_defaults(handler=cmd_check)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")

    def fail(exc: Exception, code: int) -> int:
        if fmt == "json":
            print(json.dumps({"error": str(exc), "type": type(exc).__name__}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return code

    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        return fail(exc, 3)
    except ConvergenceError as exc:
        return fail(exc, 3)
    except WitnessFormatError as exc:
        return fail(exc, 2)
    except (ValueError, OSError) as exc:
        return fail(exc, 2)


if __name__ == "__main__":
    sys.exit(main())
