"""Command-line front end: exact count tables, verification suites, and
growth-constant reports.

Exit codes: 0 success, 1 verification failure (or source disagreement),
2 usage error, 3 enumeration budget exceeded, 4 numeric failure.  Counts are
always serialized as decimal strings; floats are printed to 15 significant
digits; identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import asymptotics, bijections, closed_forms, series
from .compositions import (
    BudgetError,
    SuccessionParams,
    brute_force_table,
    carlitz_count,
    enumerate_compositions,
    is_carlitz,
    succession_count,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NUMERIC = 4

_GF_ORDER_CAP = 128


def _fmt15(x: float) -> str:
    return f"{x:.15g}"


def _emit_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compsucc",
        description="Count integer compositions by congruence successions; "
        "verify the counting identities and bijections; report growth constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="exact count tables c(n, d, a)")
    count.add_argument("--m", type=int, default=2, help="modulus (default 2)")
    count.add_argument("--r", type=int, default=0, help="shift (default 0)")
    group = count.add_mutually_exclusive_group()
    group.add_argument("--n", type=int, help="single size n")
    group.add_argument("--n-max", type=int, help="all sizes up to n-max (default 10)")
    count.add_argument("--d", type=int, help="restrict to d parts")
    count.add_argument("--a", type=int, help="restrict to a successions")
    count.add_argument("--N", type=int, default=None, help="series truncation order (default max(n, 20))")
    count.add_argument(
        "--source",
        choices=("oracle", "gf", "both"),
        default="oracle",
        help="exhaustive enumeration, series expansion, or both (must agree)",
    )
    count.add_argument("--alternating", action="store_true", help="count compositions with no successions only")
    count.add_argument("--carlitz", action="store_true", help="count compositions with no equal adjacent parts")
    count.add_argument("--format", choices=("text", "json", "csv"), default="text")

    verify = sub.add_parser("verify", help="run the verification suites")
    verify.add_argument("--suite", choices=sorted(_SUITES), help="run one suite (default: all)")
    verify.add_argument("--n-max", type=int, default=10, help="size budget for the suites (default 10)")
    verify.add_argument("--m-max", type=int, default=3, help="modulus budget for the oracle-gf suite (default 3)")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--trace", metavar="FILE", help="write the bijection-tail audit trace to FILE")
    verify.add_argument("--check-trace", metavar="FILE", help="re-verify a previously written trace file")
    verify.add_argument(
        "--inject-fault",
        action="store_true",
        help="testing aid: corrupt one oracle table entry so the recurrence suite must fail",
    )

    asympt = sub.add_parser("asympt", help="dominant-root growth report")
    asympt.add_argument("--m", type=int, default=2, help="modulus (default 2)")
    asympt.add_argument("--tol", type=float, default=1e-12, help="root residual tolerance (default 1e-12)")
    asympt.add_argument("--compare", type=int, metavar="N", help="also compare against the exact count at size N")
    asympt.add_argument("--carlitz", action="store_true", help="report the equal-adjacent-parts limit instead")
    asympt.add_argument("--scan", action="store_true", help="include the circle-scan certificate (k=7, c=0.7, N=1000)")
    asympt.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _count_rows(args) -> list[dict]:
    params = SuccessionParams(args.m, args.r)
    n_max = args.n if args.n is not None else (args.n_max if args.n_max is not None else 10)
    if n_max < 0:
        raise ValueError("size bound must be >= 0")
    order = args.N if args.N is not None else max(n_max, 20)
    if order < n_max:
        raise ValueError(f"--N {order} is below the requested size bound {n_max}")
    if order > _GF_ORDER_CAP:
        raise BudgetError(f"truncation order {order} exceeds the cap {_GF_ORDER_CAP}")
    sizes = [args.n] if args.n is not None else list(range(n_max + 1))

    if args.alternating or args.carlitz:
        label = "carlitz" if args.carlitz else "no-succession"
        oracle_values = gf_values = None
        if args.source in ("oracle", "both"):
            if args.carlitz:
                oracle_values = {n: carlitz_count(n) for n in sizes}
            else:
                table = brute_force_table(n_max, params)
                oracle_values = {
                    n: sum(c for (nn, _, a), c in table.entries.items() if nn == n and a == 0)
                    for n in sizes
                }
        if args.source in ("gf", "both"):
            if args.carlitz:
                gf = series.gf_carlitz(order).specialize(y=1)
            else:
                gf = series.gf_general(params, order).specialize(y=1, q=0)
            gf_values = {n: series.coefficient(gf, n, 0, 0) for n in sizes}
        if args.source == "both" and oracle_values != gf_values:
            bad = next(n for n in sizes if oracle_values[n] != gf_values[n])
            raise _SourceMismatch(
                f"{label} counts disagree at n={bad}: oracle {oracle_values[bad]}, series {gf_values[bad]}"
            )
        values = oracle_values if oracle_values is not None else gf_values
        return [{"n": n, "count": str(values[n])} for n in sizes]

    oracle_entries = gf_entries = None
    if args.source in ("oracle", "both"):
        table = brute_force_table(n_max, params)
        oracle_entries = dict(table.entries)
    if args.source in ("gf", "both"):
        gf = series.gf_general(params, order)
        gf_entries = {}
        for row in series.series_table_rows(gf):
            if row["n"] <= n_max:
                gf_entries[(row["n"], row["d"], row["a"])] = int(row["coefficient"])
    if args.source == "both" and oracle_entries != gf_entries:
        diff = set(oracle_entries.items()) ^ set(gf_entries.items())
        raise _SourceMismatch(f"oracle and series tables disagree; first differences: {sorted(diff)[:4]}")
    entries = oracle_entries if oracle_entries is not None else gf_entries

    rows = []
    for (n, d, a) in sorted(entries):
        if args.n is not None and n != args.n:
            continue
        if args.d is not None and d != args.d:
            continue
        if args.a is not None and a != args.a:
            continue
        rows.append({"n": n, "d": d, "a": a, "count": str(entries[(n, d, a)])})
    return rows


class _SourceMismatch(Exception):
    pass


def _render_rows(rows: list[dict], fmt: str, meta: dict) -> str:
    if fmt == "json":
        return _emit_json({**meta, "rows": rows})
    if fmt == "csv":
        buf = io.StringIO()
        fieldnames = list(rows[0]) if rows else ["n", "d", "a", "count"]
        writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    lines = []
    for row in rows:
        lines.append("  ".join(f"{key}={row[key]}" for key in row))
    return "\n".join(lines) + ("\n" if lines else "")


def cmd_count(args) -> int:
    try:
        rows = _count_rows(args)
    except _SourceMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    meta = {"command": "count", "m": args.m, "r": args.r}
    sys.stdout.write(_render_rows(rows, args.format, meta))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification suites


def _suite_oracle_gf(args) -> tuple[bool, str]:
    n_max = min(args.n_max, 12)
    checked = 0
    for m in range(1, args.m_max + 1):
        for r in range(m):
            params = SuccessionParams(m, r)
            table = brute_force_table(n_max, params)
            gf = series.gf_general(params, n_max)
            gf_entries = {
                (row["n"], row["d"], row["a"]): int(row["coefficient"])
                for row in series.series_table_rows(gf)
            }
            if gf_entries != table.entries:
                diff = sorted(set(gf_entries.items()) ^ set(table.entries.items()))[:3]
                return False, f"(m={m}, r={r}) series vs oracle differ: {diff}"
            checked += len(table.entries)
    return True, f"{checked} cells across m <= {args.m_max}, n <= {n_max}"


def _suite_carlitz(args) -> tuple[bool, str]:
    order = max(args.n_max, 15)
    if series.gf_carlitz(order) != series.gf_carlitz_alt(order):
        return False, f"the two constructions disagree at order {order}"
    slice_y1 = series.gf_carlitz(order).specialize(y=1)
    n_check = min(args.n_max, 12)
    for n in range(n_check + 1):
        expected = carlitz_count(n)
        got = series.coefficient(slice_y1, n, 0, 0)
        if got != expected:
            return False, f"count differs at n={n}: series {got}, oracle {expected}"
    return True, f"two constructions agree to order {order}; oracle match for n <= {n_check}"


def _suite_closed_forms(args) -> tuple[bool, str]:
    n_max = min(args.n_max, 14)
    table = brute_force_table(n_max, SuccessionParams(2, 0))
    for n in range(1, n_max + 1):
        for d in range(n + 1):
            # the table reads absent cells (e.g. 2d > n) as 0, matching the closed forms
            if closed_forms.alternating_even_parts(n, d) != table.count(n, 2 * d, 0):
                return False, f"even-parts closed form differs at (n={n}, d={d})"
            if closed_forms.alternating_odd_parts(n, d) != table.count(n, 2 * d + 1, 0):
                return False, f"odd-parts closed form differs at (n={n}, d={d})"
    for n in range(41):
        if closed_forms.alternating_binomial_even(n) != closed_forms.alternating_count(2 * n):
            return False, f"even binomial sum differs at n={n}"
        if closed_forms.alternating_binomial_odd(n) != closed_forms.alternating_count(2 * n + 1):
            return False, f"odd binomial sum differs at n={n}"
    for x in range(2, 61):
        for k in range(x + 1):
            lhs = closed_forms.binom(x, k)
            rhs = (
                closed_forms.binom(x - 2, k)
                + 2 * closed_forms.binom(x - 2, k - 1)
                + closed_forms.binom(x - 2, k - 2)
            )
            if lhs != rhs:
                return False, f"Pascal-type identity fails at ({x}, {k})"
    return True, f"closed forms vs oracle for n <= {n_max}; binomial sums vs recurrence for n <= 40"


def _suite_recurrence(args) -> tuple[bool, str]:
    n_max = max(4, min(args.n_max, 16))
    table = brute_force_table(n_max, SuccessionParams(2, 0))
    if args.inject_fault:
        table.entries[(3, 2, 0)] = table.entries.get((3, 2, 0), 0) + 1
    checked = 0
    for n in range(4, n_max + 1):
        for d in range(3, n + 1):
            for a in range(d):
                if not closed_forms.count_recurrence_holds(table, n, d, a):
                    return False, f"recurrence fails at (n={n}, d={d}, a={a})"
                checked += 1
    return True, f"{checked} cells for 4 <= n <= {n_max}"


def _suite_bijection_tail(args) -> tuple[bool, str]:
    n_max = min(args.n_max, 12)
    trace_lines: list[str] = []
    cells = elements = 0
    for n in range(4, n_max + 1):
        for d in range(3, n + 1):
            for a in range(d):
                domain = bijections.tail_domain(n, d, a)
                codomain = bijections.tail_codomain(n, d, a)
                images = [bijections.tail_forward(pi, n, d, a) for pi in domain]
                if sorted(c.parts for c in images) != sorted(c.parts for c in codomain):
                    return False, f"tail map not bijective at (n={n}, d={d}, a={a})"
                for pi, image in zip(domain, images):
                    if bijections.tail_inverse(image, n, d, a) != pi:
                        return False, f"tail inverse fails at (n={n}, d={d}, a={a}) on {pi}"
                if args.trace:
                    trace_lines += bijections.tail_trace_lines(n, d, a)
                cells += 1
                elements += len(domain)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write("\n".join(trace_lines) + "\n")
    return True, f"{elements} elements over {cells} cells, 4 <= n <= {n_max}"


def _suite_bijection_split(args) -> tuple[bool, str]:
    n_max = min(args.n_max, 14)
    for n in range(n_max + 1):
        colored = bijections.enumerate_colored(n)
        if len(colored) != closed_forms.alternating_count(n):
            return False, f"population at size {n} differs from the alternating count"
        images = {bijections.split_colored(elem).parts for elem in colored}
        expected = {
            pi.parts
            for pi in enumerate_compositions(n)
            if succession_count(pi, SuccessionParams(2, 0)) == 0
        }
        if len(images) != len(colored) or images != expected:
            return False, f"split map not bijective at size {n}"
        for elem in colored:
            if bijections.merge_alternating(bijections.split_colored(elem)) != elem:
                return False, f"merge fails to undo split on {elem}"
    return True, f"bijective onto alternating compositions for n <= {n_max}"


def _suite_bijection_head(args) -> tuple[bool, str]:
    n_max = min(args.n_max, 12)
    for n in range(5, n_max + 1):
        domain = bijections.enumerate_colored(n - 2) + bijections.enumerate_colored(n - 3)
        codomain = [e for e in bijections.enumerate_colored(n) if bijections.is_head_special(e)]
        codomain += bijections.enumerate_colored(n - 4)
        images = [bijections.head_forward(elem, n) for elem in domain]
        if len(set(images)) != len(images) or set(images) != set(codomain):
            return False, f"head map not bijective at size {n}"
        specials = sum(1 for e in bijections.enumerate_colored(n) if bijections.is_head_special(e))
        expected = closed_forms.alternating_count(n) - closed_forms.alternating_count(n - 2)
        if specials != expected:
            return False, f"head-special population at size {n} is {specials}, expected {expected}"
    return True, f"bijective for 5 <= n <= {n_max}"


def _suite_asympt(args) -> tuple[bool, str]:
    roots = [asymptotics.dominant_root(m) for m in range(2, 11)]
    if not all(0.5 <= rho < 0.68 for rho in roots):
        return False, "a dominant root left the interval [0.5, 0.68)"
    if any(b > a for a, b in zip(roots, roots[1:])):
        return False, "dominant roots are not non-increasing in m"
    report = asymptotics.circle_scan(7, 0.7, 200)
    if report.certified_lower_bound <= 0:
        return False, "circle-scan certificate is not positive"
    estimate = asymptotics.dominant_estimate(2)
    if abs(estimate.rho - 0.6710436067037893) > 1e-9:
        return False, f"dominant root for m=2 is {estimate.rho}"
    return True, "roots bracketed and monotone for m <= 10; scan certificate positive"


_SUITES = {
    "oracle-gf": _suite_oracle_gf,
    "carlitz": _suite_carlitz,
    "closed-forms": _suite_closed_forms,
    "recurrence": _suite_recurrence,
    "bijection-tail": _suite_bijection_tail,
    "bijection-split": _suite_bijection_split,
    "bijection-head": _suite_bijection_head,
    "asympt": _suite_asympt,
}


def cmd_verify(args) -> int:
    if args.check_trace:
        with open(args.check_trace) as fh:
            checked = bijections.check_tail_trace(fh.readlines())
        print(f"trace: PASS ({checked} entries re-verified)")
        return EXIT_OK
    names = [args.suite] if args.suite else sorted(_SUITES)
    results = []
    for name in names:
        passed, details = _SUITES[name](args)
        results.append({"name": name, "passed": passed, "details": details})
    if args.format == "json":
        sys.stdout.write(_emit_json({"command": "verify", "suites": results}))
    else:
        for res in results:
            print(f"{res['name']}: {'PASS' if res['passed'] else 'FAIL'} ({res['details']})")
    return EXIT_OK if all(res["passed"] for res in results) else EXIT_VERIFY


def cmd_asympt(args) -> int:
    pairs: list[tuple[str, object]] = []
    if args.carlitz:
        root = asymptotics.carlitz_root(args.tol)
        pairs += [("carlitz_rho", _fmt15(root)), ("carlitz_growth_rate", _fmt15(1 / root))]
    else:
        estimate = asymptotics.dominant_estimate(args.m, args.tol)
        pairs += [
            ("m", args.m),
            ("rho", _fmt15(estimate.rho)),
            ("amplitude", _fmt15(estimate.amplitude)),
            ("growth_rate", _fmt15(estimate.growth_rate)),
        ]
        if args.compare is not None:
            n = args.compare
            if n < 0 or n > _GF_ORDER_CAP:
                raise BudgetError(f"comparison size must lie in 0..{_GF_ORDER_CAP}")
            exact = series.count_no_successions(args.m, n)[n]
            approx = asymptotics.asymptotic_estimate(args.m, n, args.tol)
            pairs += [
                ("n", n),
                ("exact", str(exact)),
                ("estimate", _fmt15(approx)),
                ("relative_error", _fmt15(abs(approx - exact) / exact)),
            ]
    if args.scan:
        for key, value in asymptotics.circle_scan(7, 0.7, 1000).to_json_dict().items():
            pairs.append((f"scan_{key}", value))
    if args.format == "json":
        sys.stdout.write(_emit_json({"command": "asympt", **dict(pairs)}))
    else:
        for key, value in pairs:
            print(f"{key}: {value}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "count":
            return cmd_count(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_asympt(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (asymptotics.RootBracketError, ArithmeticError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"invalid request: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
