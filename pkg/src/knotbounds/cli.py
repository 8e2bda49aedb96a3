"""Command-line front end: ``knotbounds analyze | verify-table | conjectures``.

Exit codes: 0 success, 1 flagged rows or counterexamples, 2 unreadable
input, 3 crossing budget or enumeration cap exceeded, 4 internal
inconsistency (including a lower bound above a reference value).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .analysis import Analysis, analyze_diagram, analyze_goeritz
from .covering import DEFAULT_CAP, EnumerationCapExceeded
from .criteria import BoundReport, KnotData, combined_report, conjecture_scan
from .diagram import Diagram, DiagramError, mirror, parse_pd, realize_dt
from .invariants import DEFAULT_BUDGET, BudgetExceeded, InconsistentInvariants
from .tables import KnotTable, TableError, TableRow, bundled_table, composite_diagram, parse_table_file, prime_diagram

SCHEMA = "knotbounds.report/1"

EXIT_FLAG = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INCONSISTENT = 4


# serialization ---------------------------------------------------------------------


def _frac(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def verdict_tree(report: BoundReport) -> dict:
    return {
        "combined_lower": report.combined_lower,
        "firing": report.firing(),
        "notes": report.notes,
        "reference_u": report.reference_u,
        "verdicts": [
            {
                "name": v.name,
                "applicable": v.applicable,
                "bound": v.bound,
                "signed": v.signed,
                "witness": v.witness,
            }
            for v in report.verdicts
        ],
    }


def linking_summary(data: KnotData) -> dict | None:
    if data.spectrum is None:
        return None
    d = data.group.order
    gens = [e for e in data.spectrum if e.order == d] if data.group.is_cyclic else []
    values = sorted({e.self_linking for e in gens})
    plus = Fraction(2, d) % 1 in values
    minus = Fraction(-2, d) % 1 in values
    return {
        "elements": len(data.spectrum),
        "generators": len(gens),
        "generator_values": [_frac(x) for x in values],
        "has_plus_2_over_det": plus,
        "has_minus_2_over_det": minus,
        "cyclic": data.group.is_cyclic,
    }


def analysis_tree(a: Analysis, report: BoundReport, source: dict) -> dict:
    data = a.data
    inv = {
        "det": data.det,
        "homology": str(a.group),
        "invariant_factors": list(a.group.invariant_factors),
        "signature": data.sigma,
        "goeritz": [list(r) for r in a.goeritz.matrix],
    }
    if a.diagram is not None:
        inv["crossings"] = a.diagram.n
        inv["writhe"] = a.diagram.writhe
    if a.special is not None:
        sv = a.special
        inv.update(
            {
                "jones": str(a.jones),
                "q": str(a.q),
                "v_at_minus_1": sv.v_at_minus1,
                "arf_sign": sv.arf_sign,
                "v_at_omega": sv.omega_value_text,
                "traczyk_d": sv.traczyk_d,
                "q_at_golden": sv.golden_value_text,
                "golden_k": sv.golden_k,
                "q_at_2": sv.q_at_2,
            }
        )
    lf = linking_summary(data)
    if lf is not None:
        lf["gram"] = [[_frac(x) for x in row] for row in a.form.gram]
    return {
        "schema": SCHEMA,
        "version": __version__,
        "knot": {
            "name": a.name,
            "source": source,
            "invariants": dict(sorted(inv.items())),
            "linking_form": lf,
            "bounds": verdict_tree(report),
        },
    }


def render_text(tree: dict) -> str:
    k = tree["knot"]
    inv = k["invariants"]
    lines = [f"knot {k['name']}"]
    if "crossings" in inv:
        lines.append(f"  crossings {inv['crossings']}, writhe {inv['writhe']}")
    if "jones" in inv:
        lines.append(f"  V = {inv['jones']}")
        lines.append(f"  Q = {inv['q']}")
        lines.append(
            f"  V(-1) = {inv['v_at_minus_1']}, V(i) = {inv['arf_sign']}, "
            f"V(e^(i pi/3)) = {inv['v_at_omega']}, Q((sqrt5-1)/2) = {inv['q_at_golden']}"
        )
    sig = inv["signature"]
    lines.append(f"  det {inv['det']}, signature {sig if sig is not None else 'unknown'}, H1 = {inv['homology']}")
    lf = k["linking_form"]
    if lf is not None:
        vals = lf["generator_values"]
        shown = ", ".join(vals[:12]) + (" ..." if len(vals) > 12 else "")
        if lf["cyclic"]:
            lines.append(f"  linking form: {lf['generators']} generators, self-linking {{{shown}}}")
        else:
            lines.append(f"  linking form: H1 not cyclic, {lf['elements']} elements, no generator")
        lines.append(
            f"  generator with +2/det: {'yes' if lf['has_plus_2_over_det'] else 'no'}; "
            f"with -2/det: {'yes' if lf['has_minus_2_over_det'] else 'no'}"
        )
    b = k["bounds"]
    for v in b["verdicts"]:
        bound = "-" if v["bound"] is None else str(v["bound"])
        lines.append(f"  {v['name']:<18} {bound:>2}  {v['witness']}")
    for note in b["notes"]:
        lines.append(f"  note: {note}")
    tail = "" if sig is not None or inv.get("jones") else " (requires external sigma for signed tests)"
    lines.append(f"  u >= {b['combined_lower']}{tail}")
    return "\n".join(lines)


def dump_json(tree) -> str:
    return json.dumps(tree, indent=2, sort_keys=True, ensure_ascii=False)


# input resolution --------------------------------------------------------------------


def _read_goeritz(path: str) -> list[list[int]]:
    rows = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append([int(x) for x in line.replace(",", " ").split()])
    return rows


def resolve_knot(name: str) -> tuple[Diagram, int | None]:
    """A bundled knot by name: 10_105, !8_16 or 3_1#!7_1; returns (diagram, factors)."""
    primes = bundled_table("knots_le10")
    if "#" in name:
        table = bundled_table("composites")
        try:
            row = table.by_name(name)
        except KeyError:
            from .tables import parse_table

            row = parse_table(f"#! naming: rolfsen\n{name}\n").rows[0]
        return composite_diagram(row, primes), len(row.factors)
    mirrored = name.startswith("!")
    try:
        cn, idx = (int(x) for x in name.lstrip("!").split("_"))
        row = primes.lookup(cn, idx)
    except (ValueError, KeyError):
        raise TableError(f"unknown knot {name!r}") from None
    d = prime_diagram(row)
    return (mirror(d) if mirrored else d), None


def cmd_analyze(args) -> int:
    source: dict
    if args.goeritz:
        rows = _read_goeritz(args.goeritz)
        a = analyze_goeritz(rows, name=args.name or Path(args.goeritz).stem, sigma=args.sigma, cap=args.cap)
        source = {"goeritz": args.goeritz}
    else:
        factors = None
        if args.dt:
            d = realize_dt(args.dt, name=args.name or "K")
            source = {"dt": args.dt}
        elif args.pd:
            d = parse_pd(Path(args.pd).read_text())
            source = {"pd": args.pd}
        else:
            d, factors = resolve_knot(args.knot)
            source = {"knot": args.knot}
        a = analyze_diagram(d, name=args.name or d.name or "K", budget=args.budget, cap=args.cap, prime_factors=factors)
    report = combined_report(a.data, mirror_both=args.mirror_both)
    tree = analysis_tree(a, report, source)
    print(dump_json(tree) if args.json else render_text(tree))
    return 0


# batch commands ----------------------------------------------------------------------


@dataclass
class RowResult:
    row: TableRow
    status: str  # PASS, GAP, FLAG or ERROR
    message: str
    data: KnotData | None = None
    report: BoundReport | None = None
    exceeded: bool = False


def check_row(row: TableRow, primes: KnotTable, budget: int = DEFAULT_BUDGET, cap: int = DEFAULT_CAP) -> RowResult:
    try:
        if row.is_composite:
            d = composite_diagram(row, primes)
            a = analyze_diagram(d, row.name, budget=budget, cap=cap, prime_factors=len(row.factors))
        else:
            a = analyze_diagram(prime_diagram(row), row.name, budget=budget, cap=cap)
    except (BudgetExceeded, EnumerationCapExceeded, DiagramError, TableError, KeyError, InconsistentInvariants) as exc:
        return RowResult(row, "ERROR", f"{type(exc).__name__}: {exc}")
    ref = row.reference_u
    report = combined_report(a.data, ref.value if ref else None, ref.unresolved if ref else 0)
    problems = []
    if row.reference_det is not None and row.reference_det != a.det:
        problems.append(f"det {a.det} != reference {row.reference_det}")
    if row.reference_sigma is not None and row.reference_sigma != a.sigma:
        problems.append(f"sigma {a.sigma} != reference {row.reference_sigma}")
    text = f"det {a.det} sigma {a.sigma} H1 {a.group} bound {report.combined_lower}"
    if ref is not None:
        text += f" u {ref}"
    if report.firing():
        text += f" [{', '.join(report.firing())}]"
    exceeded = report.exceeds_reference
    if exceeded:
        problems.append(f"lower bound {report.combined_lower} exceeds reference u {ref}")
    if problems:
        return RowResult(row, "FLAG", text + "; " + "; ".join(problems), a.data, report, exceeded)
    if ref is not None and report.combined_lower < ref.lowest:
        return RowResult(row, "GAP", text, a.data, report)
    return RowResult(row, "PASS", text, a.data, report)


def _check_star(job):
    return check_row(*job)


def run_rows(table: KnotTable, primes: KnotTable, jobs: int, budget: int, cap: int) -> list[RowResult]:
    work = [(row, primes, budget, cap) for row in table]
    if jobs <= 1 or len(work) <= 1:
        return [_check_star(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_check_star, work, chunksize=4))


def _load_tables(args) -> tuple[KnotTable, KnotTable]:
    table = parse_table_file(args.table)
    primes = parse_table_file(args.primes) if args.primes else bundled_table("knots_le10")
    return table, primes


def cmd_verify_table(args) -> int:
    table, primes = _load_tables(args)
    results = run_rows(table, primes, args.jobs, args.budget, args.cap)
    counts: dict[str, int] = {}
    out = []
    for r in results:
        if r.exceeded:
            print(f"ABORT {r.row.name}: {r.message}", file=sys.stderr)
            print("a lower bound above a reference value indicates a convention error", file=sys.stderr)
            return EXIT_INCONSISTENT
        counts[r.status] = counts.get(r.status, 0) + 1
        out.append({"name": r.row.name, "status": r.status, "message": r.message})
        if not args.json:
            print(f"{r.status:<5} {r.row.name:<14} {r.message}")
    summary = " ".join(f"{k}={counts[k]}" for k in sorted(counts))
    if args.json:
        print(dump_json({"schema": SCHEMA, "version": __version__, "rows": out, "summary": counts}))
    else:
        print(f"summary: {summary}")
    bad = counts.get("FLAG", 0) + counts.get("ERROR", 0)
    if args.strict:
        bad += counts.get("GAP", 0)
    return EXIT_FLAG if bad else 0


def cmd_conjectures(args) -> int:
    table, primes = _load_tables(args)
    results = run_rows(table, primes, args.jobs, args.budget, args.cap)
    datas = [r.data for r in results if r.data is not None]
    findings = conjecture_scan(datas)
    stats: dict[str, dict[str, int]] = {}
    for f in findings:
        stats.setdefault(f.conjecture, {"consistent": 0, "counterexample": 0})[f.status] += 1
    counter = [f for f in findings if f.status == "counterexample"]
    skipped = [r.row.name for r in results if r.data is None]
    if args.json:
        print(
            dump_json(
                {
                    "schema": SCHEMA,
                    "version": __version__,
                    "findings": [
                        {"conjecture": f.conjecture, "knot": f.knot, "status": f.status, "detail": f.detail}
                        for f in findings
                    ],
                    "statistics": stats,
                    "skipped": skipped,
                }
            )
        )
    else:
        for f in findings:
            if f.status == "counterexample" or args.verbose:
                tag = "FLAG" if f.status == "counterexample" else "ok"
                print(f"{tag:<4} {f.conjecture:<4} {f.knot:<14} {f.detail}")
        for c in sorted(stats):
            supports = [f.knot for f in findings if f.conjecture == c and f.status == "consistent"]
            head = ", ".join(supports[:6]) + (" ..." if len(supports) > 6 else "")
            print(
                f"{c}: {stats[c]['consistent']} consistent, {stats[c]['counterexample']} counterexamples"
                + (f" (support: {head})" if supports else "")
            )
        for name in skipped:
            print(f"skipped {name}: analysis failed")
        print(f"knots scanned: {len(datas)}, counterexamples: {len(counter)}")
    return EXIT_FLAG if counter else 0


# entry point ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="knotbounds", description="Unknotting number lower bounds from exact invariants.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of crossings")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest H1 whose elements are enumerated")
        sp.add_argument("--json", action="store_true", help="structured output")

    a = sub.add_parser("analyze", help="invariants and bounds for one knot")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--dt", help="DT code, e.g. '4 6 2'")
    src.add_argument("--pd", help="file with a PD code")
    src.add_argument("--goeritz", help="file with a Goeritz matrix, one row per line")
    src.add_argument("--knot", help="bundled knot: 10_105, !8_16, 3_1#!7_1")
    a.add_argument("--name")
    a.add_argument("--sigma", type=int, help="signature to use with --goeritz")
    a.add_argument("--mirror-both", action=argparse.BooleanOptionalAction, default=True)
    common(a)
    a.set_defaults(func=cmd_analyze)

    for cmd, func, text in (
        ("verify-table", cmd_verify_table, "recompute a table and compare with its references"),
        ("conjectures", cmd_conjectures, "evaluate the conjectured relations over a table"),
    ):
        sp = sub.add_parser(cmd, help=text)
        sp.add_argument("--table", required=True)
        sp.add_argument("--primes", help="table used to resolve composite factors (default: bundled)")
        sp.add_argument("--jobs", type=int, default=1)
        common(sp)
        if cmd == "verify-table":
            sp.add_argument("--strict", action="store_true", help="count rows with a bound below the reference as flags")
        else:
            sp.add_argument("--verbose", action="store_true", help="list consistent findings too")
        sp.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DiagramError, TableError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceeded, EnumerationCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InconsistentInvariants as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
