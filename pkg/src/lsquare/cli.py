"""Command-line front end.

Subcommands: power, build-l2, check-support, betti, bounds, verify.
Exit codes: 0 success/PASS, 1 usage or input error, 2 a checked criterion is
false (with a printed witness), 3 a resource cap was exceeded (the message
names the cap flag).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import l2 as l2mod
from . import randoms
from .homology import HomologyLimits, ResourceLimit, parse_field
from .labeled import (
    BettiTable,
    NotQuasiForest,
    UnsupportedComplex,
    betti_numbers,
    labeled_from_json,
    labeled_to_json,
    supports_resolution_homological,
    supports_resolution_quasitree,
    taylor_complex,
)
from .monomials import ParseError, format_ideal, format_monomial, parse_ideal

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAIL = 2
EXIT_RESOURCE = 3

_CAP_FLAGS = {
    "max-faces": "--max-faces (env LSQUARE_MAX_FACES)",
    "max-taylor": "--max-taylor (env LSQUARE_MAX_TAYLOR)",
    "max-q": "--max-q (env LSQUARE_MAX_Q)",
    "max-nerve-members": "--max-faces (env LSQUARE_MAX_FACES)",
}


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("table", "json", "csv"), default="table"
    )
    parser.add_argument("--field", default="rational", help="rational or gf:p")
    parser.add_argument("--vars", default=None, help="comma-separated variable order")
    parser.add_argument(
        "--max-faces",
        type=int,
        default=_env_int("LSQUARE_MAX_FACES", 1 << 22),
        help="cap on enumerated faces",
    )
    parser.add_argument(
        "--max-taylor",
        type=int,
        default=_env_int("LSQUARE_MAX_TAYLOR", 22),
        help="cap on Taylor complex vertices",
    )
    parser.add_argument(
        "--max-q",
        type=int,
        default=_env_int("LSQUARE_MAX_Q", 7),
        help="cap on generator count for exact computations",
    )


def _limits(args) -> HomologyLimits:
    return HomologyLimits(max_faces=args.max_faces)


def _parse_ideal_arg(args):
    names = args.vars.split(",") if args.vars else None
    ideal, dropped = parse_ideal(args.ideal, names)
    if dropped:
        print(
            "warning: input was not minimal; dropped "
            + ", ".join(format_monomial(m) for m in dropped),
            file=sys.stderr,
        )
    return ideal


def _check_q_cap(q: int, args) -> None:
    if q > args.max_q:
        raise ResourceLimit(f"ideal has {q} generators (cap {args.max_q})", "max-q")


def render_rows(header: list[str], rows: list[tuple[str, list]], fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(header)]
        for label, values in rows:
            lines.append(",".join([label] + [str(v) for v in values]))
        return "\n".join(lines)
    widths = [len(h) for h in header]
    table = [[label] + [str(v) for v in values] for label, values in rows]
    for row in table:
        for k, cell in enumerate(row):
            widths[k] = max(widths[k], len(cell))

    def fmt_row(cells):
        rest = [c.rjust(w) for c, w in zip(cells[1:], widths[1:])]
        return cells[0].ljust(widths[0]) + " | " + "  ".join(rest)

    sep = "-" * widths[0] + "-+-" + "-" * (sum(widths[1:]) + 2 * (len(widths) - 2))
    lines = [fmt_row(header), sep]
    lines.extend(fmt_row(row) for row in table)
    return "\n".join(lines)


def _betti_rows(table: BettiTable, max_d: int, graded: bool) -> list[tuple[str, list]]:
    rows: list[tuple[str, list]] = [("beta", table.as_vector(max_d))]
    if graded and table.graded:
        per_m: dict = {}
        for (d, m), r in table.graded.items():
            per_m.setdefault(m, {})[d] = r
        for m in sorted(per_m, key=lambda m: (m.degree(), m.sort_key())):
            rows.append(
                (format_monomial(m), [per_m[m].get(d, 0) for d in range(max_d + 1)])
            )
    return rows


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------


def cmd_power(args) -> int:
    ideal = _parse_ideal_arg(args)
    power = ideal.power(args.power)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "vars": list(power.table.names),
                    "generators": [format_monomial(g) for g in power.gens],
                    "count": power.q,
                },
                indent=2,
            )
        )
    else:
        print(f"s = {power.q}")
        print(format_ideal(power))
    return EXIT_OK


def cmd_build_l2(args) -> int:
    ideal = _parse_ideal_arg(args)
    _check_q_cap(ideal.q, args)
    lab, record = l2mod.l2_of_ideal(ideal)
    pairs = l2mod.pairs_of(ideal.q)
    if args.format == "json":
        obj = labeled_to_json(lab)
        obj["pairs"] = {
            str(k): [pairs[k].i, pairs[k].j] for k in sorted(lab.complex.vertices)
        }
        obj["deletion"] = record.to_json()
        print(json.dumps(obj, indent=2))
        return EXIT_OK
    print(f"q = {ideal.q}, surviving vertices s = {record.s}")
    if record.deleted:
        gone = ", ".join(
            f"{v} [{format_monomial(ideal.gens[v.i - 1] * ideal.gens[v.j - 1])}]"
            for v in sorted(record.deleted, key=lambda v: (v.i, v.j))
        )
        print(f"deleted: {gone}")
        print(f"t = {list(record.t)}")
    else:
        print("deleted: none (complex equals the full skeleton)")
    print("facets:")
    for f in lab.complex.facets:
        names = ", ".join(str(pairs[k]) for k in sorted(f))
        label = format_monomial(lab.face_label(f))
        print(f"  dim {len(f) - 1}: {{{names}}}  label {label}")
    return EXIT_OK


def cmd_check_support(args) -> int:
    ideal = _parse_ideal_arg(args)
    _check_q_cap(ideal.q, args)
    field = parse_field(args.field)
    limits = _limits(args)
    target = ideal.power(args.power) if args.power > 1 else ideal
    if args.complex:
        with open(args.complex) as fh:
            lab = labeled_from_json(json.load(fh), ideal.table)
        source = args.complex
    elif args.power == 2 and ideal.is_squarefree():
        lab, _record = l2mod.l2_of_ideal(ideal)
        source = "L2 complex of the ideal"
    else:
        lab = taylor_complex(target, max_vertices=args.max_taylor)
        source = "Taylor complex"
    print(f"complex: {source} ({len(lab.complex.vertices)} vertices)")

    failed = False
    try:
        rep = supports_resolution_quasitree(lab, target)
        print(f"quasi-forest connectivity criterion: {rep}")
        failed = failed or not rep.supported
    except NotQuasiForest:
        print("quasi-forest connectivity criterion: inapplicable (not a quasi-forest)")
    rep_h = supports_resolution_homological(lab, target, field, limits)
    print(f"homological criterion: {rep_h}")
    failed = failed or not rep_h.supported
    return EXIT_FAIL if failed else EXIT_OK


def cmd_betti(args) -> int:
    ideal = _parse_ideal_arg(args)
    _check_q_cap(ideal.q, args)
    field = parse_field(args.field)
    limits = _limits(args)
    target = ideal.power(args.power) if args.power > 1 else ideal
    if args.complex:
        with open(args.complex) as fh:
            lab = labeled_from_json(json.load(fh), ideal.table)
    elif args.power == 2 and ideal.is_squarefree():
        lab, _record = l2mod.l2_of_ideal(ideal)
    else:
        lab = taylor_complex(target, max_vertices=args.max_taylor)
    table = betti_numbers(lab, target, field, check=True, limits=limits)
    max_d = table.max_d
    if args.format == "json":
        print(json.dumps(table.to_json(), indent=2))
        return EXIT_OK
    header = ["d"] + [str(d) for d in range(max_d + 1)]
    print(render_rows(header, _betti_rows(table, max_d, args.graded), args.format))
    return EXIT_OK


def cmd_bounds(args) -> int:
    ideal = _parse_ideal_arg(args)
    _check_q_cap(ideal.q, args)
    field = parse_field(args.field)
    table = l2mod.bound_table(
        ideal,
        field,
        include_exact=not args.no_exact,
        max_d=args.max_d,
        limits=_limits(args),
    )
    if args.format == "json":
        print(json.dumps(table.to_json(), indent=2))
        return EXIT_OK
    print(f"q = {table.q}, s = {table.s}, t = {list(table.t)}")
    header = ["d"] + [str(d) for d in range(table.max_d + 1)]
    print(render_rows(header, table.rows, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    field = parse_field(args.field)
    limits = _limits(args)
    config = randoms.SweepConfig(
        seed=args.seed,
        count=args.count,
        max_n=args.max_n,
        max_q=args.max_q,
        include_fixture=not args.no_fixture,
    )
    report = randoms.run_sweep(config, field, limits)
    if args.format == "json":
        obj = {
            "seed": config.seed,
            "count": config.count,
            "instances": [
                {
                    "index": inst.index,
                    "ideal": inst.ideal_text,
                    "q": inst.q,
                    "n": inst.n,
                    "passed": inst.passed,
                    "failures": [
                        {"check": c.name, "detail": c.detail} for c in inst.failures
                    ],
                }
                for inst in report.instances
            ],
            "all_passed": report.all_passed,
        }
        print(json.dumps(obj, indent=2))
    else:
        for inst in report.instances:
            if inst.passed:
                print(
                    f"[{inst.index:03d}] q={inst.q} n={inst.n} "
                    f"I = {inst.ideal_text} : ok ({len(inst.checks)} checks)"
                )
            else:
                for c in inst.failures:
                    print(
                        f"[{inst.index:03d}] q={inst.q} n={inst.n} "
                        f"I = {inst.ideal_text} : FAIL {c.name} {c.detail}"
                    )
        good = sum(1 for inst in report.instances if inst.passed)
        print(
            f"summary: {good}/{len(report.instances)} instances passed "
            f"(seed={config.seed}, max-n={config.max_n}, max-q={config.max_q})"
        )
    return EXIT_OK if report.all_passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lsquare",
        description=(
            "Support complexes, exact Betti numbers, and face-count bounds "
            "for squares of square-free monomial ideals."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("power", help="minimal generators of a power of the ideal")
    p.add_argument("ideal")
    p.add_argument("-r", "--power", type=int, default=2)
    _add_common(p)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("build-l2", help="the labeled complex specialized to the ideal")
    p.add_argument("ideal")
    _add_common(p)
    p.set_defaults(func=cmd_build_l2)

    p = sub.add_parser("check-support", help="run both support criteria")
    p.add_argument("--ideal", required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--complex", default=None, help="labeled complex JSON file")
    _add_common(p)
    p.set_defaults(func=cmd_check_support)

    p = sub.add_parser("betti", help="exact Betti numbers from a supporting complex")
    p.add_argument("ideal")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--graded", action="store_true", help="include multidegree rows")
    p.add_argument("--complex", default=None, help="labeled complex JSON file")
    _add_common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("bounds", help="bound comparison table for the square")
    p.add_argument("ideal")
    p.add_argument("--no-exact", action="store_true", help="skip the exact Betti row")
    p.add_argument("--max-d", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    # verify owns --max-q/--max-n as sweep ranges; resource caps stay on env vars
    p = sub.add_parser("verify", help="seeded random sweep of the invariant suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-q", type=int, default=4)
    p.add_argument("--no-fixture", action="store_true", help="skip the sharpness fixture")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--field", default="rational", help="rational or gf:p")
    p.add_argument(
        "--max-faces",
        type=int,
        default=_env_int("LSQUARE_MAX_FACES", 1 << 22),
        help="cap on enumerated faces",
    )
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except UnsupportedComplex as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ResourceLimit as exc:
        flag = _CAP_FLAGS.get(exc.cap, exc.cap)
        print(f"resource limit: {exc}; raise {flag}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
