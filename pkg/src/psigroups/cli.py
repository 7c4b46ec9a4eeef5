"""Command-line interface.

Subcommands operate on groups given in the construction expression language
(`psi`, `omega`, `cp2`, `spectrum`, `compare`, `export`) or on GT1 table
files (`import`), and `verify` runs the theorem battery over a built catalog.
Output is plain ASCII with LF newlines and is byte-stable for fixed inputs.

Exit codes: 0 success, 1 theorem violation from `verify`, 2 usage or input
errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .catalog import build_catalog
from .cp2 import is_cp2_pairwise
from .expr import group_from_text
from .groups import FiniteGroup, GroupError, parse_group_table, serialize_group
from .groups import order_spectrum
from .omega import omega_filtration, psi_brute
from .psi import OrderBijection, order_bijection, predict_order
from .verify import verify_theorems


def _render_psi(group: FiniteGroup) -> str:
    return f"psi({group.name}) = {psi_brute(group)}\n"


def _render_omega(group: FiniteGroup) -> str:
    filtration = omega_filtration(group)
    return "".join(
        f"i={i} set={level.set_size} gen={level.subgroup_size}\n"
        for i, level in enumerate(filtration.levels))


def _render_cp2(group: FiniteGroup) -> str:
    report = is_cp2_pairwise(group)
    if report.is_cp2:
        return "CP2: yes\n"
    x, y, ox, oy, oxy = report.witness
    return f"CP2: no\nwitness: x={x} y={y} o(x)={ox} o(y)={oy} o(xy)={oxy}\n"


def _render_spectrum(group: FiniteGroup) -> str:
    return "".join(f"{order}:{count}\n"
                   for order, count in sorted(order_spectrum(group).items()))


def _render_compare(p_group: FiniteGroup, q_group: FiniteGroup) -> str:
    comparison = predict_order(p_group, q_group)
    lines = [
        f"psi({p_group.name}) = {comparison.psi_p}",
        f"psi({q_group.name}) = {comparison.psi_q}",
        f"relation: {comparison.relation}",
        comparison.summary,
        "hypotheses:",
    ]
    for check in comparison.hypothesis_log:
        mark = "pass" if check.passed else "fail"
        lines.append(f"  [{mark}] {check.name}: {check.detail}")
    bijection = order_bijection(p_group, q_group)
    lines.append(
        "bijection: yes" if isinstance(bijection, OrderBijection) else "bijection: no")
    return "\n".join(lines) + "\n"


_GROUP_RENDERERS = {
    "psi": _render_psi,
    "omega": _render_omega,
    "cp2": _render_cp2,
    "spectrum": _render_spectrum,
}


def _render_verify(prime: int, max_order: int) -> tuple[str, int]:
    cat = build_catalog([prime], max_order)
    reports = verify_theorems(cat)
    lines = []
    violated = False
    for report in reports:
        lines.append(
            f"{report.theorem:<24} checked={report.pairs_checked} "
            f"applicable={report.hypothesis_applicable} "
            f"violations={len(report.violations)} [{report.status}]")
        for subject, detail in report.violations:
            violated = True
            lines.append(f"  violation {subject}: {detail}")
        for subject, detail in report.notes:
            lines.append(f"  note {subject}: {detail}")
    return "\n".join(lines) + "\n", 1 if violated else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psigroups",
        description="Element-order sums, omega filtrations and CP2 membership "
                    "for finite groups given by construction expressions.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("psi", "print the sum of element orders"),
        ("omega", "print set and subgroup sizes of every omega level"),
        ("cp2", "decide CP2 membership by the pairwise test"),
        ("spectrum", "print the order spectrum"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("expr", help="group expression, e.g. C4*C4 or D16")

    cmd = sub.add_parser("compare", help="compare psi of two same-order groups")
    cmd.add_argument("expr1")
    cmd.add_argument("expr2")

    cmd = sub.add_parser("verify", help="run the theorem battery over a catalog")
    cmd.add_argument("--p", type=int, required=True, help="catalog prime")
    cmd.add_argument("--max-order", type=int, required=True, help="largest group order")

    cmd = sub.add_parser("export", help="write a group table in GT1 format")
    cmd.add_argument("expr")
    cmd.add_argument("--out", required=True, help="output path")

    cmd = sub.add_parser("import", help="run a subcommand on a GT1 table file")
    cmd.add_argument("path")
    cmd.add_argument("subcommand", choices=sorted(_GROUP_RENDERERS))
    cmd.add_argument("--check-assoc", action="store_true",
                     help="force the exhaustive associativity check")
    return parser


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command in _GROUP_RENDERERS:
            group = group_from_text(args.expr)
            sys.stdout.write(_GROUP_RENDERERS[args.command](group))
            return 0
        if args.command == "compare":
            sys.stdout.write(
                _render_compare(group_from_text(args.expr1), group_from_text(args.expr2)))
            return 0
        if args.command == "verify":
            text, code = _render_verify(args.p, args.max_order)
            sys.stdout.write(text)
            return code
        if args.command == "export":
            group = group_from_text(args.expr)
            with open(args.out, "w", newline="\n") as handle:
                handle.write(serialize_group(group))
            return 0
        if args.command == "import":
            with open(args.path) as handle:
                text = handle.read()
            group = parse_group_table(text, name=args.path, check_assoc=args.check_assoc)
            sys.stdout.write(_GROUP_RENDERERS[args.subcommand](group))
            return 0
        raise AssertionError(f"unhandled command {args.command!r}")
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(cli_main(sys.argv[1:]))
