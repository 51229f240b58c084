"""Command-line interface: ``theta3 <command> <n> [options]``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import poly3
from .dynamics import INF, orbit, preimages
from .enumerator import VERIFY_MAX_POINTS, analyze, build_successor_table, verify
from .errors import BudgetExceeded, CtxTooLarge, ParseError, Theta3Error
from .export import EXPORT_MAX_NODES, all_labels, check_label_mode, point_label, to_dot
from .field import ctx_new, power
from .predictor import divisor_table, predict

COMMANDS = ("predict", "enumerate", "verify", "orbit", "preimages", "export-dot", "divisors")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def parse_point(text: str, ctx):
    """Parse ``inf``, ``a^K`` (power of the default generator) or ``c0,c1,...``."""
    t = text.strip()
    if t.lower() in ("inf", "∞"):
        return INF
    m = re.fullmatch(r"a\^(-?\d+)", t)
    if m:
        return power(ctx.generator, int(m.group(1)))
    coeffs = poly3.parse(t)
    if len(coeffs) > ctx.n:
        raise ParseError(f"element {t!r} has degree >= {ctx.n}")
    return ctx(coeffs)


def _factor_str(f: dict) -> str:
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in f.items()) or "1"


def _census_lines(census: dict) -> list[str]:
    return [f"  {length:>8}  {count}" for length, count in sorted(census.items())]


def _divisor_lines(rows) -> list[str]:
    out = ["  {:>12}  {:>12}  {:>10}".format("d", "phi(d)", "ord_d(-2)")]
    out += [f"  {d:>12}  {phi:>12}  {o:>10}" for d, phi, o in rows]
    if not rows:
        out.append("  (no odd divisors > 1)")
    return out


def cmd_predict(args) -> tuple[str, int]:
    if args.modulus:
        ctx_new(args.n, args.modulus)  # validation only; the census does not depend on it
    pred = predict(args.n)
    if args.format == "json":
        return json.dumps(pred.to_dict()), EXIT_OK
    from .numtheory import factorize

    lines = [
        f"n = {args.n}: 3^n - 1 = {3 ** args.n - 1} = {_factor_str(factorize(3 ** args.n - 1))}",
        "divisor table:",
        *_divisor_lines(pred.divisor_rows),
        "cycles (length  count):",
        *_census_lines(pred.cycle_census),
        f"components: {pred.component_count}",
        f"periodic points: {pred.periodic_point_count}",
        f"tree depth: {pred.tree_depth}",
        f"level populations: {pred.level_populations}",
    ]
    return "\n".join(lines), EXIT_OK


def cmd_divisors(args) -> tuple[str, int]:
    if args.modulus:
        ctx_new(args.n, args.modulus)
    rows = divisor_table(args.n)
    if args.format == "json":
        return json.dumps([list(r) for r in rows]), EXIT_OK
    return "\n".join(_divisor_lines(rows)), EXIT_OK


def _report_lines(report) -> list[str]:
    par = report.parity_report
    return [
        f"n = {report.n}, modulus {poly3.format_coeffs(report.modulus)} ({poly3.to_str(report.modulus)})",
        "cycles (length  count):",
        *_census_lines(report.cycle_census),
        f"components: {report.component_count}",
        f"tree depth: {report.tree_depth}",
        f"level populations: {report.level_populations}",
        f"non-special cycles: {par['odd']} odd, {par['even']} even",
    ]


def cmd_enumerate(args) -> tuple[str, int]:
    ctx = ctx_new(args.n, args.modulus)
    report = analyze(build_successor_table(ctx, workers=args.workers), ctx.modulus)
    if args.format == "json":
        return json.dumps(report.to_dict()), EXIT_OK
    return "\n".join(_report_lines(report)), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    outcome = verify(args.n, args.modulus, max_points=args.max_points, workers=args.workers)
    code = EXIT_OK if outcome.passed else EXIT_MISMATCH
    if args.format == "json":
        return json.dumps(outcome.to_dict()), code
    lines = _report_lines(outcome.report)
    lines += [f"{c.status:<4}  {c.name}: {c.detail}" for c in outcome.claims]
    lines.append("PASS" if outcome.passed else "FAIL")
    return "\n".join(lines), code


def _element(args, ctx):
    text = args.element if args.element is not None else args.element_opt
    if text is None:
        raise ParseError("an element literal is required")
    return parse_point(text, ctx)


def cmd_orbit(args) -> tuple[str, int]:
    ctx = ctx_new(args.n, args.modulus)
    check_label_mode(ctx, args.labels)
    rec = orbit(_element(args, ctx), record_trajectory=True)
    traj = [point_label(p, ctx, args.labels) for p in rec.trajectory]
    if args.format == "json":
        return json.dumps({"start": traj[0], "tail_length": rec.tail_length,
                           "cycle_length": rec.cycle_length, "trajectory": traj}), EXIT_OK
    lines = [
        f"start: {traj[0]}",
        f"tail: {rec.tail_length}",
        f"cycle: {rec.cycle_length}",
        "trajectory: " + " -> ".join(traj) + f" -> {traj[rec.tail_length]}",
    ]
    return "\n".join(lines), EXIT_OK


def cmd_preimages(args) -> tuple[str, int]:
    ctx = ctx_new(args.n, args.modulus)
    check_label_mode(ctx, args.labels)
    gamma = _element(args, ctx)
    pts = sorted(preimages(gamma, ctx), key=lambda p: ctx.size if p is INF else p.index)
    labels = [point_label(p, ctx, args.labels) for p in pts]
    if args.format == "json":
        return json.dumps({"point": point_label(gamma, ctx, args.labels), "preimages": labels}), EXIT_OK
    return "{" + ", ".join(labels) + "}", EXIT_OK


def cmd_export_dot(args) -> tuple[str, int]:
    ctx = ctx_new(args.n, args.modulus)
    if ctx.size + 1 > args.max_nodes:
        raise BudgetExceeded(f"{ctx.size + 1} nodes exceed the export limit of {args.max_nodes}")
    labels = all_labels(ctx, args.labels)
    return to_dot(build_successor_table(ctx), labels, args.max_nodes).rstrip("\n"), EXIT_OK


HANDLERS = {
    "predict": cmd_predict,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "orbit": cmd_orbit,
    "preimages": cmd_preimages,
    "export-dot": cmd_export_dot,
    "divisors": cmd_divisors,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="theta3", description="Graphs of x -> x + 1/x on the projective line over F_{3^n}.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("n", type=int, help="extension degree")
        if name in ("orbit", "preimages"):
            p.add_argument("element", nargs="?", help="inf, a^K or c0,c1,...")
            p.add_argument("--element", dest="element_opt")
        p.add_argument("--modulus", help="modulus coefficients c0,c1,...,1")
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--labels", choices=("coeff", "exponent"), default="coeff")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--max-points", type=int, default=VERIFY_MAX_POINTS)
        p.add_argument("--max-nodes", type=int, default=EXPORT_MAX_NODES)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.n < 1:
        print("theta3: n must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        text, code = HANDLERS[args.command](args)
    except (BudgetExceeded, CtxTooLarge) as exc:
        print(f"theta3: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except Theta3Error as exc:
        print(f"theta3: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
