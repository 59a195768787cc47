"""Command line entry points.

Subcommands: verify (run identity checks and emit a report), table
(dump classes or character tables), curve (point counts and genus).
Exit codes: 0 success, 1 verification failure, 2 usage or internal
error.
"""

from __future__ import annotations

import argparse
import sys

from .brauer import brauer_matrix, p_regular_classes
from .classfun import gelfand_graev
from .curve import count_points, genus, smoothness_check, twist_scalar
from .dl import dl_character
from .errors import DrinfeldError, UnsupportedQ
from .fields import build_field_tower
from .group import GroupTable, conjugacy_classes
from .verify import CHECK_NAMES, SLOW_Q, SUPPORTED_Q, emit, run_all


def _require_supported(q: int, allow_slow: bool) -> None:
    supported = SUPPORTED_Q + (SLOW_Q if allow_slow else ())
    if q not in supported:
        raise UnsupportedQ(q, list(supported))


def _value_str(v) -> str:
    n = v.as_integer()
    if n is not None:
        return str(n)
    r = v.as_rational()
    if r is not None:
        return str(r)
    return v.approx_str()


def _cmd_verify(args) -> int:
    selection = None
    if args.check:
        selection = [s.strip() for s in args.check.split(",") if s.strip()]
    report = run_all(args.q, selection, allow_slow=args.allow_slow)
    return emit(report, format=args.format, destination=args.out, stable=args.stable)


def _class_label(table, cls) -> str:
    a, b, c, d = cls.rep
    regular = "yes" if cls.p_regular else "no"
    return (f"rep [{a},{b};{c},{d}]  size {cls.size}  "
            f"order {cls.element_order}  p-regular {regular}")


def _cmd_table(args) -> int:
    _require_supported(args.q, args.allow_slow)
    tower = build_field_tower(args.q)
    table = GroupTable(tower)
    classes = conjugacy_classes(table)
    lines = []
    if args.what == "classes":
        lines.append(f"conjugacy classes of the group at q = {args.q}")
        for k, cls in enumerate(classes):
            lines.append(f"class {k}: {_class_label(table, cls)}")
    elif args.what == "dl":
        lines.append(f"Deligne-Lusztig character values at q = {args.q}")
        lines.append("columns: " + ", ".join(
            f"class {k} (order {c.element_order})" for k, c in enumerate(classes)))
        for j in range(1, args.q + 1):
            r = dl_character(table, j)
            lines.append(f"R_{j}: " + "  ".join(_value_str(v) for v in r.values))
    elif args.what == "brauer":
        rows, _, _ = brauer_matrix(table)
        regular = p_regular_classes(table)
        lines.append(f"Brauer characters of symmetric powers at q = {args.q}")
        lines.append("columns: " + ", ".join(
            f"order {c.element_order}" for c in regular))
        for i, row in enumerate(rows):
            lines.append(f"phi_{i}: " + "  ".join(_value_str(v) for v in row))
    else:  # gg
        lines.append(f"Gelfand-Graev character values at q = {args.q}")
        lines.append("columns: " + ", ".join(
            f"class {k} (order {c.element_order})" for k, c in enumerate(classes)))
        for i in (1, 2):
            chi = gelfand_graev(table, i)
            lines.append(f"Gamma_{i}: " + "  ".join(_value_str(v) for v in chi.values))
    print("\n".join(lines))
    return 0


def _cmd_curve(args) -> int:
    _require_supported(args.q, args.allow_slow)
    q = args.q
    tower = build_field_tower(q)
    delta = twist_scalar(tower)
    base = count_points(q, 1, tower)
    quadratic = count_points(q, 2, tower)
    by_degree = q * (q - 1) // 2
    genus(q, tower)  # raises if the two routes disagree
    by_count = (quadratic - q * q - 1) // (2 * q)
    print(f"curve X*Y^{q} - X^{q}*Y = delta*Z^{q + 1} over F_{q}"
          f" (delta encoding {delta})")
    print(f"smooth: {smoothness_check(q, tower)}")
    print(f"genus (degree formula): {by_degree}")
    print(f"genus (point count):    {by_count}")
    print(f"points over F_{q}: {base}")
    print(f"points over F_{q * q}: {quadratic}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drinfeld",
        description="Exact verification of curve and character identities "
                    "for the special linear group of rank one.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run identity checks and report")
    verify.add_argument("--q", type=int, required=True, help="prime power")
    verify.add_argument("--check", default=None,
                        help="comma-separated subset of: " + ",".join(CHECK_NAMES))
    verify.add_argument("--format", choices=("json", "text"), default="text")
    verify.add_argument("--out", default=None, help="write report to this path")
    verify.add_argument("--stable", action="store_true",
                        help="omit elapsed times for byte-stable output")
    verify.add_argument("--allow-slow", action="store_true",
                        help="permit the slow q (13)")
    verify.set_defaults(func=_cmd_verify)

    table = sub.add_parser("table", help="dump class or character tables")
    table.add_argument("--q", type=int, required=True)
    table.add_argument("--what", required=True,
                       choices=("classes", "dl", "brauer", "gg"))
    table.add_argument("--allow-slow", action="store_true")
    table.set_defaults(func=_cmd_table)

    curve = sub.add_parser("curve", help="smoothness, genus, and point counts")
    curve.add_argument("--q", type=int, required=True)
    curve.add_argument("--allow-slow", action="store_true")
    curve.set_defaults(func=_cmd_curve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DrinfeldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
