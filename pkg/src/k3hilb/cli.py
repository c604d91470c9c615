"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (a JSON object with keys
``error`` and ``message`` is written to stdout), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import Assumptions, ClassificationReport, classify_curve
from .cohomology import cohomology
from .cone import extremal_rays, is_effective, is_nef, surface_model
from .errors import K3HilbError
from .existence import mori_exists, scan_nonreduced
from .lattice import AMBIENTS, P3, V4, DivisorClass, PicardLattice, degree, square
from .pell import fundamental_solution, sqrt_continued_fraction
from .quadform import represents, verify_no_special_curves

FAMILIES = ("rational", "elliptic", "line", "none")
REPORT_COLUMNS = (
    "ambient", "family", "e", "s", "curve_class", "d", "g", "D_class",
    "D_effective", "D_nef", "h1_SD", "status", "rule", "dim_W", "h0_NCV",
)  # fmt: skip


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _class_arg(text: str) -> DivisorClass:
    try:
        return DivisorClass.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _tsv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ",".join(str(v) for v in value)
    return str(value)


def reports_tsv(reports: list[ClassificationReport]) -> str:
    lines = ["\t".join(REPORT_COLUMNS)]
    for report in reports:
        row = report.to_dict()
        lines.append("\t".join(_tsv_cell(row[c]) for c in REPORT_COLUMNS))
    return "\n".join(lines) + "\n"


def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    out = []
    for key in sorted(obj):
        value = obj[key]
        if isinstance(value, dict):
            out.append(f"{pad}{key}:")
            out.append(_pretty(value, indent + 1).rstrip("\n"))
        else:
            out.append(f"{pad}{key}: {_tsv_cell(value)}")
    return "\n".join(out) + "\n"


def table1_tsv() -> str:
    """Classes ``x h - y E`` of the second (-2)-curve for ``e = 2..9``."""
    lines = ["e\t(x,y)\td(E')"]
    for e in range(2, 10):
        surface = surface_model("rational", e)
        other = extremal_rays(surface).ray2.divisor
        lines.append(f"{e}\t({other.x},{-other.y})\t{degree(surface.lattice, other)}")
    return "\n".join(lines) + "\n"


def _surface(args):
    return surface_model(args.family, args.e, args.s)


def _assumptions(args) -> Assumptions:
    return Assumptions(args.assume_gg, args.assume_pi)


def cmd_pell(args) -> str:
    a0, period = sqrt_continued_fraction(args.N)
    sol = fundamental_solution(args.N)
    return dump_json({"N": sol.N, "X": sol.X, "Y": sol.Y, "a0": a0, "period": period})


def cmd_represents(args) -> str:
    lattice = PicardLattice(args.e, args.s)
    result = represents(lattice, args.n)
    witness = None if result.witness is None else list(result.witness)
    return dump_json(
        {"e": args.e, "s": args.s, "n": args.n,
         "representable": result.representable, "witness": witness}
    )  # fmt: skip


def cmd_rays(args) -> str:
    surface = _surface(args)
    lattice = surface.lattice
    rays = []
    for ray in extremal_rays(surface).rays:
        entry = {"kind": ray.kind.value, "class": None, "degree": None, "square": None}
        if ray.divisor is not None:
            entry.update(
                {"class": list(ray.divisor), "degree": degree(lattice, ray.divisor),
                 "square": square(lattice, ray.divisor)}
            )  # fmt: skip
        rays.append(entry)
    return dump_json({"family": args.family, "e": lattice.e, "s": lattice.s, "rays": rays})


def cmd_table1(args) -> str:
    return table1_tsv()


def cmd_coh(args) -> str:
    surface = _surface(args)
    d = args.divisor
    triple = cohomology(surface, d)
    return dump_json(
        {"class": list(d), "h0": triple.h0, "h1": triple.h1, "h2": triple.h2,
         "effective": is_effective(surface, d), "nef": is_nef(surface, d)}
    )  # fmt: skip


def _emit_reports(reports, fmt: str, single: bool) -> str:
    if fmt == "tsv":
        return reports_tsv(reports)
    dicts = [r.to_dict() for r in reports]
    if fmt == "pretty":
        return "\n".join(_pretty(d) for d in dicts)
    return dump_json(dicts[0] if single else dicts)


def cmd_classify(args) -> str:
    ambient = AMBIENTS[args.ambient]
    report = classify_curve(ambient, _surface(args), args.divisor, _assumptions(args))
    return _emit_reports([report], args.format, single=True)


def cmd_exists(args) -> str:
    return dump_json({"d": args.d, "g": args.g, "exists": mori_exists(args.d, args.g)})


def cmd_scan(args) -> str:
    reports = scan_nonreduced(AMBIENTS[args.ambient], _surface(args), args.dmax, _assumptions(args))
    return _emit_reports(reports, args.format, single=False)


def worked_examples() -> dict:
    def summary(report: ClassificationReport) -> dict:
        return {
            "class": list(report.curve_class), "D_class": list(report.D_class),
            "d": report.d, "g": report.g, "dim": report.dim_W, "h1": report.h1_SD,
            "h0_NCV": report.h0_NCV, "status": report.status.value,
        }  # fmt: skip

    conic = surface_model("rational", 2)
    cubic = surface_model("elliptic", 3)
    none = surface_model("none", 6, 2)
    gg = Assumptions(normal_bundle_globally_generated=True)
    family = []
    for n in range(2, 11):
        report = classify_curve(V4, conic, DivisorClass(n, n), gg)
        row = summary(report)
        row["n"] = n
        row["D_dot_rays"] = list(report.D_dot_rays)
        family.append(row)
    return {
        "conic_in_quartic_threefold": summary(classify_curve(V4, conic, DivisorClass(2, 2), gg)),
        "plane_cubic_in_p3": summary(classify_curve(P3, cubic, DivisorClass(4, 2))),
        "conic_multiples_in_quartic_threefold": family,
        "no_special_curves": {
            "lattice": [4, 6, 2],
            "verified": verify_no_special_curves(none.lattice),
            "curve": summary(classify_curve(V4, none, DivisorClass(1, 1))),
        },
    }


def cmd_examples(args) -> str:
    return dump_json(worked_examples())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3hilb",
        description="Divisor positivity on rank-2 quartic K3 lattices and "
        "Hilbert-scheme status of curves on them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def surface_args(p, family_required=True):
        p.add_argument("--family", choices=FAMILIES, required=family_required)
        p.add_argument("--e", type=int, required=True)
        p.add_argument("--s", type=int, default=None, help="G^2, required for --family none")

    def assumption_args(p):
        p.add_argument("--assume-gg", action="store_true",
                       help="normal bundle of the (-2)-curve in V4 is globally generated")
        p.add_argument("--assume-pi", action="store_true",
                       help="pi-map of the elliptic curve in V4 is not surjective")  # fmt: skip

    p = sub.add_parser("pell", help="fundamental solution of X^2 - N Y^2 = 1")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("represents", help="does some nonzero class have square n")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_represents)

    p = sub.add_parser("rays", help="extremal rays of the Mori cone")
    surface_args(p)
    p.set_defaults(func=cmd_rays)

    p = sub.add_parser("table1", help="second (-2)-curve for rational generators of degree 2..9")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("coh", help="h^0, h^1, h^2 of a divisor class")
    surface_args(p)
    p.add_argument("--class", dest="divisor", type=_class_arg, required=True, metavar="X,Y")
    p.set_defaults(func=cmd_coh)

    p = sub.add_parser("classify", help="Hilbert-scheme status of a curve class")
    p.add_argument("--ambient", choices=sorted(AMBIENTS), required=True)
    surface_args(p)
    p.add_argument("--class", dest="divisor", type=_class_arg, required=True, metavar="A,B")
    assumption_args(p)
    p.add_argument("--format", choices=("json", "tsv", "pretty"), default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("exists", help="Mori's existence criterion for (d, g)")
    p.add_argument("d", type=int)
    p.add_argument("g", type=int)
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("scan", help="generically non-reduced families up to a degree")
    p.add_argument("--ambient", choices=sorted(AMBIENTS), required=True)
    surface_args(p)
    p.add_argument("--dmax", type=int, required=True)
    assumption_args(p)
    p.add_argument("--format", choices=("json", "tsv", "pretty"), default="json")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("examples", help="reproduce the worked examples")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        output = args.func(args)
    except K3HilbError as exc:
        sys.stdout.write(dump_json({"error": exc.code, "message": str(exc)}))
        return 1
    except ValueError as exc:
        sys.stdout.write(dump_json({"error": "invalid-argument", "message": str(exc)}))
        return 1
    sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
