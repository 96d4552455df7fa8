"""
Command-line interface for curvebounds
Bound queries, h-vector tools, surface constructions, audits and figures

Exit codes: 0 success, 1 unexpected verification mismatch, 2 usage error.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, TextIO

import pandas as pd

from src import __version__
from src.core import audit, bounds, hvectors, liaison, surfaces
from src.core.figures import IMAGE_CHOICES, write_figures
from src.utils.config import Config
from src.utils.exceptions import (
    ConfigurationError,
    CurveBoundsError,
    OutputError,
    ValidationError,
)
from src.utils.logger import setup_logger

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

FORMATS = ("json", "csv", "text")


@dataclass
class CommandResult:
    """
    What a command produced.

    Attributes:
        data: JSON payload
        text: Human-readable rendering
        frame: Table used for CSV output (a one-row frame of `data` otherwise)
        ok: False when a verification found unexpected mismatches
    """
    data: Any
    text: str
    frame: Optional[pd.DataFrame] = None
    ok: bool = True


def _bool_arg(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {value!r}")


def _flatten(data: Dict[str, Any]) -> Dict[str, Any]:
    """Keep scalar fields and JSON-encode the rest, for one-row CSV output"""
    return {
        key: value if isinstance(value, (int, float, str, bool)) or value is None
        else json.dumps(value, separators=(",", ":"))
        for key, value in data.items()
    }


class CurveBoundsCLI:
    """Dispatches parsed arguments to the library and renders the results"""

    def __init__(self, out: Optional[TextIO] = None, err: Optional[TextIO] = None):
        self.out = out or sys.stdout
        self.err = err or sys.stderr

    # ------------------------------------------------------------------
    # Commands
    # ------------------------------------------------------------------

    def cmd_bound(self, args) -> CommandResult:
        report = audit.conjecture_status((args.d1, args.d2))
        v = report.values
        lines = [
            f"B={v.b} B_DG={v.b_dg} B_g={v.b_g} trivial={v.trivial}",
            f"best proved: {report.best_proved}",
        ]
        for entry in report.provenance:
            kind = "conditional" if entry.conditional else "proved"
            strict = ", strict" if entry.strict else ""
            lines.append(f"  {entry.result_id.value}: {entry.bound} ({kind}{strict}; {entry.hypothesis})")
        lines.extend(f"  ! {flag}" for flag in report.flags)
        return CommandResult(data=report.to_dict(), text="\n".join(lines))

    def cmd_hvec(self, args) -> CommandResult:
        if args.hvec_command == "genus":
            h = hvectors.parse_hvector(args.hvector)
            profile = hvectors.genus_with_defect(h, args.defect)
            return CommandResult(data=profile.to_dict(), text=str(profile.genus))

        if args.hvec_command == "extremal":
            h = hvectors.extremal_hvector(args.d)
            g = bounds.g_extremal(args.d)
            data = {"d": args.d, "hvector": h.to_list(), "g_extremal": g}
            return CommandResult(data=data, text=f"{h} (genus {g})")

        frame, has_more = hvectors.enumeration_page(args.d, args.limit, args.offset)
        if has_more:
            self.err.write(
                f"⚠️  Showing rows {args.offset}..{args.offset + len(frame) - 1}; "
                f"more remain (use --offset {args.offset + len(frame)})\n"
            )
        text = "\n".join(
            f"{row.hvector}  genus={row.genus}  reg={row.regularity}"
            for row in frame.itertuples(index=False)
        )
        return CommandResult(data=frame.to_dict(orient="records"), text=text, frame=frame)

    def cmd_surface(self, args) -> CommandResult:
        if args.surface_command == "scroll":
            result = surfaces.scroll_maximize((args.d1, args.d2))
            corners = "; ".join(
                f"({a1},{a2}): {c1} and {c2}"
                for (a1, a2), (c1, c2) in zip(result.maximizers, result.classes)
            )
            return CommandResult(data=result.to_dict(), text=f"max={result.maximum} at {corners}")

        if args.surface_command == "cone":
            inc = surfaces.ConeIncidence.for_pair((args.d1, args.d2), args.vertex1, args.vertex2)
            result = surfaces.cone_bound((args.d1, args.d2), inc)
            text = str(result.bound) + (" (strict)" if result.strict else "")
            return CommandResult(data=result.to_dict(), text=text)

        first, second = surfaces.dp_construction(args.k, args.l)
        meet = surfaces.dp_intersect(first, second)
        data = {
            "L1": first.to_dict(),
            "L2": second.to_dict(),
            "degrees": [first.degree, second.degree],
            "intersection": meet,
            "genera": [surfaces.dp_genus(first), surfaces.dp_genus(second)],
        }
        text = (
            f"L1 = {first}\nL2 = {second}\n"
            f"degrees {first.degree}, {second.degree}; intersection {meet}; "
            f"genera {data['genera'][0]}, {data['genera'][1]}"
        )
        return CommandResult(data=data, text=text)

    def cmd_liaison(self, args) -> CommandResult:
        if args.liaison_command == "residual":
            try:
                f1, f2, f3 = (int(v) for v in args.ci.split(","))
            except ValueError:
                raise ValidationError(f"--ci needs three comma-separated integers, got {args.ci!r}")
            linked = liaison.residual(liaison.CIType(f1, f2, f3), args.d, args.g)
            return CommandResult(
                data=linked.to_dict(), text=f"d_res={linked.d_res} g_res={linked.g_res}"
            )
        if args.liaison_command == "even":
            cert = liaison.even_case_margin((args.d1, args.d2))
            text = f"m={cert.m} k={cert.k} n_max={cert.n_max} margin_lb={cert.margin_lb} B={cert.b_value}"
            return CommandResult(data=cert.to_dict(), text=text)
        obstruction = liaison.odd_degree_obstruction((args.d1, args.d2))
        text = (
            f"m={obstruction.m} B-B_g={obstruction.b_minus_bg} "
            f"residual genus {obstruction.residual_genus_acm}/{obstruction.residual_genus_defect1} "
            f"union genus {obstruction.union_genus}"
        )
        return CommandResult(data=obstruction.to_dict(), text=text)

    def cmd_acm(self, args) -> CommandResult:
        h = hvectors.parse_hvector(args.hvector) if args.hvector else None
        cert = audit.acm_certificate((args.d1, args.d2), h)
        text = (
            f"A={cert.a_value} reg<={cert.reg_upper} (explicit {cert.reg_explicit}) "
            f"argument={cert.argument.value} claim_holds={str(cert.claim_holds).lower()} "
            f"conclusion={cert.conclusion}"
        )
        if cert.special_case:
            text += f" [{cert.special_case}]"
        if cert.tension:
            text += f"\n  tension: {cert.tension}"
        return CommandResult(data=cert.to_dict(), text=text)

    def cmd_verify(self, args) -> CommandResult:
        command = args.verify_command
        if command == "cases":
            summary = audit.verify_cases(args.max)
            text = (
                f"{summary.pairs_checked} pairs, {summary.implications_tested} implications: "
                f"{summary.failures} failures"
            )
            return CommandResult(data=summary.to_dict(), text=text, ok=summary.as_expected)

        if command == "table1":
            summary = audit.verify_table1()
            frame = pd.DataFrame([cell.to_dict() for cell in summary.cells])
            return CommandResult(
                data=summary.to_dict(), text=summary.headline(), frame=frame, ok=summary.as_expected
            )

        if command == "acm-sweep":
            summary = audit.acm_sweep(args.max)
            text = (
                f"{summary.checked} certificates, {len(summary.flagged)} flagged "
                f"(expected d2=8, d1>=10: {'yes' if summary.as_expected else 'no'}), "
                f"{summary.tensions} tensions"
            )
            return CommandResult(data=summary.to_dict(), text=text, ok=summary.as_expected)

        if command == "extremality":
            summary = audit.verify_extremality(args.max)
            if summary.as_expected:
                text = "max genus = g_extremal for all d"
            else:
                text = f"{len(summary.mismatches)} degrees where max genus differs from g_extremal"
            return CommandResult(data=summary.to_dict(), text=text, ok=summary.as_expected)

        checks = audit.worked_fixtures()
        frame = pd.DataFrame([check.to_dict() for check in checks])
        text = "\n".join(
            f"{'ok  ' if c.passed else 'FAIL'} {c.name}: {c.computed} (expected {c.expected})"
            for c in checks
        )
        return CommandResult(
            data=[c.to_dict() for c in checks], text=text, frame=frame,
            ok=all(c.passed for c in checks),
        )

    def cmd_tables(self, args) -> CommandResult:
        if args.table == "1":
            frame = audit.reproduce_table1()
        else:
            frame = bounds.case_table()
        csv_frame = frame.reset_index()
        return CommandResult(
            data=csv_frame.to_dict(orient="records"), text=frame.to_string(), frame=csv_frame
        )

    def cmd_figures(self, args) -> CommandResult:
        d_min, d_max = Config.figure_range()
        d_min = args.d_min if args.d_min is not None else d_min
        d_max = args.d_max if args.d_max is not None else d_max
        if not 4 <= d_min < d_max <= Config.FIGURE_HARD_MAX:
            raise ValidationError(
                f"Figure range must satisfy 4 <= d_min < d_max <= {Config.FIGURE_HARD_MAX}, "
                f"got {d_min}..{d_max}"
            )
        reference = audit.Reference.parse(args.reference)
        prefix = args.out_prefix or str(Config.get_output_dir() / f"figure_{reference.value}")
        grid = audit.make_grid(reference, d_min, d_max, workers=args.workers)
        files = write_figures(grid, prefix, image=args.image)
        data = files.to_dict()
        text = "\n".join(f"wrote {path}" for path in data.values())
        return CommandResult(data=data, text=text)

    # ------------------------------------------------------------------
    # Rendering
    # ------------------------------------------------------------------

    def emit(self, result: CommandResult, fmt: str):
        if fmt == "json":
            self.out.write(json.dumps(result.data, separators=(",", ":")) + "\n")
        elif fmt == "csv":
            frame = result.frame
            if frame is None:
                rows = result.data if isinstance(result.data, list) else [result.data]
                frame = pd.DataFrame([_flatten(row) for row in rows])
            frame.to_csv(self.out, index=False, lineterminator="\n")
        else:
            self.out.write(result.text + "\n")

    def run(self, args) -> int:
        handlers: Dict[str, Callable] = {
            "bound": self.cmd_bound,
            "hvec": self.cmd_hvec,
            "surface": self.cmd_surface,
            "liaison": self.cmd_liaison,
            "acm": self.cmd_acm,
            "verify": self.cmd_verify,
            "tables": self.cmd_tables,
            "figures": self.cmd_figures,
        }
        try:
            result = handlers[args.command](args)
            self.emit(result, args.format)
        except (ValidationError, ConfigurationError, OutputError) as e:
            self.err.write(f"❌ Error: {e}\n")
            return EXIT_USAGE
        except CurveBoundsError as e:
            logger.error(f"{args.command} failed: {e}")
            self.err.write(f"❌ Error: {e}\n")
            return EXIT_MISMATCH

        if not result.ok:
            self.err.write("⚠️  Verification found unexpected mismatches\n")
            return EXIT_MISMATCH
        return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for every subcommand"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="Output format")

    parser = argparse.ArgumentParser(
        prog="curvebounds",
        description="Intersection bounds for curves in P^4",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    bound = commands.add_parser("bound", parents=[common], help="All bounds for a degree pair")
    bound.add_argument("--d1", type=int, required=True)
    bound.add_argument("--d2", type=int, required=True)

    hvec = commands.add_parser("hvec", help="h-vector tools")
    hvec_commands = hvec.add_subparsers(dest="hvec_command", required=True)
    genus = hvec_commands.add_parser("genus", parents=[common], help="Genus of an h-vector")
    genus.add_argument("hvector", help="Comma-separated entries, e.g. 1,3,5,4,3")
    genus.add_argument("--defect", type=int, default=0, help="Rao defect k")
    enumerate_ = hvec_commands.add_parser("enumerate", parents=[common], help="Admissible h-vectors")
    enumerate_.add_argument("--d", type=int, required=True)
    enumerate_.add_argument("--limit", type=int, default=Config.DEFAULT_ENUM_PAGE,
                            help=f"Rows to list (at most {Config.ENUM_PAGE_MAX})")
    enumerate_.add_argument("--offset", type=int, default=0, help="Rows to skip first")
    extremal = hvec_commands.add_parser("extremal", parents=[common], help="Extremal h-vector")
    extremal.add_argument("--d", type=int, required=True)

    surface = commands.add_parser("surface", help="Constructions on cubic and quartic surfaces")
    surface_commands = surface.add_subparsers(dest="surface_command", required=True)
    scroll = surface_commands.add_parser("scroll", parents=[common], help="Cubic scroll maximum")
    scroll.add_argument("--d1", type=int, required=True)
    scroll.add_argument("--d2", type=int, required=True)
    cone = surface_commands.add_parser("cone", parents=[common], help="Cubic cone bound")
    cone.add_argument("--d1", type=int, required=True)
    cone.add_argument("--d2", type=int, required=True)
    cone.add_argument("--vertex1", type=_bool_arg, default=True)
    cone.add_argument("--vertex2", type=_bool_arg, default=True)
    delpezzo = surface_commands.add_parser("delpezzo", parents=[common], help="Del Pezzo construction")
    delpezzo.add_argument("--k", type=int, required=True)
    delpezzo.add_argument("--l", type=int, required=True)

    link = commands.add_parser("liaison", help="Linkage numerics")
    link_commands = link.add_subparsers(dest="liaison_command", required=True)
    residual = link_commands.add_parser("residual", parents=[common], help="Residual degree and genus")
    residual.add_argument("--ci", required=True, help="Hypersurface degrees, e.g. 2,2,4")
    residual.add_argument("--d", type=int, required=True)
    residual.add_argument("--g", type=int, required=True)
    for name in ("even", "odd"):
        sub = link_commands.add_parser(name, parents=[common], help=f"{name.title()}-case certificate")
        sub.add_argument("--d1", type=int, required=True)
        sub.add_argument("--d2", type=int, required=True)

    acm = commands.add_parser("acm", parents=[common], help="Regularity certificate, second curve ACM")
    acm.add_argument("--d1", type=int, required=True)
    acm.add_argument("--d2", type=int, required=True)
    acm.add_argument("--hvector", default=None)

    verify = commands.add_parser("verify", help="Audits")
    verify_commands = verify.add_subparsers(dest="verify_command", required=True)
    cases = verify_commands.add_parser("cases", parents=[common], help="Case identity")
    cases.add_argument("--max", type=int, default=200)
    verify_commands.add_parser("table1", parents=[common], help="Table 1 comparison")
    sweep = verify_commands.add_parser("acm-sweep", parents=[common], help="ACM certificates")
    sweep.add_argument("--max", type=int, default=100)
    extremality = verify_commands.add_parser("extremality", parents=[common], help="Genus maximum")
    extremality.add_argument("--max", type=int, default=80)
    verify_commands.add_parser("fixtures", parents=[common], help="Worked genus examples")

    tables = commands.add_parser("tables", parents=[common], help="Reproduce a table")
    tables.add_argument("table", choices=["1", "3"])

    figures = commands.add_parser("figures", parents=[common], help="Sign grid CSV and images")
    figures.add_argument("--reference", default="bdg", choices=["bdg", "b"])
    figures.add_argument("--d-min", type=int, default=None)
    figures.add_argument("--d-max", type=int, default=None)
    figures.add_argument("--out-prefix", default=None)
    figures.add_argument("--workers", type=int, default=None)
    figures.add_argument("--image", default="all", choices=IMAGE_CHOICES,
                         help="Images written next to the CSV: all, none, pgm (magnitude) or ppm (sign)")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    setup_logger("src")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    errors = Config.validate()
    if errors:
        for error in errors:
            sys.stderr.write(f"❌ Configuration: {error}\n")
        return EXIT_USAGE

    return CurveBoundsCLI().run(args)


if __name__ == "__main__":
    sys.exit(main())
