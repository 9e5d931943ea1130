"""
Command line front end.

    orbitlab analyze --h 3,3,4,5,5 [--lambda 1,2,3,4,5] [--emit gkm.dot,report.json] [--out DIR]
    orbitlab analyze --n 5
    orbitlab batch --n 4..7 [--out DIR]
    orbitlab profiles --n 6

Exit status is 0 on success, 1 on malformed input and 2 when the orbit space
model does not apply to the profile.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

from .batch.all_profiles import parse_range, profiles_in_range, run_batch, write_batch
from .common.common import EmitTargets, OrbitLabError, OutOfRange, UnsupportedProfile
from .gkm import build_gkm, export_dot, export_json
from .helpers.default_report import default_report
from .hessenberg import HFun, enumerate_complexity_one
from .orbitspace import OrbitReport, export_nerve_dot, orbit_space_report, report_to_json
from .permutohedron import Spectrum, polytope_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_UNSUPPORTED = 2


class _Parser(argparse.ArgumentParser):
    """Report malformed flags with exit status 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    """Settings of one ``analyze`` run.
    Attributes:
        profiles: Hessenberg functions to analyse.
        spectrum: Optional simple spectrum; defaults to (1, ..., n).
        emit: Artifact file names to write.
        out: Output directory.
    """

    profiles: list[HFun]
    spectrum: Optional[Spectrum] = None
    emit: list[str] = field(default_factory=lambda: [EmitTargets.REPORT_TXT])
    out: Path = Path(".")

    def __post_init__(self):
        if not self.profiles:
            raise OutOfRange("No Hessenberg function to analyse.")
        if not self.emit:
            raise OutOfRange("At least one emit target is required.")
        unknown = [t for t in self.emit if t not in EmitTargets.all()]
        if unknown:
            raise OutOfRange(
                f"Unknown emit target(s) {', '.join(unknown)}; "
                f"choose from {', '.join(EmitTargets.all())}."
            )
        self.emit = sorted(set(self.emit), key=EmitTargets.all().index)
        self.out = Path(self.out)

    def target_dir(self, h: HFun) -> Path:
        """Per-profile subdirectory when several profiles are analysed."""
        return self.out if len(self.profiles) == 1 else self.out / h.word


def _gkm_dot(report: OrbitReport) -> str:
    return export_dot(build_gkm(report.h, report.spectrum))


def _gkm_json(report: OrbitReport) -> str:
    return export_json(build_gkm(report.h, report.spectrum))


_EMITTERS: dict[str, Callable[[OrbitReport], str]] = {
    EmitTargets.REPORT_TXT: lambda r: default_report(r).build(),
    EmitTargets.REPORT_JSON: report_to_json,
    EmitTargets.GKM_DOT: _gkm_dot,
    EmitTargets.GKM_JSON: _gkm_json,
    EmitTargets.NERVE_DOT: lambda r: export_nerve_dot(r.nerve),
    EmitTargets.POLYTOPE_CSV: lambda r: polytope_csv(r.h.n, r.spectrum),
}


def _split_targets(values: Optional[list[str]]) -> list[str]:
    if not values:
        return [EmitTargets.REPORT_TXT]
    return [t.strip() for v in values for t in v.split(",") if t.strip()]


def cmd_analyze(config: RunConfig) -> int:
    status = EXIT_OK
    for h in config.profiles:
        try:
            report = orbit_space_report(h, config.spectrum)
        except UnsupportedProfile as e:
            print(f"orbitlab: h={h}: {e.message}", file=sys.stderr)
            status = EXIT_UNSUPPORTED
            continue
        target = config.target_dir(h)
        target.mkdir(parents=True, exist_ok=True)
        for name in config.emit:
            (target / name).write_text(_EMITTERS[name](report), encoding="utf-8")
            logger.info("wrote %s", target / name)
        print(default_report(report).build(), end="")
    return status


def cmd_batch(n_range: str, out: Path) -> int:
    a, b = parse_range(n_range)
    rows = run_batch(profiles_in_range(a, b))
    path = write_batch(rows, Path(out))
    print(f"wrote {path}")
    return EXIT_OK


def cmd_profiles(n: int) -> int:
    for h in enumerate_complexity_one(n):
        print(f"{h}\ti0={h.i0}\tN={h.N}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="orbitlab", description="Orbit spaces of complexity-one Hessenberg actions."
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    analyze = sub.add_parser("analyze", help="analyse one profile or all profiles of a size")
    which = analyze.add_mutually_exclusive_group(required=True)
    which.add_argument("--h", dest="h", help="Hessenberg function, e.g. 3,3,4,5,5")
    which.add_argument("--n", dest="n", type=int, help="all complexity-one profiles of size n")
    analyze.add_argument("--lambda", dest="spectrum", help="simple spectrum, e.g. 1,2,3,4")
    analyze.add_argument(
        "--emit",
        action="append",
        help=f"artifacts to write (repeatable or comma separated): {', '.join(EmitTargets.all())}",
    )
    analyze.add_argument("--out", type=Path, default=Path("."), help="output directory")

    batch = sub.add_parser("batch", help="summary table over a size range")
    batch.add_argument("--n", dest="n_range", required=True, help="size range a..b")
    batch.add_argument("--out", type=Path, default=Path("."), help="output directory")

    profiles = sub.add_parser("profiles", help="list the complexity-one profiles of a size")
    profiles.add_argument("--n", dest="n", type=int, required=True)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        if args.command == "analyze":
            profiles = [HFun.from_string(args.h)] if args.h else enumerate_complexity_one(args.n)
            config = RunConfig(
                profiles=profiles,
                spectrum=Spectrum.from_string(args.spectrum) if args.spectrum else None,
                emit=_split_targets(args.emit),
                out=args.out,
            )
            return cmd_analyze(config)
        if args.command == "batch":
            return cmd_batch(args.n_range, args.out)
        return cmd_profiles(args.n)
    except UnsupportedProfile as e:
        print(f"orbitlab: {e.message}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except OrbitLabError as e:
        print(f"orbitlab: {e.code}: {e.message}", file=sys.stderr)
        return EXIT_MALFORMED
    except EnvironmentError as e:
        print(f"orbitlab: {e}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
