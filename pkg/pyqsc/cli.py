""" Command line interface, every subcommand prints one ReportRecord
"""
import argparse
import logging
import pathlib
import sys
from typing import Dict, List, Optional

from . import errors, lib
from .codes.distance import DistanceMethod
from .qsc.families import FAMILIES
from .report import OutputFormat, ReportRecord
from .utils import parse_int_list

logger = logging.getLogger(__name__)


def _int_list(text: str) -> List[int]:
    try:
        return list(parse_int_list(text))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.Json.value,
        help="output format (default: json)",
    )
    common.add_argument("--out", type=pathlib.Path, help="write the report to this file")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="pyqsc",
        description="Sextic cyclotomic codes and quantum synchronizable codes",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    classes = commands.add_parser("classes", parents=[common], help="sextic cyclotomic classes")
    classes.add_argument("--n", type=int, required=True)
    classes.add_argument("--gamma", type=int)

    factor = commands.add_parser("factor", parents=[common], help="factors of x^n - 1")
    factor.add_argument("--n", type=int, required=True)
    factor.add_argument("--q", type=int, required=True)
    factor.add_argument("--gamma", type=int)

    method_choices = [m.name.lower() for m in DistanceMethod]
    code = commands.add_parser("code", parents=[common], help="a code, its dual and distances")
    code.add_argument("--n", type=int, required=True)
    code.add_argument("--q", type=int, required=True)
    code.add_argument("--classes", type=_int_list, required=True, help="e.g. 0,1")
    code.add_argument("--drop", type=_int_list, default=[], help="coset representatives")
    code.add_argument("--gamma", type=int)
    code.add_argument("--no-distance", action="store_true")
    code.add_argument("--method", choices=method_choices, default="auto")

    table1 = commands.add_parser("table1", parents=[common], help="table of D and C codes")
    table1.add_argument("--method", choices=method_choices, default="auto")

    qsc = commands.add_parser("qsc", parents=[common], help="family C or D parameters")
    qsc.add_argument("--n", type=int, required=True)
    qsc.add_argument("--q", type=int, required=True)
    qsc.add_argument("--family", choices=FAMILIES, required=True)
    qsc.add_argument("--z", type=int, required=True)
    qsc.add_argument("--cl", type=int, default=0)
    qsc.add_argument("--cr", type=int, default=0)
    qsc.add_argument("--class-index", type=int, default=1)
    qsc.add_argument("--gamma", type=int)
    qsc.add_argument("--with-distance", action="store_true")

    sync = commands.add_parser("sync-sim", parents=[common], help="shift recovery trials")
    sync.add_argument("--n", type=int, required=True)
    sync.add_argument("--q", type=int, required=True)
    sync.add_argument("--outer", help="outer code, e.g. classes=1,drop=3")
    sync.add_argument("--inner", help="inner code, e.g. classes=1")
    sync.add_argument("--delta", type=int, required=True)
    sync.add_argument("--cl", type=int, default=1)
    sync.add_argument("--cr", type=int, default=1)
    sync.add_argument("--trials", type=int, default=1)
    sync.add_argument("--seed", type=int, default=0)
    sync.add_argument("--gamma", type=int)

    enumerate_ = commands.add_parser("enumerate", parents=[common], help="valid (n, q) pairs")
    enumerate_.add_argument("--n-max", type=int, required=True)
    enumerate_.add_argument("--q-max", type=int, required=True)

    return parser


def _inputs(args: argparse.Namespace) -> Dict:
    ignored = {"command", "format", "out", "verbose"}
    return {
        key: (str(value) if isinstance(value, pathlib.Path) else value)
        for key, value in sorted(vars(args).items())
        if key not in ignored
    }


def _dispatch(args: argparse.Namespace) -> ReportRecord:
    command = args.command
    if command == "classes":
        return lib.classes_report(args.n, args.gamma)
    if command == "factor":
        return lib.factor_report(args.n, args.q, args.gamma)
    if command == "code":
        return lib.code_report(
            args.n,
            args.q,
            args.classes,
            args.drop,
            gamma=args.gamma,
            with_distance=not args.no_distance,
            method=DistanceMethod.from_str(args.method),
        )
    if command == "table1":
        return lib.table1_report(DistanceMethod.from_str(args.method))
    if command == "qsc":
        return lib.qsc_report(
            args.n,
            args.q,
            args.family,
            args.z,
            c_l=args.cl,
            c_r=args.cr,
            class_index=args.class_index,
            gamma=args.gamma,
            with_distance=args.with_distance,
        )
    if command == "sync-sim":
        return lib.sync_report(
            args.n,
            args.q,
            args.delta,
            args.cl,
            args.cr,
            trials=args.trials,
            seed=args.seed,
            outer=args.outer,
            inner=args.inner,
            gamma=args.gamma,
        )
    if command == "enumerate":
        return lib.enumerate_report(args.n_max, args.q_max)
    raise ValueError(f"Unknown command {command}")


def run(args: argparse.Namespace) -> ReportRecord:
    """Runs a parsed command, library errors become error records"""
    try:
        return _dispatch(args)
    except errors.PyqscError as e:
        logger.error("%s failed: %s", args.command, e)
        return ReportRecord.from_error(args.command, _inputs(args), e)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        record = run(args)
    except ValueError as e:
        parser.error(str(e))

    text = record.serialize(OutputFormat.from_str(args.format))
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if record.ok else 1


if __name__ == "__main__":
    sys.exit(main())
