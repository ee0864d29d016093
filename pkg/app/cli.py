"""
Command-line interface: tables, checks, points and factorizations as JSON or CSV
"""

import argparse
import csv
import json
import logging
import sys
from typing import Any, List, Optional, Sequence

from app.config import configure
from app.errors import PrecisionError, QGrassError
from app.models import BoxShape, Partition
from app.schemas import FactorizeResponse
from app.services import CHECK_ALIASES, toolkit_service
from app.utils import (
    convert_grid_to_schema,
    convert_gw_row_to_schema,
    convert_index_to_model,
    convert_inequality_to_schema,
    convert_point_to_schema,
    convert_report_to_schema,
    convert_ring_element_to_schema,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

GW_COLUMNS = ["d", "n", "lambda", "mu", "nu", "k", "value", "vi_value", "residual"]


def _emit_error(kind: str, detail: str, **extra: Any) -> None:
    print(json.dumps(dict({"error": kind, "detail": detail}, **extra)), file=sys.stderr)


class JsonArgumentParser(argparse.ArgumentParser):
    """ArgumentParser reporting usage errors as JSON on stderr"""

    def error(self, message: str):
        _emit_error("UsageError", message, usage=self.format_usage().strip())
        sys.exit(EXIT_USAGE)


def parse_partition(text: str) -> Partition:
    """'2,1' -> (2, 1); '' -> ()"""
    text = text.strip().strip("[]()")
    if not text:
        return Partition()
    try:
        return Partition(tuple(int(p) for p in text.split(",") if p.strip()))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid partition '{text}': {e}")


def _index_labels(text: str) -> List[str]:
    return [p.strip() for p in text.strip().strip("[]()").split(",") if p.strip()]


def build_parser() -> JsonArgumentParser:
    parser = JsonArgumentParser(prog="qgrass", description="Quantum cohomology of Grassmannians toolkit")
    parser.add_argument("--precision", default=None, help="double or extended:<bits>")
    parser.add_argument("--tol", dest="rounding_tol", type=float, default=None,
                        help="rounding residual threshold for Vafa-Intriligator sums")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = parser.add_subparsers(dest="command", required=True)

    def box_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("gw-table", help="all nonzero invariants with both engines")
    box_args(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--all", action="store_true", help="include vanishing invariants")

    p = sub.add_parser("verify", help="run a harness check")
    p.add_argument("--check", required=True, choices=sorted(CHECK_ALIASES))
    box_args(p)
    p.add_argument("--tol", dest="check_tol", type=float, default=None)
    p.add_argument("--t", type=float, default=1.0)

    p = sub.add_parser("point", help="emit u_n(t zeta^I)")
    box_args(p)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--index", default=None, help="comma separated entries, e.g. -1/2,1/2")

    p = sub.add_parser("factorize", help="factor u_{>0}(t)")
    box_args(p)
    p.add_argument("--t", type=float, default=1.0)

    p = sub.add_parser("inequality", help="Schur value inequality scan")
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("pieri", help="expand X_k * s_lambda")
    box_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_partition, default=Partition())
    return parser


def _print(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


def _gw_table(args) -> int:
    rows = toolkit_service.gw_table(BoxShape(args.d, args.n), nonzero_only=not args.all)
    schemas = [convert_gw_row_to_schema(row).model_dump(by_alias=True) for row in rows]
    if args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=GW_COLUMNS)
        writer.writeheader()
        for row in schemas:
            writer.writerow({key: (json.dumps(v) if isinstance(v, list) else v) for key, v in row.items()})
    else:
        _print(schemas)
    disagreements = [row for row in rows if not row.agrees]
    if disagreements:
        _emit_error("EngineMismatch", f"{len(disagreements)} invariants disagree between engines")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _verify(args) -> int:
    report = toolkit_service.run_check(args.check, BoxShape(args.d, args.n), args.check_tol, args.t)
    _print(convert_report_to_schema(report).model_dump())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _point(args) -> int:
    box = BoxShape(args.d, args.n)
    index = None if args.index is None else convert_index_to_model(_index_labels(args.index), box)
    u, summary = toolkit_service.point(box, args.t, index)
    _print(convert_point_to_schema(u, summary).model_dump())
    return EXIT_OK


def _factorize(args) -> int:
    grid, error, deviation = toolkit_service.factorize(BoxShape(args.d, args.n), args.t)
    response = FactorizeResponse(grid=convert_grid_to_schema(grid), round_trip_error=error,
                                 closed_form_deviation=deviation)
    _print(response.model_dump())
    return EXIT_OK


def _inequality(args) -> int:
    reports = toolkit_service.inequality(args.n_max)
    _print([convert_inequality_to_schema(r).model_dump() for r in reports])
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def _pieri(args) -> int:
    element = toolkit_service.pieri(BoxShape(args.d, args.n), args.lam, args.k)
    _print(convert_ring_element_to_schema(element).model_dump(by_alias=True))
    return EXIT_OK


COMMANDS = {
    "gw-table": _gw_table,
    "verify": _verify,
    "point": _point,
    "factorize": _factorize,
    "inequality": _inequality,
    "pieri": _pieri,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one subcommand and return the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )

    overrides = {}
    if args.precision is not None:
        overrides["precision"] = args.precision
    if args.rounding_tol is not None:
        overrides["rounding_threshold"] = args.rounding_tol
    try:
        if overrides:
            configure(**overrides)
        return COMMANDS[args.command](args)
    except PrecisionError as e:
        _emit_error(type(e).__name__, str(e), residual=e.residual, hint=e.hint)
        return EXIT_USAGE
    except (QGrassError, ValueError) as e:
        logger.debug("command failed", exc_info=True)
        _emit_error(type(e).__name__, str(e))
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
