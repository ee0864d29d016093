"""
Utility functions for data conversion
"""

from fractions import Fraction
from typing import Any, List, Optional, Sequence

from app.errors import OutsideBoxError
from app.models import (
    BoxShape, CheckReport, FactorGrid, GWRow, IndexTuple, InequalityReport, Partition, RingElement,
    ToeplitzPoint,
)
from app.schemas import (
    BoxSchema,
    CheckReportSchema,
    FactorGridSchema,
    GWRowSchema,
    InequalityReportSchema,
    PointSchema,
    RingElementSchema,
    RingTermSchema,
)


def convert_partition_to_model(parts: Sequence[int]) -> Partition:
    """Convert a JSON integer array to a Partition"""
    return Partition(tuple(parts))


def convert_index_to_model(labels: Sequence[Any], box: BoxShape) -> IndexTuple:
    """Convert exact entries ('3/2', '-1/2', 1) to an IndexTuple"""
    doubled = []
    for label in labels:
        twice = 2 * Fraction(str(label))
        if twice.denominator != 1:
            raise OutsideBoxError(f"index entry {label} is not a half-integer")
        doubled.append(int(twice))
    return IndexTuple(tuple(doubled), box)


def _pair(value: Any) -> List[float]:
    value = complex(value)
    return [value.real, value.imag]


def convert_ring_element_to_schema(model: RingElement) -> RingElementSchema:
    """Convert RingElement model to RingElementSchema"""
    return RingElementSchema(
        d=model.box.d,
        n=model.box.n,
        terms=[RingTermSchema(k=k, lambda_=lam.to_list(), coeff=str(coeff)) for (k, lam), coeff in model.items()],
    )


def convert_gw_row_to_schema(model: GWRow) -> GWRowSchema:
    """Convert GWRow model to GWRowSchema"""
    return GWRowSchema(
        d=model.box.d,
        n=model.box.n,
        lambda_=model.lam.to_list(),
        mu=model.mu.to_list(),
        nu=model.nu.to_list(),
        k=model.k,
        value=model.value,
        vi_value=model.vi.value,
        residual=model.vi.residual,
    )


def convert_point_to_schema(model: ToeplitzPoint, summary: Optional[dict] = None) -> PointSchema:
    """Convert ToeplitzPoint model to PointSchema"""
    summary = summary or {}
    return PointSchema(
        d=model.box.d,
        n=model.box.n,
        x=[_pair(v) for v in model.x],
        t=None if model.t is None else complex(model.t).real,
        I=None if model.index is None else model.index.labels(),
        corner_minors=[_pair(v) for v in summary.get("corner_minors", [])],
        stratum=summary.get("stratum", []),
        q=_pair(summary["q"]) if "q" in summary else [],
    )


def convert_grid_to_schema(model: FactorGrid) -> FactorGridSchema:
    """Convert FactorGrid model to FactorGridSchema"""
    return FactorGridSchema(
        d=model.box.d,
        n=model.box.n,
        a=[[i, j, complex(model.a[(i, j)]).real] for i, j in model.cells()],
    )


def convert_report_to_schema(model: CheckReport) -> CheckReportSchema:
    """Convert CheckReport model to CheckReportSchema"""
    return CheckReportSchema(
        check=model.check,
        box=BoxSchema(d=model.box.d, n=model.box.n),
        max_residual=model.max_residual,
        max_abs_deviation=model.max_abs_deviation,
        witness=model.witness,
        tolerance=model.tolerance,
        passed=model.passed,
    )


def convert_inequality_to_schema(model: InequalityReport) -> InequalityReportSchema:
    """Convert InequalityReport model to InequalityReportSchema"""
    return InequalityReportSchema(
        d=model.box.d,
        n=model.box.n,
        cells_checked=model.cells_checked,
        max_excess=model.max_excess,
        violations=model.violations,
        maximizers={repr(lam): [index.labels() for index in indices] for lam, indices in model.maximizers.items()},
        passed=model.passed,
    )
