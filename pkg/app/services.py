"""
Business logic for the quantum Grassmannian toolkit
"""

import logging
from typing import Any, Dict, List, Optional, Tuple

from app.config import get_settings
from app.errors import QGrassError
from app.gwcalc import vi_invariant
from app.models import (
    BoxShape, CheckReport, FactorGrid, GWRow, IndexTuple, InequalityReport, OrthogonalityCheck, Partition,
    RingElement, ToeplitzPoint,
)
from app.partitions import enumerate_box, poincare_dual
from app.qring import admissible_triples, multiply, pieri_multiply, schubert, structure_constant
from app.rootdata import base_index, enumerate_index_tuples
from app.toeplitz import point_from_index, point_summary
from app.totalpos import closed_form_grid, factor_params, max_grid_deviation, positive_point, round_trip_error
from app.verify import (
    check_orthogonality, inequality_scan_range, lr_coefficient, schur_duality_residual, spectral_check,
)

logger = logging.getLogger(__name__)

# accepted spellings of harness checks
CHECK_ALIASES: Dict[str, str] = {
    "littlewood": "littlewood",
    "orthogonality1": "prop1",
    "orthogonality2": "prop2",
    "orthogonality3": "prop3",
    "prop1": "prop1",
    "prop2": "prop2",
    "prop3": "prop3",
    "row-char": "row_char",
    "row_char": "row_char",
    "row-pd": "row_pd",
    "row_pd": "row_pd",
    "duality": "duality",
    "spectral": "spectral",
    "oracle": "oracle",
    "classical": "classical",
}


class GrassmannianService:
    """Service for toolkit operations"""

    def __init__(self):
        self.tables: Dict[Tuple[BoxShape, str, float], List[GWRow]] = {}

    def gw_invariant(self, box: BoxShape, lam: Partition, mu: Partition, nu: Partition, k: int) -> GWRow:
        """Compute one invariant with both engines"""
        value = structure_constant(lam, mu, nu, k, box)
        vi = vi_invariant(lam, mu, nu, k, box)
        return GWRow(box, lam, mu, nu, k, value, vi)

    def gw_table(self, box: BoxShape, nonzero_only: bool = True) -> List[GWRow]:
        """All admissible invariants of a box, both engines"""
        settings = get_settings()
        key = (box, settings.precision, settings.rounding_threshold)
        if key not in self.tables:
            logger.info("computing Gromov-Witten table for %s", box)
            self.tables[key] = [self.gw_invariant(box, lam, mu, nu, k) for lam, mu, nu, k in admissible_triples(box)]
            mismatches = [row for row in self.tables[key] if not row.agrees]
            if mismatches:
                logger.warning("%d invariants disagree between engines in %s", len(mismatches), box)
        rows = self.tables[key]
        if nonzero_only:
            rows = [row for row in rows if row.value or row.vi.value]
        return rows

    def pieri(self, box: BoxShape, lam: Partition, k: int) -> RingElement:
        return pieri_multiply(schubert(lam, box), k)

    def multiply(self, box: BoxShape, lam: Partition, mu: Partition) -> RingElement:
        return multiply(schubert(lam, box), schubert(mu, box))

    def point(self, box: BoxShape, t: float, index: Optional[IndexTuple] = None) -> Tuple[ToeplitzPoint, Dict[str, Any]]:
        """u_n(t zeta^I) with corner minors, stratum and q"""
        u = point_from_index(t, index or base_index(box))
        return u, point_summary(u)

    def factorize(self, box: BoxShape, t: float) -> Tuple[FactorGrid, float, float]:
        """Factor u_{>0}(t); returns grid, round-trip error and distance to the closed form"""
        u = positive_point(t, box)
        grid = factor_params(u)
        return grid, round_trip_error(u, grid), max_grid_deviation(grid, closed_form_grid(t, box))

    def run_check(self, name: str, box: BoxShape, tol: Optional[float] = None, t: Any = 1) -> CheckReport:
        """Run a harness check by name"""
        key = CHECK_ALIASES.get(name.lower())
        if key is None:
            raise QGrassError(f"unknown check '{name}', expected one of {sorted(CHECK_ALIASES)}")
        if key in {c.value for c in OrthogonalityCheck}:
            kwargs = {} if tol is None else {"tol": tol}
            return check_orthogonality(box, OrthogonalityCheck(key), t=t, **kwargs)
        if key == "duality":
            return self._duality(box, tol)
        if key == "spectral":
            return self._spectral(box, tol)
        if key == "oracle":
            return self._oracle(box, tol)
        return self._classical(box)

    def _duality(self, box: BoxShape, tol: Optional[float]) -> CheckReport:
        report = CheckReport("duality", box, 0.0, tolerance=tol or 1e-9)
        for lam in enumerate_box(box):
            for index in enumerate_index_tuples(box):
                residual = schur_duality_residual(lam, index)
                if residual >= report.max_residual:
                    report.max_residual = residual
                    report.witness = {"lambda": lam.to_list(), "I": index.labels()}
        report.max_abs_deviation = report.max_residual
        return report

    def _spectral(self, box: BoxShape, tol: Optional[float]) -> CheckReport:
        reports = [spectral_check(lam, box) for lam in enumerate_box(box)]
        worst = max(reports, key=lambda r: r.max_residual)
        if tol is not None:
            worst.tolerance = tol
        return worst

    def _oracle(self, box: BoxShape, tol: Optional[float]) -> CheckReport:
        tol = get_settings().rounding_threshold if tol is None else tol
        rows = self.gw_table(box, nonzero_only=False)
        report = CheckReport("oracle", box, 0.0, tolerance=tol)
        for row in rows:
            residual = row.vi.residual if row.agrees else float("inf")
            if residual >= report.max_residual:
                report.max_residual = residual
                report.witness = {"lambda": row.lam.to_list(), "mu": row.mu.to_list(), "nu": row.nu.to_list(),
                                  "k": row.k, "value": row.value, "vi_value": row.vi.value}
            if row.value < 0:
                report.max_residual = float("inf")
                report.witness = {"negative": [row.lam.to_list(), row.mu.to_list(), row.nu.to_list(), row.k]}
        report.max_abs_deviation = max((row.vi.residual for row in rows), default=0.0)
        return report

    def _classical(self, box: BoxShape) -> CheckReport:
        """k = 0 structure constants against the tableau count"""
        report = CheckReport("classical", box, 0.0, tolerance=0.5)
        for lam, mu, nu, k in admissible_triples(box):
            if k:
                continue
            expected = lr_coefficient(lam, mu, poincare_dual(nu, box))
            gap = abs(structure_constant(lam, mu, nu, 0, box) - expected)
            if gap > report.max_residual:
                report.max_residual = float(gap)
                report.witness = {"lambda": lam.to_list(), "mu": mu.to_list(), "nu": nu.to_list(), "lr": expected}
        report.max_abs_deviation = report.max_residual
        return report

    def inequality(self, n_max: int) -> List[InequalityReport]:
        logger.info("scanning the Schur value inequality up to n = %d", n_max)
        return inequality_scan_range(n_max)


# Global service instance
toolkit_service = GrassmannianService()
