"""
Identity and inequality harness: orthogonality of Schur values at roots,
Schur duality, the Littlewood-Richardson tableau oracle, the Schur value
inequality and spectral checks of the multiplication operators
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from app.gwcalc import fiber_table, schur_column
from app.models import (
    BoxShape, CheckReport, IndexTuple, InequalityReport, OrthogonalityCheck, Partition,
)
from app.numeric import Carrier, get_carrier
from app.partitions import complement_rectangle, conjugate, enumerate_box, poincare_dual
from app.qring import multiply, schubert
from app.rootdata import base_index, complement, enumerate_index_tuples, root_values, transpose
from app.symfun import eval_schur

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9
INEQUALITY_SLACK = 1e-9
SPECTRAL_TOLERANCE = 1e-6


class _Worst:
    """Tracks the largest relative residual and the cell attaining it"""

    def __init__(self):
        self.residual = 0.0
        self.deviation = 0.0
        self.witness: Dict[str, Any] = {}

    def update(self, lhs: Any, rhs: Any, scale: float, **witness: Any) -> None:
        deviation = abs(complex(lhs) - complex(rhs))
        residual = deviation / max(1.0, scale)
        self.deviation = max(self.deviation, deviation)
        if residual > self.residual or not self.witness:
            self.residual = residual
            self.witness = dict(witness, lhs=str(complex(lhs)), rhs=str(complex(rhs)))


def _samples(count: int, size: int, t: Any, seed: int) -> List[List[complex]]:
    rng = np.random.default_rng(seed)
    return [
        [complex(t) * complex(a, b) for a, b in zip(rng.normal(size=size), rng.normal(size=size))]
        for _ in range(count)
    ]


def _magnitude(terms: Sequence[Any]) -> float:
    return float(sum(abs(complex(v)) for v in terms))


def _littlewood(box: BoxShape, t: Any, samples: int, seed: int, worst: _Worst, carrier: Carrier) -> None:
    shapes = enumerate_box(box)
    zs = _samples(samples, box.d, t, seed)
    ws = _samples(samples, box.c, 1, seed + 1)
    for s, (z, w) in enumerate(zip(zs, ws)):
        terms = [eval_schur(lam, z, carrier=carrier) * eval_schur(conjugate(lam), w, carrier=carrier) for lam in shapes]
        rhs = carrier.one
        for zi in z:
            for wj in w:
                rhs = rhs * (1 + carrier.scalar(zi) * carrier.scalar(wj))
        worst.update(carrier.sum(terms), rhs, max(_magnitude(terms), abs(complex(rhs))), sample=s)


def _prop1(box: BoxShape, t: Any, samples: int, seed: int, worst: _Worst, carrier: Carrier) -> None:
    shapes = enumerate_box(box)
    top = complement_rectangle(box)
    for s, z in enumerate(_samples(samples, box.d, t, seed)):
        for index in enumerate_index_tuples(box):
            roots = root_values(index, carrier=carrier)
            terms = [eval_schur(lam, z, carrier=carrier) * eval_schur(poincare_dual(lam, box), roots, carrier=carrier)
                     for lam in shapes]
            rhs = eval_schur(top, roots, carrier=carrier)
            for zk in z:
                for v in complement(index):
                    rhs = rhs * (1 - carrier.scalar(zk) * carrier.root(-v, box.n))
            worst.update(carrier.sum(terms), rhs, max(_magnitude(terms), abs(complex(rhs))),
                         sample=s, J=index.labels())


def _prop2(box: BoxShape, t: Any, worst: _Worst, carrier: Carrier) -> None:
    shapes = enumerate_box(box)
    top = complement_rectangle(box)
    n_d = carrier.real(box.n) ** box.d
    indices = enumerate_index_tuples(box)
    values = {index: [eval_schur(lam, root_values(index, t, carrier), carrier=carrier) for lam in shapes]
              for index in indices}
    duals = {index: [eval_schur(poincare_dual(lam, box), root_values(index, t, carrier), carrier=carrier)
                     for lam in shapes] for index in indices}
    entries = {entry.index: entry for entry in fiber_table(box, carrier)}
    for first in indices:
        for second in indices:
            terms = [a * b for a, b in zip(values[first], duals[second])]
            if first == second:
                top_value = eval_schur(top, root_values(first, t, carrier), carrier=carrier)
                rhs = n_d * top_value / entries[first].vand_sq
            else:
                rhs = carrier.zero
            worst.update(carrier.sum(terms), rhs, max(_magnitude(terms), abs(complex(rhs))),
                         I=first.labels(), J=second.labels())


def _prop3(box: BoxShape, worst: _Worst, carrier: Carrier) -> None:
    shapes = enumerate_box(box)
    table = fiber_table(box, carrier)
    n_d = carrier.real(box.n) ** box.d
    columns = [schur_column(lam, box, carrier) for lam in shapes]
    for a, first in enumerate(table):
        for b, second in enumerate(table):
            terms = [column[a] * column[b].conjugate() for column in columns]
            rhs = n_d / first.vand_sq if a == b else carrier.zero
            worst.update(carrier.sum(terms), rhs, max(_magnitude(terms), abs(complex(rhs))),
                         I=first.index.labels(), J=second.index.labels())


def _rows(box: BoxShape, poincare: bool, worst: _Worst, carrier: Carrier) -> None:
    shapes = enumerate_box(box)
    table = fiber_table(box, carrier)
    n_d = carrier.real(box.n) ** box.d
    for lam in shapes:
        left = schur_column(lam, box, carrier)
        for mu in shapes:
            if poincare:
                right = schur_column(poincare_dual(mu, box), box, carrier)
                terms = [x * y * e.vand_sq / e.top for x, y, e in zip(left, right, table)]
            else:
                right = schur_column(mu, box, carrier)
                terms = [x * y.conjugate() * e.vand_sq for x, y, e in zip(left, right, table)]
            expected = 1 if lam == mu else 0
            worst.update(carrier.sum(terms) / n_d, expected, _magnitude(terms) / float(n_d),
                         **{"lambda": lam.to_list(), "mu": mu.to_list()})


def check_orthogonality(
    box: BoxShape,
    which: OrthogonalityCheck,
    t: Any = 1,
    tol: float = DEFAULT_TOLERANCE,
    samples: int = 4,
    seed: int = 0,
    carrier: Optional[Carrier] = None,
) -> CheckReport:
    """Worst residual of one orthogonality identity over all cells"""
    carrier = carrier or get_carrier()
    which = OrthogonalityCheck(which)
    if complex(t) == 0 and which in (OrthogonalityCheck.PROP2, OrthogonalityCheck.LITTLEWOOD):
        raise ValueError("t must be nonzero")
    worst = _Worst()
    if which is OrthogonalityCheck.LITTLEWOOD:
        _littlewood(box, t, samples, seed, worst, carrier)
    elif which is OrthogonalityCheck.PROP1:
        _prop1(box, t, samples, seed, worst, carrier)
    elif which is OrthogonalityCheck.PROP2:
        _prop2(box, t, worst, carrier)
    elif which is OrthogonalityCheck.PROP3:
        _prop3(box, worst, carrier)
    else:
        _rows(box, which is OrthogonalityCheck.ROW_PD, worst, carrier)
    report = CheckReport(which.value, box, worst.residual, worst.witness, worst.deviation, tol)
    logger.info("%s on %s: max residual %.3e", which.value, box, report.max_residual)
    return report


def schur_duality_residual(lam: Partition, index: IndexTuple, carrier: Optional[Carrier] = None) -> float:
    """max of |S_lam^t(zeta^I^t) - S_PD(lam)/S_(c^d)| and |S_lam^t(zeta^I^t) - conj S_lam(zeta^I)|"""
    carrier = carrier or get_carrier()
    box = index.box
    roots = root_values(index, carrier=carrier)
    transposed = eval_schur(conjugate(lam.require_in(box)), root_values(transpose(index), carrier=carrier), carrier=carrier)
    ratio = eval_schur(poincare_dual(lam, box), roots, carrier=carrier) / eval_schur(complement_rectangle(box), roots, carrier=carrier)
    conj = eval_schur(lam, roots, carrier=carrier).conjugate()
    return max(abs(complex(transposed) - complex(ratio)), abs(complex(transposed) - complex(conj)))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of Littlewood-Richardson tableaux of shape nu/lam and content mu"""
    if lam.size() + mu.size() != nu.size() or not nu.contains(lam):
        return 0
    # reading order: rows top to bottom, each row right to left
    cells = [(i, j) for i in range(1, nu.length() + 1) for j in range(nu.part(i), lam.part(i), -1)]
    content = list(mu.parts)
    filled: Dict[tuple, int] = {}
    counts = [0] * (len(content) + 1)

    def allowed(i: int, j: int, value: int) -> bool:
        right = filled.get((i, j + 1))
        if right is not None and value > right:
            return False
        above = filled.get((i - 1, j))
        if above is not None and value <= above:
            return False
        if counts[value] >= content[value - 1]:
            return False
        return value == 1 or counts[value] < counts[value - 1]

    def backtrack(pos: int) -> int:
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        total = 0
        for value in range(1, len(content) + 1):
            if not allowed(i, j, value):
                continue
            filled[(i, j)] = value
            counts[value] += 1
            total += backtrack(pos + 1)
            counts[value] -= 1
            del filled[(i, j)]
        return total

    return backtrack(0)


def inequality_scan(box: BoxShape, slack: float = INEQUALITY_SLACK, carrier: Optional[Carrier] = None) -> InequalityReport:
    """Compare |S_lambda(zeta^I)| with S_lambda(zeta^I_0) over the whole fiber"""
    carrier = carrier or get_carrier()
    report = InequalityReport(box)
    table = fiber_table(box, carrier)
    base = base_index(box)
    base_row = next(r for r, entry in enumerate(table) if entry.index == base)
    for lam in enumerate_box(box):
        column = schur_column(lam, box, carrier)
        reference = complex(column[base_row]).real
        sizes = [abs(complex(v)) for v in column]
        peak = max(sizes)
        report.maximizers[lam] = [entry.index for entry, size in zip(table, sizes) if size >= peak - slack]
        for entry, size in zip(table, sizes):
            report.cells_checked += 1
            report.max_excess = max(report.max_excess, size - reference)
            if size > reference + slack:
                report.violations.append({"lambda": lam.to_list(), "I": entry.index.labels(),
                                          "value": size, "reference": reference})
    return report


def inequality_scan_range(n_max: int, slack: float = INEQUALITY_SLACK) -> List[InequalityReport]:
    """inequality_scan for every box with 1 <= d < n <= n_max"""
    reports = []
    for n in range(2, n_max + 1):
        for d in range(1, n):
            reports.append(inequality_scan(BoxShape(d, n), slack))
    return reports


def multiplication_matrix(lam: Partition, box: BoxShape) -> np.ndarray:
    """Matrix of s_lambda * (.) at q = 1 in the Schubert basis, columns indexed by mu"""
    shapes = enumerate_box(box)
    position = {shape: r for r, shape in enumerate(shapes)}
    matrix = np.zeros((len(shapes), len(shapes)), dtype=np.int64)
    for col, mu in enumerate(shapes):
        for (_, nu), coeff in multiply(schubert(lam, box), schubert(mu, box)).items():
            matrix[position[nu], col] += coeff
    return matrix


def spectral_check(lam: Partition, box: BoxShape, carrier: Optional[Carrier] = None) -> CheckReport:
    """Eigenvalues of the multiplication matrix against the values S_lambda(zeta^I)"""
    carrier = carrier or get_carrier()
    eigenvalues = list(np.linalg.eigvals(multiplication_matrix(lam, box).astype(np.float64)))
    expected = [complex(v) for v in schur_column(lam, box, carrier)]
    worst = 0.0
    for value in expected:
        nearest = min(range(len(eigenvalues)), key=lambda r: abs(eigenvalues[r] - value))
        worst = max(worst, abs(eigenvalues.pop(nearest) - value))
    table = fiber_table(box, carrier)
    base = next(r for r, entry in enumerate(table) if entry.index == base_index(box))
    radius = max(abs(v) for v in expected)
    witness = {"lambda": lam.to_list(), "spectral_radius": radius, "positive_value": expected[base].real}
    return CheckReport("spectral", box, max(worst, abs(radius - expected[base].real)), witness, worst, SPECTRAL_TOLERANCE)
