"""
Totally positive part of V_{d,n}: the family u_{>0}(t), hook formula values,
total nonnegativity tests and the factorization into simple root subgroups
"""

from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from app.config import get_settings
from app.errors import ComplexInputError, VanishingMinorError
from app.models import (
    BoxShape, FactorGrid, FactorOrder, MinorMethod, Partition, TnnCertificate, ToeplitzPoint,
)
from app.numeric import Carrier, get_carrier
from app.partitions import cells, enumerate_box, hook_lengths
from app.rootdata import base_index
from app.toeplitz import dense, interval_minor, minor, schur_value


def positive_point(t: float, box: BoxShape, carrier: Optional[Carrier] = None) -> ToeplitzPoint:
    """u_{>0}(t) with x_j = t^j prod_{m<j} sin((d-m)pi/n) / sin((m+1)pi/n)"""
    carrier = carrier or get_carrier()
    d, n = box.d, box.n
    t_real = carrier.real(t)
    x: List[Any] = []
    value = carrier.real(1)
    for j in range(1, n):
        if j <= d:
            m = j - 1
            value = value * t_real * carrier.sin_pi(d - m, n) / carrier.sin_pi(m + 1, n)
            x.append(value)
        else:
            x.append(carrier.real(0))
    return ToeplitzPoint(box, tuple(x), t_real, base_index(box))


def hook_schur_value(lam: Partition, t: float, box: BoxShape, carrier: Optional[Carrier] = None) -> Any:
    """s_lambda(u_{>0}(t)) = t^|lambda| prod_(i,j) sin((d-i+j)pi/n) / sin(hl(i,j)pi/n)"""
    carrier = carrier or get_carrier()
    if not lam.fits(box):
        return carrier.real(0)
    hooks = hook_lengths(lam)
    value = carrier.real(t) ** lam.size()
    for i, j in cells(lam):
        value = value * carrier.sin_pi(box.d - i + j, box.n) / carrier.sin_pi(hooks[(i, j)], box.n)
    return value


def real_bands(u: ToeplitzPoint, carrier: Optional[Carrier] = None) -> Tuple[float, ...]:
    """Band entries as reals; complex input is rejected"""
    carrier = carrier or get_carrier()
    tol = get_settings().zero_tolerance
    out = []
    for j, x in enumerate(u.x, start=1):
        value = complex(x)
        if abs(value.imag) > tol * max(1.0, abs(value)):
            raise ComplexInputError(f"band x_{j} = {value} is not real")
        out.append(carrier.real_part(x))
    return tuple(out)


def _real_point(u: ToeplitzPoint, carrier: Carrier) -> ToeplitzPoint:
    return ToeplitzPoint(u.box, tuple(carrier.real(v) for v in real_bands(u, carrier)), u.t, u.index)


def is_totally_nonnegative(
    u: ToeplitzPoint,
    method: MinorMethod = MinorMethod.CONNECTED_COLUMNS,
    tol: Optional[float] = None,
    carrier: Optional[Carrier] = None,
) -> TnnCertificate:
    """Check all minors (or all column-solid minors) of a real point"""
    carrier = carrier or get_carrier()
    tol = get_settings().zero_tolerance if tol is None else tol
    method = MinorMethod(method)
    point = _real_point(u, carrier)
    n = u.box.n
    checked = 0
    for size in range(1, n + 1):
        if method is MinorMethod.CONNECTED_COLUMNS:
            col_sets = [tuple(range(start, start + size)) for start in range(1, n - size + 2)]
        else:
            col_sets = list(combinations(range(1, n + 1), size))
        for cols in col_sets:
            for rows in combinations(range(1, n + 1), size):
                value = carrier.real_part(minor(point, rows, cols, carrier))
                checked += 1
                if value < -tol:
                    return TnnCertificate(False, method, checked, rows, cols, value)
    return TnnCertificate(True, method, checked)


def factor_params(u: ToeplitzPoint, carrier: Optional[Carrier] = None) -> FactorGrid:
    """a_(d-k+1, m) from the interval minors of a point in the open stratum"""
    carrier = carrier or get_carrier()
    tol = get_settings().zero_tolerance
    point = _real_point(u, carrier)
    d, c = u.box.d, u.box.c
    # Delta_[i,j] is homogeneous of weight (j-i+1)(i-1) under x_j -> s^j x_j
    scale = max([0.0] + [abs(float(x)) ** (1.0 / j) for j, x in enumerate(point.x, start=1)])
    if scale == 0.0:
        raise VanishingMinorError("the identity has no factorization in the open stratum")

    def delta(i: int, j: int) -> Any:
        return carrier.real_part(interval_minor(point, i, j, carrier))

    def weight(i: int, j: int) -> int:
        return max(0, j - i + 1) * (i - 1)

    a: Dict[Tuple[int, int], float] = {}
    for k in range(1, d + 1):
        for m in range(1, c + 1):
            denominator = delta(k + 1, k + m - 1) * delta(k, k + m - 1)
            normalized = denominator / scale ** (weight(k + 1, k + m - 1) + weight(k, k + m - 1))
            if abs(normalized) < tol:
                raise VanishingMinorError(
                    f"interval minors [{k + 1},{k + m - 1}] x [{k},{k + m - 1}] vanish; point is not in the open stratum"
                )
            a[(d - k + 1, m)] = delta(k + 1, k + m) * delta(k, k + m - 2) / denominator
    return FactorGrid(u.box, a)


def factor_sequence(box: BoxShape, order: FactorOrder = FactorOrder.ROWS_FIRST) -> List[Tuple[int, int]]:
    """Cells of B(d,c) in the order the factors are multiplied"""
    if FactorOrder(order) is FactorOrder.ROWS_FIRST:
        return [(i, j) for i in range(box.d, 0, -1) for j in range(box.c, 0, -1)]
    return [(i, j) for j in range(box.c, 0, -1) for i in range(box.d, 0, -1)]


def reconstruct_matrix(
    grid: FactorGrid,
    order: FactorOrder = FactorOrder.ROWS_FIRST,
    carrier: Optional[Carrier] = None,
) -> List[List[Any]]:
    """Product of I + a_(i,j) E_{p,p+1}, p = d - i + j"""
    carrier = carrier or get_carrier()
    n = grid.box.n
    zero, one = carrier.zero, carrier.one
    product = [[one if r == s else zero for s in range(n)] for r in range(n)]
    for i, j in factor_sequence(grid.box, order):
        p = grid.box.d - i + j
        factor = [[one if r == s else zero for s in range(n)] for r in range(n)]
        factor[p - 1][p] = carrier.scalar(grid.a[(i, j)])
        product = carrier.matmul(product, factor)
    return product


def reconstruct(
    grid: FactorGrid,
    order: FactorOrder = FactorOrder.ROWS_FIRST,
    carrier: Optional[Carrier] = None,
) -> ToeplitzPoint:
    """Toeplitz point read off the first row of the factor product"""
    product = reconstruct_matrix(grid, order, carrier)
    return ToeplitzPoint(grid.box, tuple(product[0][1:]))


def round_trip_error(u: ToeplitzPoint, grid: FactorGrid, order: FactorOrder = FactorOrder.ROWS_FIRST,
                     carrier: Optional[Carrier] = None) -> float:
    """Largest entrywise deviation between u and the factor product"""
    carrier = carrier or get_carrier()
    product = reconstruct_matrix(grid, order, carrier)
    target = dense(u, carrier)
    return max(abs(complex(a) - complex(b)) for ra, rb in zip(product, target) for a, b in zip(ra, rb))


def closed_form_grid(t: float, box: BoxShape, carrier: Optional[Carrier] = None) -> FactorGrid:
    """a_(i,j) = t sin((i+j-1)pi/n) / sin((d-i+j)pi/n)"""
    carrier = carrier or get_carrier()
    t_real = carrier.real(t)
    return FactorGrid(box, {
        (i, j): t_real * carrier.sin_pi(i + j - 1, box.n) / carrier.sin_pi(box.d - i + j, box.n)
        for i in range(1, box.d + 1)
        for j in range(1, box.c + 1)
    })


def rectangles(box: BoxShape) -> List[Partition]:
    """(m^k) for 1 <= m <= c, 1 <= k <= d"""
    return [Partition.rectangle(m, k) for k in range(1, box.d + 1) for m in range(1, box.c + 1)]


def positivity_certificate(u: ToeplitzPoint, carrier: Optional[Carrier] = None) -> bool:
    """True iff every rectangular s_(m^k)(u) is positive"""
    carrier = carrier or get_carrier()
    tol = get_settings().zero_tolerance
    point = _real_point(u, carrier)
    return all(carrier.real_part(schur_value(lam, point, carrier)) > tol for lam in rectangles(u.box))


def negative_rectangle(u: ToeplitzPoint, carrier: Optional[Carrier] = None) -> Optional[Tuple[Partition, float]]:
    """A rectangle with a negative Schur value at u, if any"""
    carrier = carrier or get_carrier()
    tol = get_settings().zero_tolerance
    point = _real_point(u, carrier)
    for lam in rectangles(u.box):
        value = carrier.real_part(schur_value(lam, point, carrier))
        if value < -tol:
            return lam, value
    return None


def schur_criterion(u: ToeplitzPoint, strict: bool = False, carrier: Optional[Carrier] = None) -> bool:
    """All s_lambda(u), lambda in the box, are real and nonnegative (positive if strict)"""
    carrier = carrier or get_carrier()
    tol = get_settings().zero_tolerance
    for lam in enumerate_box(u.box):
        value = complex(schur_value(lam, u, carrier))
        if abs(value.imag) > tol * max(1.0, abs(value)):
            return False
        if value.real < (tol if strict else -tol):
            return False
    return True


def grid_cells(grid: FactorGrid, carrier: Optional[Carrier] = None) -> List[Tuple[int, int, float]]:
    carrier = carrier or get_carrier()
    return [(i, j, carrier.real_part(grid.a[(i, j)])) for i, j in grid.cells()]


def max_grid_deviation(first: FactorGrid, second: FactorGrid) -> float:
    return max(abs(complex(first.a[cell]) - complex(second.a[cell])) for cell in first.cells())

