"""
Unipotent upper triangular Toeplitz matrices and the variety V_{d,n}
"""

from typing import Any, Dict, List, Optional, Sequence, Set

from app.config import get_settings
from app.errors import NotInVarietyError
from app.models import BoxShape, IndexTuple, Partition, RingElement, ToeplitzPoint
from app.numeric import Carrier, get_carrier
from app.partitions import conjugate
from app.rootdata import conjugate_index, enumerate_index_tuples, root_values, shift_index
from app.symfun import elementary_values, homogeneous_values


def build_point(
    z: Sequence[Any],
    box: BoxShape,
    t: Optional[Any] = None,
    index: Optional[IndexTuple] = None,
    carrier: Optional[Carrier] = None,
) -> ToeplitzPoint:
    """u_n(z): bands x_j = E_j(z) for j <= d and zero above"""
    carrier = carrier or get_carrier()
    if len(z) != box.d:
        raise ValueError(f"expected {box.d} values, got {len(z)}")
    e = elementary_values(z, box.d, carrier)
    x = tuple(e[j] if j <= box.d else carrier.zero for j in range(1, box.n))
    return ToeplitzPoint(box, x, t, index)


def point_from_index(t: Any, index: IndexTuple, carrier: Optional[Carrier] = None) -> ToeplitzPoint:
    """u_n(t * zeta^I)"""
    carrier = carrier or get_carrier()
    return build_point(root_values(index, t, carrier), index.box, t, index, carrier)


def dense(u: ToeplitzPoint, carrier: Optional[Carrier] = None) -> List[List[Any]]:
    carrier = carrier or get_carrier()
    return u.matrix(carrier.one, carrier.zero)


def minor(u: ToeplitzPoint, rows: Sequence[int], cols: Sequence[int], carrier: Optional[Carrier] = None) -> Any:
    """Minor on 1-based row and column sets"""
    carrier = carrier or get_carrier()
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    zero, one = carrier.zero, carrier.one
    return carrier.det([[u.band(s - r, one, zero) if s >= r else zero for s in cols] for r in rows])


def corner_minor(u: ToeplitzPoint, j: int, carrier: Optional[Carrier] = None) -> Any:
    """Delta_j: the top right (n-j) x (n-j) minor"""
    n = u.box.n
    if not 1 <= j <= n - 1:
        raise ValueError(f"corner minor index {j} outside 1..{n - 1}")
    return minor(u, range(1, n - j + 1), range(j + 1, n + 1), carrier)


def interval_minor(u: ToeplitzPoint, i: int, j: int, carrier: Optional[Carrier] = None) -> Any:
    """Delta_[i,j]: rows 1..j-i+1, columns i..j; one for an empty interval"""
    carrier = carrier or get_carrier()
    if j < i:
        return carrier.one
    return minor(u, range(1, j - i + 2), range(i, j + 1), carrier)


def stratum_signature(u: ToeplitzPoint, tol: Optional[float] = None, carrier: Optional[Carrier] = None) -> Set[int]:
    """K_u = {j : Delta_j(u) vanishes}"""
    tol = get_settings().zero_tolerance if tol is None else tol
    return {j for j in range(1, u.box.n) if abs(corner_minor(u, j, carrier)) < tol}


def membership_residuals(z: Sequence[Any], box: BoxShape, carrier: Optional[Carrier] = None) -> List[Any]:
    """(H_{c+1}(z), ..., H_{n-1}(z)); all vanish exactly on V_{d,n}"""
    h = homogeneous_values(z, box.n - 1, carrier)
    return h[box.c + 1: box.n]


def inverse_entries(u: ToeplitzPoint, upto: Optional[int] = None, carrier: Optional[Carrier] = None) -> List[Any]:
    """y_1..y_upto with y_k = det(x_{i-j+1}) of size k (upto defaults to n-1)"""
    carrier = carrier or get_carrier()
    upto = u.box.n - 1 if upto is None else upto
    zero, one = carrier.zero, carrier.one
    return [
        carrier.det([[u.band(i - j + 1, one, zero) if i - j + 1 >= 0 else zero
                      for j in range(k)] for i in range(k)])
        for k in range(1, upto + 1)
    ]


def _y_sequence(u: ToeplitzPoint, upto: int, carrier: Carrier) -> List[Any]:
    """y_0..y_upto from y_m = sum_j (-1)^(j+1) x_j y_{m-j}"""
    ys = [carrier.one]
    for m in range(1, upto + 1):
        terms = []
        for j in range(1, min(m, u.box.n - 1) + 1):
            term = u.band(j, carrier.one, carrier.zero) * ys[m - j]
            terms.append(term if j % 2 else -term)
        ys.append(carrier.sum(terms))
    return ys


def inverse_point(u: ToeplitzPoint, carrier: Optional[Carrier] = None) -> ToeplitzPoint:
    """u^-1, whose bands are (-1)^k y_k"""
    carrier = carrier or get_carrier()
    ys = _y_sequence(u, u.box.n - 1, carrier)
    return ToeplitzPoint(u.box, tuple(ys[k] if k % 2 == 0 else -ys[k] for k in range(1, u.box.n)))


def scale_point(u: ToeplitzPoint, t: Any, carrier: Optional[Carrier] = None) -> ToeplitzPoint:
    """t . u with x_j -> t^j x_j"""
    carrier = carrier or get_carrier()
    t = carrier.scalar(t)
    new_t = None if u.t is None else carrier.scalar(u.t) * t
    return ToeplitzPoint(u.box, tuple(t ** j * x for j, x in enumerate(u.x, start=1)), new_t, u.index)


def _membership_scale(u: ToeplitzPoint) -> float:
    if u.t is not None:
        return max(1.0, abs(complex(u.t)) ** u.box.n)
    return max([1.0] + [abs(complex(x)) ** (u.box.n / j) for j, x in enumerate(u.x, start=1)])


def membership_residual(u: ToeplitzPoint, carrier: Optional[Carrier] = None) -> float:
    """Largest of |x_j| (j > d) and |y_k| (c < k < n), scaled by max(1, |t|^n)"""
    carrier = carrier or get_carrier()
    box = u.box
    ys = _y_sequence(u, box.n - 1, carrier)
    values = [u.x[j - 1] for j in range(box.d + 1, box.n)] + ys[box.c + 1: box.n]
    worst = max([0.0] + [abs(complex(v)) for v in values])
    return worst / _membership_scale(u)


def require_in_variety(u: ToeplitzPoint, tol: Optional[float] = None, carrier: Optional[Carrier] = None) -> None:
    tol = get_settings().membership_tolerance if tol is None else tol
    residual = membership_residual(u, carrier)
    if residual >= tol:
        raise NotInVarietyError(f"point is not on V_{{{u.box.d},{u.box.n}}} (residual {residual:.3e})", residual)


def schur_value(lam: Partition, u: ToeplitzPoint, carrier: Optional[Carrier] = None) -> Any:
    """s_lambda(u) = det(x_{lambda^t_i - i + j}) with x_0 = 1"""
    carrier = carrier or get_carrier()
    conj = conjugate(lam)
    size = conj.length()
    zero, one = carrier.zero, carrier.one
    x = [one] + [u.band(j, one, zero) for j in range(1, u.box.d + 1)]

    def entry(m: int) -> Any:
        return x[m] if 0 <= m <= u.box.d else zero

    return carrier.det([[entry(conj.part(i) - i + j) for j in range(1, size + 1)] for i in range(1, size + 1)])


def q_value(u: ToeplitzPoint, carrier: Optional[Carrier] = None) -> Any:
    """q(u) = (-1)^(d+1) Y_n(u)"""
    carrier = carrier or get_carrier()
    y_n = _y_sequence(u, u.box.n, carrier)[u.box.n]
    return y_n if u.box.d % 2 else -y_n


def evaluate(el: RingElement, u: ToeplitzPoint, tol: Optional[float] = None, carrier: Optional[Carrier] = None) -> Any:
    """Value of a ring element at a point of V_{d,n}"""
    carrier = carrier or get_carrier()
    if el.box != u.box:
        raise ValueError(f"ring element of {el.box} evaluated at a point of {u.box}")
    require_in_variety(u, tol, carrier)
    q = q_value(u, carrier)
    terms = [coeff * q ** k * schur_value(lam, u, carrier) for (k, lam), coeff in el.items()]
    return carrier.sum(terms)


def fiber_points(box: BoxShape, t: Any = 1, carrier: Optional[Carrier] = None) -> List[ToeplitzPoint]:
    """The binomial(n, d) points u_n(t zeta^I) over q = t^n"""
    return [point_from_index(t, index, carrier) for index in enumerate_index_tuples(box)]


def fiber_orbits(box: BoxShape) -> List[List[IndexTuple]]:
    """Orbits of I_{d,n} under zeta^I -> zeta zeta^I"""
    seen: Set[IndexTuple] = set()
    orbits: List[List[IndexTuple]] = []
    for index in enumerate_index_tuples(box):
        if index in seen:
            continue
        orbit = [index]
        current = shift_index(index, 1)
        while current != index:
            orbit.append(current)
            current = shift_index(current, 1)
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def real_fiber_indices(box: BoxShape) -> List[IndexTuple]:
    """Labels whose root set is closed under complex conjugation"""
    return [index for index in enumerate_index_tuples(box) if conjugate_index(index) == index]


def point_summary(u: ToeplitzPoint, carrier: Optional[Carrier] = None) -> Dict[str, Any]:
    """Corner minors, stratum and q-value of a point"""
    carrier = carrier or get_carrier()
    return {
        "corner_minors": [corner_minor(u, j, carrier) for j in range(1, u.box.n)],
        "stratum": sorted(stratum_signature(u, carrier=carrier)),
        "q": q_value(u, carrier),
    }
