"""
Numeric evaluation of elementary, complete homogeneous and Schur polynomials
"""

from typing import Any, List, Optional, Sequence

from app.errors import DegenerateInputError
from app.models import Partition, SchurMethod
from app.numeric import Carrier, get_carrier
from app.partitions import conjugate


def elementary_values(z: Sequence[Any], upto: int, carrier: Optional[Carrier] = None) -> List[Any]:
    """[E_0(z), ..., E_upto(z)]"""
    carrier = carrier or get_carrier()
    e = [carrier.one] + [carrier.zero] * upto
    for zi in z:
        zi = carrier.scalar(zi)
        for j in range(min(upto, len(z)), 0, -1):
            e[j] = e[j] + zi * e[j - 1]
    return e


def homogeneous_values(z: Sequence[Any], upto: int, carrier: Optional[Carrier] = None) -> List[Any]:
    """[H_0(z), ..., H_upto(z)]"""
    carrier = carrier or get_carrier()
    h = [carrier.one] + [carrier.zero] * upto
    for zi in z:
        zi = carrier.scalar(zi)
        for j in range(1, upto + 1):
            h[j] = h[j] + zi * h[j - 1]
    return h


def eval_elementary(k: int, z: Sequence[Any], carrier: Optional[Carrier] = None) -> Any:
    carrier = carrier or get_carrier()
    if k < 0 or k > len(z):
        return carrier.zero
    return elementary_values(z, k, carrier)[k]


def eval_homogeneous(k: int, z: Sequence[Any], carrier: Optional[Carrier] = None) -> Any:
    carrier = carrier or get_carrier()
    if k < 0:
        return carrier.zero
    return homogeneous_values(z, k, carrier)[k]


def _band(values: List[Any], m: int, zero: Any) -> Any:
    return values[m] if 0 <= m < len(values) else zero


def _dual_jacobi_trudi(lam: Partition, z: Sequence[Any], carrier: Carrier) -> Any:
    conj = conjugate(lam)
    size = conj.length()
    e = elementary_values(z, len(z), carrier)
    rows = [[_band(e, conj.part(i) - i + j, carrier.zero) for j in range(1, size + 1)]
            for i in range(1, size + 1)]
    return carrier.det(rows)


def _jacobi_trudi(lam: Partition, z: Sequence[Any], carrier: Carrier) -> Any:
    size = lam.length()
    h = homogeneous_values(z, lam.part(1) + size, carrier)
    rows = [[_band(h, lam.part(i) - i + j, carrier.zero) for j in range(1, size + 1)]
            for i in range(1, size + 1)]
    return carrier.det(rows)


def _bialternant(lam: Partition, z: Sequence[Any], carrier: Carrier) -> Any:
    d = len(z)
    zs = [carrier.scalar(v) for v in z]
    for a in range(d):
        for b in range(a + 1, d):
            if zs[a] == zs[b]:
                raise DegenerateInputError(
                    f"bialternant formula needs distinct entries, z[{a}] = z[{b}]"
                )
    padded = lam.padded(d)
    numerator = carrier.det([[zi ** (padded[j] + d - 1 - j) for j in range(d)] for zi in zs])
    denominator = carrier.det([[zi ** (d - 1 - j) for j in range(d)] for zi in zs])
    return numerator / denominator


_METHODS = {
    SchurMethod.DUAL_JT: _dual_jacobi_trudi,
    SchurMethod.JT: _jacobi_trudi,
    SchurMethod.BIALTERNANT: _bialternant,
}


def eval_schur(
    lam: Partition,
    z: Sequence[Any],
    method: SchurMethod = SchurMethod.DUAL_JT,
    carrier: Optional[Carrier] = None,
) -> Any:
    """S_lambda(z); zero when lambda has more parts than z has entries"""
    carrier = carrier or get_carrier()
    if lam.length() > len(z):
        return carrier.zero
    if not lam.parts:
        return carrier.one
    return _METHODS[SchurMethod(method)](lam, z, carrier)
