"""
Index tuples I_{d,n} and the roots of (-1)^(d+1) they label

Entries are handled in doubled form: the half-integer i is stored as 2i and
zeta^i = exp(2*pi*i*i/n) = exp(pi*i*(2i)/n).
"""

from typing import Any, List, Optional, Tuple

from app.models import BoxShape, IndexTuple
from app.numeric import Carrier, get_carrier
from app.partitions import enumerate_box, index_of_partition


def base_set(box: BoxShape) -> Tuple[int, ...]:
    """Doubled values of -(d-1)/2 + m for m = 0..n-1"""
    return tuple(-(box.d - 1) + 2 * m for m in range(box.n))


def _reduce(doubled: int, box: BoxShape) -> int:
    """Representative of doubled modulo 2n inside the base window"""
    m = ((doubled + box.d - 1) // 2) % box.n
    return -(box.d - 1) + 2 * m


def enumerate_index_tuples(box: BoxShape) -> List[IndexTuple]:
    """All of I_{d,n}, listed in the order of the partitions they correspond to"""
    return [index_of_partition(lam, box) for lam in enumerate_box(box)]


def base_index(box: BoxShape) -> IndexTuple:
    """I_0 = (-(d-1)/2, ..., (d-1)/2)"""
    return IndexTuple(base_set(box)[: box.d], box)


def complement(index: IndexTuple) -> Tuple[int, ...]:
    """Doubled base-set values not in I, increasing (the c-tuple I hat)"""
    taken = set(index.doubled)
    return tuple(v for v in base_set(index.box) if v not in taken)


def transpose(index: IndexTuple) -> IndexTuple:
    """I^t = (n/2 - ihat_c, ..., n/2 - ihat_1) in I_{c,n}"""
    box = index.box
    hat = complement(index)
    return IndexTuple(tuple(box.n - v for v in reversed(hat)), BoxShape(box.c, box.n))


def shift_index(index: IndexTuple, k: int) -> IndexTuple:
    """Label of zeta^k * zeta^I, the rotation acting on the q = 1 fiber"""
    box = index.box
    return IndexTuple(tuple(sorted(_reduce(v + 2 * k, box) for v in index.doubled)), box)


def conjugate_index(index: IndexTuple) -> IndexTuple:
    """Label of the complex conjugate root set"""
    box = index.box
    return IndexTuple(tuple(sorted(_reduce(-v, box) for v in index.doubled)), box)


def eval_root(doubled: int, n: int, carrier: Optional[Carrier] = None) -> Any:
    """zeta^i for i = doubled/2"""
    return (carrier or get_carrier()).root(doubled, n)


def root_values(index: IndexTuple, t: Any = 1, carrier: Optional[Carrier] = None) -> Tuple[Any, ...]:
    """The tuple t * zeta^I"""
    carrier = carrier or get_carrier()
    scale = carrier.scalar(t)
    return tuple(scale * carrier.root(v, index.box.n) for v in index.doubled)


def vandermonde_sq(index: IndexTuple, carrier: Optional[Carrier] = None) -> Any:
    """|prod_{k<j} (zeta^{i_k} - zeta^{i_j})|^2"""
    carrier = carrier or get_carrier()
    roots = root_values(index, carrier=carrier)
    value = carrier.real(1)
    for k in range(len(roots)):
        for j in range(k + 1, len(roots)):
            value *= abs(roots[k] - roots[j]) ** 2
    return value
