"""
Partitions in a d x c box: enumeration, conjugates, Poincare duals, hooks
"""

from typing import Dict, List, Tuple

from app.errors import OutsideBoxError
from app.models import BoxShape, IndexTuple, Partition


def enumerate_box(box: BoxShape) -> List[Partition]:
    """All partitions with at most d parts, each at most c, in graded lexicographic order"""
    found: List[Partition] = []

    def extend(prefix: Tuple[int, ...], cap: int) -> None:
        found.append(Partition(prefix))
        if len(prefix) == box.d:
            return
        for part in range(1, cap + 1):
            extend(prefix + (part,), part)

    extend((), box.c)
    # zero-padded prefixes were never generated, so every entry is distinct
    return sorted(found, key=Partition.sort_key)


def conjugate(lam: Partition) -> Partition:
    """Exchange rows and columns"""
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def poincare_dual(lam: Partition, box: BoxShape) -> Partition:
    """PD(lambda) = (c - lambda_d, ..., c - lambda_1)"""
    padded = lam.require_in(box).padded(box.d)
    return Partition(tuple(box.c - p for p in reversed(padded)))


def hook_lengths(lam: Partition) -> Dict[Tuple[int, int], int]:
    """hl(i, j) = lambda_i + lambda^t_j - i - j + 1 on the boxes of lambda"""
    conj = conjugate(lam)
    return {
        (i, j): lam.part(i) + conj.part(j) - i - j + 1
        for i in range(1, lam.length() + 1)
        for j in range(1, lam.part(i) + 1)
    }


def cells(lam: Partition) -> List[Tuple[int, int]]:
    """Boxes (row, column) of the Young diagram, 1-based"""
    return [(i, j) for i in range(1, lam.length() + 1) for j in range(1, lam.part(i) + 1)]


def complement_rectangle(box: BoxShape) -> Partition:
    """The top class (c^d)"""
    return Partition.rectangle(box.c, box.d)


def index_of_partition(lam: Partition, box: BoxShape) -> IndexTuple:
    """I_lambda = ((d+1)/2 + lambda_d - d, ..., (d+1)/2 + lambda_1 - 1)"""
    lam.require_in(box)
    d = box.d
    doubled = tuple(d + 1 + 2 * lam.part(d + 1 - k) - 2 * (d + 1 - k) for k in range(1, d + 1))
    return IndexTuple(doubled, box)


def partition_of_index(index: IndexTuple) -> Partition:
    """Inverse of index_of_partition"""
    d = index.box.d
    parts = [0] * d
    for k, v in enumerate(index.doubled, start=1):
        twice = v - (d + 1) + 2 * (d + 1 - k)
        if twice % 2:
            raise OutsideBoxError(f"{index!r} is not in I_{{{d},{index.box.n}}}")
        parts[d - k] = twice // 2
    return Partition(tuple(parts)).require_in(index.box)
