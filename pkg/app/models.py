"""
Data models for the quantum Grassmannian toolkit
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from app.errors import InvalidBoxError, OutsideBoxError

# ordered tuple of d carrier values (z_1, ..., z_d)
ValueTuple = Tuple[Any, ...]


class SchurMethod(str, Enum):
    """Schur polynomial evaluation methods"""
    DUAL_JT = "dual_jt"
    JT = "jt"
    BIALTERNANT = "bialternant"


class MinorMethod(str, Enum):
    """Total nonnegativity test strategies"""
    CONNECTED_COLUMNS = "connected_columns"
    ALL_MINORS = "all_minors"


class OrthogonalityCheck(str, Enum):
    """Identities checked by the orthogonality harness"""
    LITTLEWOOD = "littlewood"
    PROP1 = "prop1"
    PROP2 = "prop2"
    PROP3 = "prop3"
    ROW_CHAR = "row_char"
    ROW_PD = "row_pd"


class FactorOrder(str, Enum):
    """Linear extensions of the box order used when multiplying factors"""
    ROWS_FIRST = "rows_first"
    COLUMNS_FIRST = "columns_first"


@dataclass(frozen=True)
class BoxShape:
    """d x c box with c = n - d"""
    d: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.d, int) and isinstance(self.n, int)) or not 1 <= self.d < self.n:
            raise InvalidBoxError(f"box requires 1 <= d < n, got d={self.d}, n={self.n}")

    @property
    def c(self) -> int:
        return self.n - self.d

    @property
    def count(self) -> int:
        """Number of partitions in the box, binomial(n, d)"""
        return math.comb(self.n, self.d)

    @property
    def dimension(self) -> int:
        return self.c * self.d

    def __str__(self) -> str:
        return f"(d={self.d}, n={self.n})"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative parts, trailing zeros dropped"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def rectangle(cls, width: int, height: int) -> "Partition":
        """(width^height)"""
        return cls((width,) * height)

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part, zero beyond the length"""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, length: int) -> Tuple[int, ...]:
        if len(self.parts) > length:
            raise OutsideBoxError(f"{self} has more than {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    def fits(self, box: BoxShape) -> bool:
        return self.length() <= box.d and self.part(1) <= box.c

    def require_in(self, box: BoxShape) -> "Partition":
        if not self.fits(box):
            raise OutsideBoxError(f"{self} does not fit the {box.d}x{box.c} box")
        return self

    def contains(self, other: "Partition") -> bool:
        return other.length() <= self.length() and all(
            self.part(i) >= other.part(i) for i in range(1, other.length() + 1)
        )

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Graded lexicographic key: by size, then larger first parts first"""
        return self.size(), tuple(-p for p in self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return repr(self.parts) if len(self.parts) != 1 else f"({self.parts[0]})"

    def to_list(self) -> List[int]:
        return list(self.parts)


@dataclass(frozen=True)
class IndexTuple:
    """Strictly increasing d-tuple of (half-)integers labelling distinct roots of (-1)^(d+1)

    Entries are stored doubled so that half-integers stay exact.
    """
    doubled: Tuple[int, ...]
    box: BoxShape

    def __post_init__(self):
        doubled = tuple(int(v) for v in self.doubled)
        object.__setattr__(self, "doubled", doubled)
        d, n = self.box.d, self.box.n
        if len(doubled) != d:
            raise OutsideBoxError(f"index tuple {doubled} must have {d} entries")
        if any(a >= b for a, b in zip(doubled, doubled[1:])):
            raise OutsideBoxError(f"index tuple {doubled} must be strictly increasing")
        if any((v - (d - 1)) % 2 for v in doubled):
            raise OutsideBoxError(f"index tuple {doubled} has entries of the wrong parity for d={d}")
        if doubled[0] < -(d - 1) or doubled[-1] > 2 * n - (d + 1):
            raise OutsideBoxError(f"index tuple {doubled} lies outside I_{{{d},{n}}}")

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(v, 2) for v in self.doubled)

    def norm(self) -> Fraction:
        """Sum of the entries"""
        return Fraction(sum(self.doubled), 2)

    def labels(self) -> List[str]:
        """Exact string form, e.g. ['-1/2', '3/2']"""
        return [str(v) for v in self.values]

    def __repr__(self) -> str:
        return "(" + ", ".join(self.labels()) + ")"


@dataclass(frozen=True)
class XMonomial:
    """Signed monomial in the generators X_1..X_d"""
    exponents: Tuple[int, ...]
    coeff: int = 1

    @property
    def degree(self) -> int:
        return sum(j * e for j, e in enumerate(self.exponents, start=1))


# (q-degree, partition)
TermKey = Tuple[int, Partition]


@dataclass(frozen=True, eq=False)
class RingElement:
    """Element of Lambda_{d,n} in the Schubert basis {q^k s_lambda}"""
    box: BoxShape
    terms: Mapping[TermKey, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: Dict[TermKey, int] = {}
        for (k, lam), coeff in dict(self.terms).items():
            if k < 0:
                raise ValueError(f"negative q-degree {k}")
            lam.require_in(self.box)
            if coeff:
                cleaned[(k, lam)] = int(coeff)
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    @classmethod
    def zero(cls, box: BoxShape) -> "RingElement":
        return cls(box, {})

    @classmethod
    def basis(cls, box: BoxShape, lam: Partition, k: int = 0) -> "RingElement":
        """q^k s_lambda"""
        return cls(box, {(k, lam): 1})

    @classmethod
    def one(cls, box: BoxShape) -> "RingElement":
        return cls.basis(box, Partition())

    @classmethod
    def accumulate(cls, box: BoxShape, items: Iterable[Tuple[TermKey, int]]) -> "RingElement":
        totals: Dict[TermKey, int] = {}
        for key, coeff in items:
            totals[key] = totals.get(key, 0) + coeff
        return cls(box, totals)

    def coefficient(self, lam: Partition, k: int = 0) -> int:
        return self.terms.get((k, lam), 0)

    def items(self) -> List[Tuple[TermKey, int]]:
        """Terms in canonical order: by q-degree, then graded lexicographic"""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1].sort_key()))

    def degrees(self) -> set:
        """Total degrees k*n + |lambda| present"""
        return {k * self.box.n + lam.size() for k, lam in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def shift(self, k: int) -> "RingElement":
        """Multiply by q^k"""
        return RingElement(self.box, {(kk + k, lam): c for (kk, lam), c in self.terms.items()})

    def scale(self, factor: int) -> "RingElement":
        return RingElement(self.box, {key: factor * c for key, c in self.terms.items()})

    def _check_box(self, other: "RingElement") -> None:
        if other.box != self.box:
            raise ValueError(f"ring elements live in different boxes: {self.box} vs {other.box}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check_box(other)
        return RingElement.accumulate(self.box, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.box == other.box and dict(self.terms) == dict(other.terms)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for (k, lam), coeff in self.items():
            q = "" if k == 0 else ("q*" if k == 1 else f"q^{k}*")
            parts.append(f"{coeff}*{q}s{lam!r}")
        return " + ".join(parts)


@dataclass(frozen=True)
class ToeplitzPoint:
    """Unipotent upper triangular Toeplitz matrix given by its bands x_1..x_{n-1}"""
    box: BoxShape
    x: Tuple[Any, ...]
    t: Optional[Any] = None
    index: Optional[IndexTuple] = None

    def __post_init__(self):
        if len(self.x) != self.box.n - 1:
            raise ValueError(f"expected {self.box.n - 1} band entries, got {len(self.x)}")

    def band(self, j: int, one: Any = 1, zero: Any = 0) -> Any:
        """x_j with x_0 = 1 and x_j = 0 outside 0..n-1"""
        if j == 0:
            return one
        if 1 <= j <= self.box.n - 1:
            return self.x[j - 1]
        return zero

    def matrix(self, one: Any = 1, zero: Any = 0) -> List[List[Any]]:
        """Dense n x n form, entry (r, s) = x_{s-r}"""
        n = self.box.n
        return [[self.band(s - r, one, zero) if s >= r else zero for s in range(n)] for r in range(n)]

    @property
    def has_provenance(self) -> bool:
        return self.t is not None and self.index is not None


@dataclass(frozen=True)
class FactorGrid:
    """Parameters a_(i,j) on the box B(d,c) for the simple-root factorization"""
    box: BoxShape
    a: Mapping[Tuple[int, int], Any]

    def __post_init__(self):
        cells = {(i, j) for i in range(1, self.box.d + 1) for j in range(1, self.box.c + 1)}
        if set(self.a) != cells:
            raise ValueError(f"factor grid must cover all {len(cells)} cells of B({self.box.d},{self.box.c})")
        object.__setattr__(self, "a", MappingProxyType(dict(self.a)))

    def cells(self) -> List[Tuple[int, int]]:
        return sorted(self.a)


@dataclass
class GWInvariant:
    """Gromov-Witten invariant with numeric rounding diagnostics"""
    value: int
    residual: float
    raw: complex = 0j


@dataclass
class NumericExpansion:
    """Schur coefficients of an evaluation oracle"""
    coefficients: Dict[Partition, complex]
    degree: Optional[int] = None
    filtered_residual: float = 0.0


@dataclass
class TnnCertificate:
    """Outcome of a total nonnegativity test"""
    ok: bool
    method: MinorMethod
    minors_checked: int = 0
    rows: Optional[Tuple[int, ...]] = None
    cols: Optional[Tuple[int, ...]] = None
    value: Optional[float] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class CheckReport:
    """Worst-case residual of an identity check, with the witness attaining it"""
    check: str
    box: BoxShape
    max_residual: float
    witness: Dict[str, Any] = field(default_factory=dict)
    max_abs_deviation: float = 0.0
    tolerance: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.tolerance is None or self.max_residual < self.tolerance


@dataclass
class InequalityReport:
    """Scan of |S_lambda(zeta^I)| against S_lambda(zeta^I_0)"""
    box: BoxShape
    violations: List[Dict[str, Any]] = field(default_factory=list)
    maximizers: Dict[Partition, List[IndexTuple]] = field(default_factory=dict)
    max_excess: float = float("-inf")
    cells_checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class GWRow:
    """One Gromov-Witten invariant computed by both engines"""
    box: BoxShape
    lam: Partition
    mu: Partition
    nu: Partition
    k: int
    value: int
    vi: GWInvariant

    @property
    def agrees(self) -> bool:
        return self.value == self.vi.value
