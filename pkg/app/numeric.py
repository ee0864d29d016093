"""
Numeric carrier for complex values (ComplexValue)

Two interchangeable carriers share one interface: binary64 backed by numpy and
an extended-precision carrier backed by mpmath. Everything numeric in the
toolkit goes through the active carrier, so a single setting switches the
precision of the whole computation.
"""

from abc import ABC, abstractmethod
from contextlib import AbstractContextManager, nullcontext
from typing import Any, Hashable, List, Sequence

import mpmath as mp
import numpy as np

from app.config import Settings, get_settings

# exact values of exp(i*pi*k/2)
_QUARTER_TURNS = (1, 1j, -1, -1j)
_DOUBLE_EPS = float(np.finfo(np.float64).eps)


class Carrier(ABC):
    """Arithmetic backend for ComplexValue"""

    name: str = "abstract"

    @property
    @abstractmethod
    def key(self) -> Hashable:
        """Cache key distinguishing carriers and precisions"""

    @property
    @abstractmethod
    def eps(self) -> float:
        """Unit roundoff of the carrier"""

    @abstractmethod
    def scalar(self, value: Any) -> Any:
        """Convert a number into the carrier's complex type"""

    @abstractmethod
    def real(self, value: Any) -> Any:
        """Convert a number into the carrier's real type"""

    @abstractmethod
    def _exp_i_pi(self, numerator: int, denominator: int) -> Any:
        """exp(i*pi*numerator/denominator) for a reduced generic angle"""

    @abstractmethod
    def _sin_pi(self, numerator: int, denominator: int) -> Any:
        """sin(pi*numerator/denominator) for a generic angle"""

    @abstractmethod
    def _det(self, rows: Sequence[Sequence[Any]]) -> Any:
        """Determinant of a nonempty square matrix"""

    @abstractmethod
    def sum(self, values: Sequence[Any]) -> Any:
        """Accurate deterministic sum"""

    @abstractmethod
    def matmul(self, a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> List[List[Any]]:
        """Matrix product"""

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Carrier) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def workprec(self) -> AbstractContextManager:
        """Context running arithmetic at the carrier's precision"""
        return nullcontext()

    def rounding_threshold(self, threshold: float) -> float:
        """A binary64 residual bound rescaled to this carrier's unit roundoff"""
        return threshold * self.eps / _DOUBLE_EPS

    @property
    def zero(self) -> Any:
        return self.scalar(0)

    @property
    def one(self) -> Any:
        return self.scalar(1)

    def root(self, doubled: int, n: int) -> Any:
        """exp(2*pi*i*(doubled/2)/n) = exp(i*pi*doubled/n)"""
        r = doubled % (2 * n)
        if (2 * r) % n == 0:
            return self.scalar(_QUARTER_TURNS[(2 * r) // n])
        return self._exp_i_pi(r, n)

    def sin_pi(self, numerator: int, denominator: int) -> Any:
        """sin(pi*numerator/denominator), exact at multiples of pi/2"""
        if numerator % denominator == 0:
            return self.real(0)
        if (2 * numerator) % denominator == 0:
            half_turns = (2 * numerator) // denominator
            return self.real(1 if half_turns % 4 == 1 else -1)
        return self._sin_pi(numerator, denominator)

    def det(self, rows: Sequence[Sequence[Any]]) -> Any:
        """Determinant by LU with partial pivoting; the empty matrix has determinant one"""
        if len(rows) == 0:
            return self.one
        return self._det(rows)

    def to_complex(self, value: Any) -> complex:
        return complex(value)

    def real_part(self, value: Any) -> float:
        return float(complex(value).real)

    def is_finite(self, value: Any) -> bool:
        c = complex(value)
        return bool(np.isfinite(c.real) and np.isfinite(c.imag))


class DoubleCarrier(Carrier):
    """binary64 carrier on top of numpy"""

    name = "double"

    @property
    def key(self) -> Hashable:
        return ("double",)

    @property
    def eps(self) -> float:
        return _DOUBLE_EPS

    def scalar(self, value: Any) -> complex:
        return complex(value)

    def real(self, value: Any) -> float:
        return float(value)

    def _exp_i_pi(self, numerator: int, denominator: int) -> complex:
        return complex(np.exp(1j * np.pi * numerator / denominator))

    def _sin_pi(self, numerator: int, denominator: int) -> float:
        return float(np.sin(np.pi * numerator / denominator))

    def _det(self, rows: Sequence[Sequence[Any]]) -> complex:
        return complex(np.linalg.det(np.array(rows, dtype=np.complex128)))

    def sum(self, values: Sequence[Any]) -> complex:
        if len(values) == 0:
            return 0j
        # numpy reduces with pairwise summation in a fixed order
        return complex(np.sum(np.array(values, dtype=np.complex128)))

    def matmul(self, a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> List[List[complex]]:
        product = np.array(a, dtype=np.complex128) @ np.array(b, dtype=np.complex128)
        return [[complex(v) for v in row] for row in product]


class ExtendedCarrier(Carrier):
    """Arbitrary-precision carrier on top of mpmath"""

    name = "extended"

    def __init__(self, bits: int):
        self.bits = bits

    @property
    def key(self) -> Hashable:
        return ("extended", self.bits)

    @property
    def eps(self) -> float:
        return 2.0 ** (1 - self.bits)

    def activate(self) -> None:
        mp.mp.prec = self.bits

    def workprec(self) -> AbstractContextManager:
        return mp.workprec(self.bits)

    def scalar(self, value: Any) -> mp.mpc:
        return mp.mpc(value)

    def real(self, value: Any) -> mp.mpf:
        return mp.mpf(value)

    def _exp_i_pi(self, numerator: int, denominator: int) -> mp.mpc:
        with self.workprec():
            return mp.expjpi(mp.mpf(numerator) / denominator)

    def _sin_pi(self, numerator: int, denominator: int) -> mp.mpf:
        with self.workprec():
            return mp.sinpi(mp.mpf(numerator) / denominator)

    def _det(self, rows: Sequence[Sequence[Any]]) -> mp.mpc:
        with self.workprec():
            return mp.mpc(mp.det(mp.matrix([[mp.mpc(v) for v in row] for row in rows])))

    def sum(self, values: Sequence[Any]) -> mp.mpc:
        with self.workprec():
            return mp.mpc(mp.fsum(values))

    def matmul(self, a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> List[List[mp.mpc]]:
        product = mp.matrix([[mp.mpc(v) for v in row] for row in a]) * \
            mp.matrix([[mp.mpc(v) for v in row] for row in b])
        return [[mp.mpc(product[i, j]) for j in range(product.cols)] for i in range(product.rows)]

    def is_finite(self, value: Any) -> bool:
        value = mp.mpc(value)
        return bool(mp.isfinite(value.real) and mp.isfinite(value.imag))


def carrier_for(settings: Settings) -> Carrier:
    """Carrier selected by the settings"""
    bits = settings.extended_bits
    if bits is None:
        return DoubleCarrier()
    return ExtendedCarrier(bits)


_carrier: Carrier = DoubleCarrier()


def activate_carrier(settings: Settings) -> Carrier:
    """Make the carrier described by the settings the active one"""
    global _carrier
    _carrier = carrier_for(settings)
    if isinstance(_carrier, ExtendedCarrier):
        _carrier.activate()
    return _carrier


def get_carrier() -> Carrier:
    """Active carrier"""
    return _carrier


activate_carrier(get_settings())
