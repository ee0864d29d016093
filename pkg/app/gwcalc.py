"""
Vafa-Intriligator summation over the q = 1 fiber

Numeric oracle for the Schubert structure constants, Schubert expansion of
symmetric functions through evaluation at roots, and the quantum pairing.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from app.config import get_settings
from app.errors import PrecisionError
from app.models import BoxShape, GWInvariant, IndexTuple, NumericExpansion, Partition
from app.numeric import Carrier, get_carrier
from app.partitions import complement_rectangle, enumerate_box
from app.qring import admissible_triples, multiply, schubert
from app.rootdata import enumerate_index_tuples, root_values, vandermonde_sq
from app.symfun import eval_schur

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiberEntry:
    """Data attached to one point zeta^J of the fiber"""
    index: IndexTuple
    roots: Tuple[Any, ...]
    vand_sq: Any
    top: Any


@lru_cache(maxsize=64)
def _fiber_table(box: BoxShape, carrier: Carrier) -> Tuple[FiberEntry, ...]:
    logger.debug("building fiber table for %s on %s", box, carrier.key)
    top_shape = complement_rectangle(box)
    entries = []
    with carrier.workprec():
        for index in enumerate_index_tuples(box):
            roots = root_values(index, carrier=carrier)
            entries.append(FiberEntry(index, roots, vandermonde_sq(index, carrier), eval_schur(top_shape, roots, carrier=carrier)))
    return tuple(entries)


def fiber_table(box: BoxShape, carrier: Optional[Carrier] = None) -> Tuple[FiberEntry, ...]:
    """Roots, Vandermonde weights and S_(c^d) values over I_{d,n}, cached per carrier"""
    carrier = carrier or get_carrier()
    return _fiber_table(box, carrier)


@lru_cache(maxsize=4096)
def _schur_column(box: BoxShape, carrier: Carrier, lam: Partition) -> Tuple[Any, ...]:
    with carrier.workprec():
        return tuple(eval_schur(lam, entry.roots, carrier=carrier) for entry in _fiber_table(box, carrier))


def schur_column(lam: Partition, box: BoxShape, carrier: Optional[Carrier] = None) -> Tuple[Any, ...]:
    """S_lambda(zeta^J) for every J in fiber order"""
    carrier = carrier or get_carrier()
    return _schur_column(box, carrier, lam.require_in(box))


def clear_caches() -> None:
    _fiber_table.cache_clear()
    _schur_column.cache_clear()


def _round(
    total: Any,
    what: str,
    threshold: Optional[float] = None,
    carrier: Optional[Carrier] = None,
) -> GWInvariant:
    """Nearest integer to total; the threshold is a binary64 bound, rescaled for extended carriers"""
    carrier = carrier or get_carrier()
    threshold = get_settings().rounding_threshold if threshold is None else threshold
    threshold = carrier.rounding_threshold(threshold)
    raw = complex(total)
    value = int(round(raw.real))
    with carrier.workprec():
        residual = float(abs(carrier.scalar(total) - value))
    if residual >= threshold:
        logger.warning("rounding residual %.3e for %s exceeds %.1e", residual, what, threshold)
        raise PrecisionError(f"{what} is {raw} which is not within {threshold:g} of an integer", residual)
    return GWInvariant(value, residual, raw)


def vi_invariant(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    k: int,
    box: BoxShape,
    carrier: Optional[Carrier] = None,
) -> GWInvariant:
    """<sigma_lambda, sigma_mu, sigma_nu>_k by the Vafa-Intriligator sum"""
    carrier = carrier or get_carrier()
    for p in (lam, mu, nu):
        p.require_in(box)
    if box.c * box.d + k * box.n != lam.size() + mu.size() + nu.size():
        return GWInvariant(0, 0.0, 0j)
    table = fiber_table(box, carrier)
    columns = [schur_column(p, box, carrier) for p in (lam, mu, nu)]
    with carrier.workprec():
        terms = [
            columns[0][r] * columns[1][r] * columns[2][r] * entry.vand_sq / entry.top
            for r, entry in enumerate(table)
        ]
        total = carrier.sum(terms) / carrier.real(box.n) ** box.d
    return _round(total, f"<{lam!r}, {mu!r}, {nu!r}>_{k} in {box}", carrier=carrier)


def numeric_coefficients(
    values: Sequence[Any],
    box: BoxShape,
    t: Any = 1,
    carrier: Optional[Carrier] = None,
) -> Dict[Partition, Any]:
    """Schubert coefficients m_nu(t) of a function known by its values at t zeta^J"""
    carrier = carrier or get_carrier()
    table = fiber_table(box, carrier)
    if len(values) != len(table):
        raise ValueError(f"expected {len(table)} values, got {len(values)}")
    out: Dict[Partition, Any] = {}
    with carrier.workprec():
        t_inv = carrier.one / carrier.scalar(t)
        scale = carrier.real(box.n) ** box.d
        for nu in enumerate_box(box):
            terms = []
            for value, entry in zip(values, table):
                conj_roots = [t_inv * r.conjugate() for r in entry.roots]
                terms.append(carrier.scalar(value) * eval_schur(nu, conj_roots, carrier=carrier) * entry.vand_sq)
            out[nu] = carrier.sum(terms) / scale
    return out


def expand_numeric(
    oracle: Callable[[Sequence[Any]], Any],
    box: BoxShape,
    t: Any = 1,
    degree: Optional[int] = None,
    carrier: Optional[Carrier] = None,
) -> NumericExpansion:
    """Expand a symmetric function of known degree in Schur polynomials"""
    carrier = carrier or get_carrier()
    with carrier.workprec():
        values = [oracle(root_values(entry.index, t, carrier)) for entry in fiber_table(box, carrier)]
    coefficients = numeric_coefficients(values, box, t, carrier)
    filtered = 0.0
    if degree is not None:
        filtered = max(
            [0.0] + [abs(complex(v)) for nu, v in coefficients.items() if (nu.size() - degree) % box.n]
        )
    return NumericExpansion(coefficients, degree, filtered)


def quantum_pairing(lam: Partition, mu: Partition, box: BoxShape) -> Optional[Tuple[int, int]]:
    """(k, coefficient) of q^k s_(c^d) in s_lambda * s_mu, None when it vanishes"""
    product = multiply(schubert(lam, box), schubert(mu, box))
    top = complement_rectangle(box)
    for (k, shape), coeff in product.items():
        if shape == top:
            return k, coeff
    return None


def vi_table(box: BoxShape, carrier: Optional[Carrier] = None) -> List[Tuple[Partition, Partition, Partition, int, GWInvariant]]:
    """Every admissible triple with its Vafa-Intriligator value"""
    logger.info("summing Vafa-Intriligator invariants for %s", box)
    return [
        (lam, mu, nu, k, vi_invariant(lam, mu, nu, k, box, carrier))
        for lam, mu, nu, k in admissible_triples(box)
    ]
