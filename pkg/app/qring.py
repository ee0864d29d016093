"""
Exact arithmetic in Lambda_{d,n} = Z[X_1..X_d]/(Y_{c+1}, ..., Y_{n-1})

Elements are kept in the Schubert basis {q^k s_lambda}. Multiplication by a
generator X_k is the dual quantum Pieri rule; general products expand the
second factor into X-monomials and fold the Pieri rule over them.
"""

from functools import lru_cache
from typing import Iterator, List, Tuple

import sympy

from app.config import get_settings
from app.errors import PieriRangeError, QGrassError
from app.models import BoxShape, Partition, RingElement, XMonomial
from app.partitions import complement_rectangle, conjugate, enumerate_box, poincare_dual


def _strips(lower: Tuple[int, ...], upper: Tuple[int, ...], total: int) -> Iterator[Tuple[int, ...]]:
    """Tuples v with lower[j] <= v[j] <= upper[j] summing to total"""
    if not lower:
        if total == 0:
            yield ()
        return
    rest_min = sum(lower[1:])
    rest_max = sum(upper[1:])
    for v in range(max(lower[0], total - rest_max), min(upper[0], total - rest_min) + 1):
        for tail in _strips(lower[1:], upper[1:], total - v):
            yield (v,) + tail


@lru_cache(maxsize=None)
def pieri_terms(lam: Partition, k: int, box: BoxShape) -> Tuple[Tuple[int, Partition], ...]:
    """(q-degree, partition) terms of X_k * s_lambda, each with coefficient one"""
    if not 1 <= k <= box.d:
        raise PieriRangeError(f"Pieri index {k} outside 1..{box.d}")
    c = box.c
    lt = conjugate(lam.require_in(box)).padded(c)
    terms: List[Tuple[int, Partition]] = []

    # classical: nu^t / lambda^t a horizontal strip inside the box
    upper = (box.d,) + lt[:-1]
    for nut in _strips(lt, upper, lam.size() + k):
        terms.append((0, conjugate(Partition(nut))))

    # quantum: mu^t interlaces lambda^t - 1
    target = lam.size() + k - box.n
    if lt[-1] >= 1 and target >= 0:
        lower = tuple(max(0, v - 1) for v in lt[1:]) + (0,)
        upper = tuple(v - 1 for v in lt)
        for mut in _strips(lower, upper, target):
            terms.append((1, conjugate(Partition(mut))))
    return tuple(terms)


def pieri_multiply(el: RingElement, k: int) -> RingElement:
    """X_k * el in the Schubert basis"""
    if not 1 <= k <= el.box.d:
        raise PieriRangeError(f"Pieri index {k} outside 1..{el.box.d}")
    return RingElement.accumulate(
        el.box,
        (((qk + dq, nu), coeff) for (qk, lam), coeff in el.terms.items()
         for dq, nu in pieri_terms(lam, k, el.box)),
    )


def _generators(d: int) -> Tuple[sympy.Symbol, ...]:
    return sympy.symbols(f"X1:{d + 1}")


@lru_cache(maxsize=None)
def expand_schubert_poly(lam: Partition, box: BoxShape) -> Tuple[XMonomial, ...]:
    """Signed X-monomials of det(X_{lambda^t_i - i + j}) of size c, X_0 = 1"""
    lt = conjugate(lam.require_in(box)).padded(box.c)
    gens = _generators(box.d)

    def entry(m: int):
        if m == 0:
            return sympy.Integer(1)
        if 1 <= m <= box.d:
            return gens[m - 1]
        return sympy.Integer(0)

    c = box.c
    matrix = sympy.Matrix(c, c, lambda i, j: entry(lt[i] - (i + 1) + (j + 1)))
    poly = sympy.Poly(sympy.expand(matrix.det(method="berkowitz")), *gens)
    monomials = [XMonomial(tuple(int(e) for e in exps), int(coeff)) for exps, coeff in poly.terms()]
    return tuple(sorted(monomials, key=lambda m: m.exponents, reverse=True))


def apply_monomial(el: RingElement, monomial: XMonomial) -> RingElement:
    """monomial * el by repeated Pieri steps"""
    for j, power in enumerate(monomial.exponents, start=1):
        for _ in range(power):
            el = pieri_multiply(el, j)
    return el.scale(monomial.coeff)


def _multiply(a: RingElement, b: RingElement) -> RingElement:
    result = RingElement.zero(a.box)
    for (k, mu), coeff in b.items():
        for monomial in expand_schubert_poly(mu, b.box):
            result = result + apply_monomial(a, monomial).shift(k).scale(coeff)
    return result


def multiply(a: RingElement, b: RingElement) -> RingElement:
    """Product in Lambda_{d,n}"""
    if a.box != b.box:
        raise QGrassError(f"cannot multiply elements of {a.box} and {b.box}")
    product = _multiply(a, b)
    if get_settings().debug_symmetric:
        swapped = _multiply(b, a)
        if swapped != product:
            raise QGrassError(f"product is not symmetric: {product!r} vs {swapped!r}")
    return product


def schubert(lam: Partition, box: BoxShape) -> RingElement:
    """s_lambda"""
    return RingElement.basis(box, lam.require_in(box))


def q_element(box: BoxShape) -> RingElement:
    return RingElement.basis(box, Partition(), 1)


def x_element(j: int, box: BoxShape) -> RingElement:
    """The generator X_j = s_(1^j)"""
    return pieri_multiply(RingElement.one(box), j)


def relation_element(m: int, box: BoxShape) -> RingElement:
    """Y_m from Y_m = sum_{j=1..d} (-1)^(j+1) X_j Y_{m-j}, Y_0 = 1"""
    if m < 0:
        return RingElement.zero(box)
    ys = [RingElement.one(box)]
    for step in range(1, m + 1):
        y = RingElement.zero(box)
        for j in range(1, min(box.d, step) + 1):
            term = pieri_multiply(ys[step - j], j)
            y = y + (term if j % 2 else term.scale(-1))
        ys.append(y)
    return ys[m]


@lru_cache(maxsize=None)
def _product_table(box: BoxShape, lam: Partition, mu: Partition) -> RingElement:
    return multiply(schubert(lam, box), schubert(mu, box))


def structure_constant(lam: Partition, mu: Partition, nu: Partition, k: int, box: BoxShape) -> int:
    """Coefficient of q^k s_{PD(nu)} in s_lambda * s_mu"""
    for p in (lam, mu, nu):
        p.require_in(box)
    if box.c * box.d + k * box.n != lam.size() + mu.size() + nu.size():
        return 0
    first, second = sorted((lam, mu), key=Partition.sort_key)
    product = _product_table(box, first, second)
    return product.coefficient(poincare_dual(nu, box), k)


def admissible_triples(box: BoxShape) -> Iterator[Tuple[Partition, Partition, Partition, int]]:
    """All (lambda, mu, nu, k) with cd + kn = |lambda| + |mu| + |nu|, k >= 0"""
    shapes = enumerate_box(box)
    for lam in shapes:
        for mu in shapes:
            for nu in shapes:
                excess = lam.size() + mu.size() + nu.size() - box.c * box.d
                if excess >= 0 and excess % box.n == 0:
                    yield lam, mu, nu, excess // box.n


def top_class(box: BoxShape) -> RingElement:
    """s_(c^d)"""
    return schubert(complement_rectangle(box), box)


def to_x_polynomial(el: RingElement) -> sympy.Expr:
    """Expression in X_1..X_d and q representing el"""
    gens = _generators(el.box.d)
    q = sympy.Symbol("q")
    expr = sympy.Integer(0)
    for (k, lam), coeff in el.items():
        poly = sympy.Integer(0)
        for monomial in expand_schubert_poly(lam, el.box):
            term = sympy.Integer(monomial.coeff)
            for g, power in zip(gens, monomial.exponents):
                term *= g ** power
            poly += term
        expr += coeff * q ** k * poly
    return sympy.expand(expr)
