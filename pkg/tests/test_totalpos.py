"""
Tests for the totally positive family and its factorization
"""

import math

import pytest

from app.errors import ComplexInputError, VanishingMinorError
from app.models import BoxShape, FactorOrder, IndexTuple, MinorMethod, Partition, ToeplitzPoint
from app.partitions import enumerate_box
from app.rootdata import base_index
from app.toeplitz import corner_minor, point_from_index, real_fiber_indices, schur_value
from app.totalpos import (
    closed_form_grid, factor_params, grid_cells, hook_schur_value, is_totally_nonnegative, max_grid_deviation,
    negative_rectangle, positive_point, positivity_certificate, reconstruct, reconstruct_matrix, rectangles,
    round_trip_error, schur_criterion,
)

BOXES = [BoxShape(1, 3), BoxShape(2, 4), BoxShape(2, 5), BoxShape(3, 6), BoxShape(2, 7)]


def _close(a, b, tol=1e-9):
    return abs(complex(a) - complex(b)) <= tol * max(1.0, abs(complex(b)))


@pytest.mark.parametrize("box", BOXES)
def test_positive_point_is_the_base_fiber_point(box):
    for t in (0.5, 1.0, 2.0):
        expected = point_from_index(t, base_index(box))
        assert all(_close(a, b) for a, b in zip(positive_point(t, box).x, expected.x))


@pytest.mark.parametrize("box", BOXES)
def test_hook_formula(box):
    u = positive_point(1.5, box)
    for lam in enumerate_box(box):
        value = hook_schur_value(lam, 1.5, box)
        assert value > 0
        assert _close(value, schur_value(lam, u))


def test_hook_formula_vanishes_outside_box():
    assert hook_schur_value(Partition.of(3), 1.0, BoxShape(2, 4)) == 0


@pytest.mark.parametrize("method", list(MinorMethod))
@pytest.mark.parametrize("box", [BoxShape(2, 4), BoxShape(2, 5), BoxShape(1, 4)])
def test_positive_point_is_totally_nonnegative(box, method):
    certificate = is_totally_nonnegative(positive_point(1.0, box), method)
    assert certificate
    assert certificate.minors_checked > 0


def test_real_negative_point():
    box = BoxShape(2, 4)
    u = point_from_index(1, IndexTuple((3, 5), box))
    assert _close(u.x[0], -math.sqrt(2))
    certificate = is_totally_nonnegative(u)
    assert not certificate
    assert certificate.value < 0
    assert not positivity_certificate(u)
    lam, value = negative_rectangle(u)
    assert lam == Partition.of(1) and value < 0
    assert not schur_criterion(u)


@pytest.mark.parametrize("box", [BoxShape(2, 4), BoxShape(2, 5), BoxShape(1, 4), BoxShape(3, 6)])
def test_only_the_base_real_point_is_positive(box):
    positive = [
        index for index in real_fiber_indices(box)
        if is_totally_nonnegative(point_from_index(1, index), MinorMethod.ALL_MINORS)
    ]
    assert positive == [base_index(box)]


def test_complex_point_is_rejected():
    u = point_from_index(1, IndexTuple((-1, 3), BoxShape(2, 4)))
    with pytest.raises(ComplexInputError):
        is_totally_nonnegative(u)
    with pytest.raises(ComplexInputError):
        factor_params(u)
    assert not schur_criterion(u)


def test_closed_form_for_two_planes():
    grid = closed_form_grid(1.0, BoxShape(2, 4))
    half = 1 / math.sqrt(2)
    cells = grid_cells(grid)
    assert [(i, j) for i, j, _ in cells] == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert [value for _, _, value in cells] == pytest.approx([half, math.sqrt(2), math.sqrt(2), half])


@pytest.mark.parametrize("t", [0.1, 1.0, 3.0])
@pytest.mark.parametrize("box", BOXES)
def test_factorization_matches_closed_form(box, t):
    u = positive_point(t, box)
    grid = factor_params(u)
    assert max_grid_deviation(grid, closed_form_grid(t, box)) < 1e-8 * max(1.0, t)
    assert round_trip_error(u, grid) < 1e-8 * max(1.0, t) ** box.n
    assert all(value > 0 for _, _, value in grid_cells(grid))


@pytest.mark.parametrize("box", BOXES)
def test_factor_order_does_not_matter(box):
    grid = closed_form_grid(1.0, box)
    first = reconstruct_matrix(grid, FactorOrder.ROWS_FIRST)
    second = reconstruct_matrix(grid, FactorOrder.COLUMNS_FIRST)
    for row_a, row_b in zip(first, second):
        assert all(_close(a, b) for a, b in zip(row_a, row_b))
    rebuilt = reconstruct(grid, FactorOrder.COLUMNS_FIRST)
    assert all(_close(a, b) for a, b in zip(rebuilt.x, positive_point(1.0, box).x))


def test_identity_has_no_factorization():
    with pytest.raises(VanishingMinorError):
        factor_params(ToeplitzPoint(BoxShape(2, 4), (0.0, 0.0, 0.0)))


@pytest.mark.parametrize("box", BOXES)
def test_positivity_certificates(box):
    u = positive_point(1.0, box)
    assert len(rectangles(box)) == box.dimension
    assert positivity_certificate(u)
    assert negative_rectangle(u) is None
    assert schur_criterion(u, strict=True)


def test_hook_value_example():
    assert hook_schur_value(Partition.of(2, 1), 1.0, BoxShape(2, 4)) == pytest.approx(math.sqrt(2), abs=1e-12)


def test_hook_formula_in_a_larger_box():
    box = BoxShape(4, 7)
    u = positive_point(1.0, box)
    for lam in enumerate_box(box):
        assert _close(hook_schur_value(lam, 1.0, box), schur_value(lam, u), 1e-10)


@pytest.mark.parametrize("box", [BoxShape(2, 4), BoxShape(2, 5)], ids=str)
def test_other_real_points_have_a_negative_rectangle(box):
    others = [index for index in real_fiber_indices(box) if index != base_index(box)]
    assert others
    for index in others:
        u = point_from_index(1, index)
        lam, value = negative_rectangle(u)
        assert lam in rectangles(box) and value < 0
        assert not is_totally_nonnegative(u, MinorMethod.ALL_MINORS)


def _certificate_cases():
    for box in (BoxShape(1, 4), BoxShape(2, 4), BoxShape(2, 5), BoxShape(3, 6)):
        for t in (0.5, 1.0, 2.0):
            for index in real_fiber_indices(box):
                yield box, point_from_index(t, index)
        yield box, ToeplitzPoint(box, (0.0,) * (box.n - 1))


@pytest.mark.parametrize("box, u", list(_certificate_cases()))
def test_certificate_agrees_with_total_nonnegativity(box, u):
    nonnegative = bool(is_totally_nonnegative(u, MinorMethod.ALL_MINORS))
    corner = abs(complex(corner_minor(u, box.d))) > 1e-9
    assert positivity_certificate(u) == (nonnegative and corner)
