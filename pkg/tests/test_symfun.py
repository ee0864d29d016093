"""
Tests for elementary, complete homogeneous and Schur polynomial evaluation
"""

import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from app.errors import DegenerateInputError
from app.models import BoxShape, Partition, SchurMethod
from app.partitions import enumerate_box
from app.symfun import eval_elementary, eval_homogeneous, eval_schur
from tests.strategies import complex_values

METHODS = list(SchurMethod)


def test_elementary_and_homogeneous_values():
    z = [1, 2, 3]
    assert eval_elementary(2, z) == pytest.approx(11)
    assert eval_elementary(4, z) == 0
    assert eval_homogeneous(2, z) == pytest.approx(25)
    assert eval_homogeneous(0, z) == 1
    assert eval_homogeneous(-1, z) == 0


@pytest.mark.parametrize("method", METHODS)
def test_schur_example(method):
    assert eval_schur(Partition.of(2, 1), [1, 2, 3], method) == pytest.approx(60)


@pytest.mark.parametrize("method", METHODS)
def test_schur_edge_cases(method):
    assert eval_schur(Partition(), [2, 5], method) == 1
    assert eval_schur(Partition.of(1, 1, 1), [2, 5], method) == 0


def test_bialternant_needs_distinct_entries():
    with pytest.raises(DegenerateInputError):
        eval_schur(Partition.of(1), [1, 1], SchurMethod.BIALTERNANT)
    assert eval_schur(Partition.of(1), [1, 1], SchurMethod.DUAL_JT) == pytest.approx(2)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([BoxShape(d, n) for n in range(2, 7) for d in range(1, min(n, 4))]),
    st.data(),
)
def test_methods_agree(box, data):
    z = data.draw(st.lists(complex_values, min_size=box.d, max_size=box.d))
    assume(all(abs(a - b) > 0.1 for a, b in itertools.combinations(z, 2)))
    lam = data.draw(st.sampled_from(enumerate_box(box)))
    values = [complex(eval_schur(lam, z, method)) for method in METHODS]
    for value in values[1:]:
        assert value == pytest.approx(values[0], rel=1e-6, abs=1e-6)


def test_schur_of_single_row_and_column():
    z = [0.5, -1.5, 2j]
    assert eval_schur(Partition.of(3), z) == pytest.approx(eval_homogeneous(3, z))
    assert eval_schur(Partition.of(1, 1, 1), z) == pytest.approx(eval_elementary(3, z))


@settings(max_examples=60)
@given(
    st.lists(st.integers(min_value=0, max_value=3), max_size=3).map(
        lambda parts: Partition(tuple(sorted(parts, reverse=True)))
    ),
    st.lists(complex_values, min_size=3, max_size=3),
    st.floats(min_value=0.25, max_value=2.0),
)
def test_schur_is_homogeneous(lam, z, t):
    scaled = eval_schur(lam, [t * v for v in z])
    expected = t ** lam.size() * eval_schur(lam, z)
    bound = t ** lam.size() * abs(eval_schur(lam, [abs(v) for v in z]))
    assert abs(complex(scaled) - complex(expected)) <= 1e-8 * (1 + bound)
