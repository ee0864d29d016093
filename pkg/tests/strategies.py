"""
Hypothesis strategies for boxes, partitions and index tuples
"""

from hypothesis import strategies as st

from app.models import BoxShape, Partition
from app.partitions import enumerate_box
from app.rootdata import enumerate_index_tuples

SMALL_BOXES = [BoxShape(d, n) for n in range(2, 8) for d in range(1, n)]
RING_BOXES = [BoxShape(2, 4), BoxShape(2, 5), BoxShape(3, 6)]

boxes = st.sampled_from(SMALL_BOXES)


@st.composite
def box_and_partition(draw, pool=SMALL_BOXES):
    box = draw(st.sampled_from(pool))
    return box, draw(st.sampled_from(enumerate_box(box)))


@st.composite
def box_and_index(draw, pool=SMALL_BOXES):
    box = draw(st.sampled_from(pool))
    return box, draw(st.sampled_from(enumerate_index_tuples(box)))


partitions = st.lists(st.integers(min_value=0, max_value=6), max_size=6).map(
    lambda parts: Partition(tuple(sorted(parts, reverse=True)))
)

complex_values = st.builds(
    complex,
    st.floats(min_value=-2, max_value=2, allow_nan=False),
    st.floats(min_value=-2, max_value=2, allow_nan=False),
)
