import pytest
from hypothesis import given, strategies as st

from partdecomp.labeled import LabeledMatrix
from partdecomp.partition_core import EMPTY, Partition, partitions_up_to

P = Partition.of
LABELS = partitions_up_to(3).members


@st.composite
def matrices(draw):
    rows = LABELS
    cols = tuple(draw(st.lists(st.sampled_from(LABELS), min_size=1, max_size=len(LABELS), unique=True)))
    entries = tuple(tuple(draw(st.integers(0, 3)) for _ in cols) for _ in rows)
    return LabeledMatrix(rows, cols, entries, n=3, field={"p": 3, "ext": None}, delta="2")


@given(matrices())
def test_json_round_trip(m):
    back = LabeledMatrix.from_json(m.to_json())
    assert back == m
    assert back.field == m.field and back.delta == m.delta


@given(matrices())
def test_csv_round_trip(m):
    assert LabeledMatrix.from_csv(m.to_csv()) == LabeledMatrix(m.rows, m.cols, m.entries)


@given(matrices())
def test_identity_is_neutral(m):
    ident = LabeledMatrix.identity(m.cols)
    assert (m @ ident).same_entries(m)


def test_label_aligned_comparison():
    a = LabeledMatrix.from_mapping([EMPTY, P(1)], [EMPTY, P(1)], {(EMPTY, P(1)): 1})
    b = LabeledMatrix.from_mapping([P(1), EMPTY], [P(1), EMPTY], {(EMPTY, P(1)): 1})
    assert a.same_entries(b)
    assert a.diff(b) == []
    c = LabeledMatrix.from_mapping([EMPTY, P(1)], [EMPTY, P(1)], {(P(1), P(1)): 2})
    assert set(a.diff(c)) == {(EMPTY, P(1), 1, 0), (P(1), P(1), 0, 2)}


def test_rejects_bad_shapes():
    with pytest.raises(ValueError):
        LabeledMatrix((EMPTY,), (EMPTY,), ((1, 2),))
    with pytest.raises(ValueError):
        LabeledMatrix((EMPTY, EMPTY), (EMPTY,), ((1,), (1,)))
    with pytest.raises(KeyError):
        LabeledMatrix.from_mapping([EMPTY], [EMPTY], {(EMPTY, P(1)): 1})


def test_render_uses_dots_for_zero():
    m = LabeledMatrix.identity([EMPTY, P(1)])
    lines = m.render().splitlines()
    assert lines[2].split() == ["∅", "|", "1", "."]
