import pytest
from hypothesis import given, strategies as st

from partdecomp.abacus import (
    BetaSequence,
    beta_delta,
    beta_sequence,
    gamma,
    gamma_delta,
    marked_abacus,
    p_core,
    partition_of_beta,
    render_abacus,
)
from partdecomp.errors import BeadCountTooSmall
from partdecomp.partition_core import EMPTY, Partition, partitions_of

P = Partition.of

partitions = st.integers(0, 9).flatmap(lambda m: st.sampled_from(partitions_of(m)))
primes = st.sampled_from([3, 5, 7])


def test_beta_sequence_examples():
    assert beta_sequence(P(5, 4), 10).values == (14, 12, 7, 6, 5, 4, 3, 2, 1, 0)
    assert beta_sequence(EMPTY, 3).values == (2, 1, 0)
    assert beta_sequence(P(2, 1), 7).values == (8, 6, 4, 3, 2, 1, 0)


def test_too_few_beads():
    with pytest.raises(BeadCountTooSmall):
        beta_sequence(P(2, 1, 1), 2)


def test_partition_of_beta_examples():
    assert partition_of_beta(BetaSequence((14, 12, 7, 6, 5, 4, 3, 2, 1, 0))) == P(5, 4)
    assert partition_of_beta(BetaSequence((2, 1, 0))) == EMPTY
    assert partition_of_beta(BetaSequence((12, 9, 7, 6, 5, 4, 3, 2, 1, 0))) == P(3, 1)


def test_gamma_and_core_examples():
    assert gamma(P(5, 4), 10, 5) == (2, 2, 3, 1, 2)
    assert gamma(P(2, 1), 7, 5) == (1, 2, 1, 2, 1)
    for p in (3, 5, 7):
        assert gamma(EMPTY, p, p) == (1,) * p
    assert p_core(P(5, 4), 5) == P(3, 1)
    assert p_core(P(2, 1), 5) == P(2, 1)
    for p in (3, 5):
        for m in range(p):
            assert p_core(Partition((p - m,) + (1,) * m), p) == EMPTY


def test_marked_abacus_examples():
    assert beta_delta(P(2, 1), 7, 6) == (10, 8, 6, 4, 3, 2, 1, 0)
    assert beta_delta(EMPTY, 0, 0) == (0,)
    m = marked_abacus(P(2, 1), 7, 6, 5)
    assert m.marker == 0
    assert m.positions == frozenset({8, 6, 4, 3, 2, 1, 0})
    m = marked_abacus(P(1), 1, 0, 3)
    assert m.marker == 0 and m.positions == frozenset({1})
    assert gamma_delta(P(2, 1), 7, 6, 5) == (2, 2, 1, 2, 1)
    bumped = list(gamma(P(3), 3, 3))
    bumped[0] += 1
    assert gamma_delta(P(3), 3, 0, 3) == tuple(bumped)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_empty_partition_at_p(p):
    assert beta_delta(EMPTY, p, p - 1) == (2 * p - 1,) + tuple(range(p - 1, -1, -1))
    assert marked_abacus(EMPTY, p, p - 1, p).marker == p - 1
    assert gamma_delta(EMPTY, p, p - 1, p) == (1,) * (p - 1) + (2,)


def test_render_examples():
    text = render_abacus(marked_abacus(EMPTY, 3, 2, 3))
    lines = text.splitlines()
    assert len(lines) == 2
    assert lines[1].split() == ["o", "o", "o"]
    assert lines[0].count("v") == 1
    fig = render_abacus(marked_abacus(P(2, 1), 7, 6, 5)).splitlines()
    assert len(fig) == 1 + 2
    assert fig[0].split() == ["v"]


@given(partitions, st.integers(0, 6))
def test_beta_round_trip(lam, extra):
    b = lam.size() + extra
    assert partition_of_beta(beta_sequence(lam, b)) == lam


@given(partitions, primes, st.integers(0, 6))
def test_core_is_independent_of_bead_count(lam, p, extra):
    b = lam.size() + extra
    assert p_core(lam, p, b) == p_core(lam, p)
    assert sum(gamma(lam, b, p)) == b


@given(partitions, primes)
def test_core_size_and_weight(lam, p):
    core = p_core(lam, p)
    assert (lam.size() - core.size()) % p == 0
    assert p_core(core, p) == core


@given(partitions, primes, st.integers(-3, 12))
def test_render_line_count(lam, p, delta):
    b = max(len(lam), lam.size())
    m = marked_abacus(lam, b, delta, p)
    top = max(m.positions, default=-1)
    assert len(render_abacus(m).splitlines()) == 1 + -(-(top + 1) // p)
