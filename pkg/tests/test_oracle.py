from fractions import Fraction

import pytest

from partdecomp.decomposition import DecompRequest, decomp_char0, decomp_charp_theorem, sym_group_decomp
from partdecomp.errors import DeskScaleExceeded
from partdecomp.fields import FieldSpec
from partdecomp.oracle import decomposition_matrix_oracle, simple_labels, symmetric_group_oracle
from partdecomp.partition_core import EMPTY, Partition, partitions_up_to

P = Partition.of


def test_simple_labels():
    assert simple_labels(3, FieldSpec.prime(3, 1)) == partitions_up_to(3, 3).members
    assert EMPTY not in simple_labels(2, FieldSpec.prime(3, 0))
    assert simple_labels(0, FieldSpec.prime(3, 0)) == (EMPTY,)
    assert P(1, 1, 1) in simple_labels(3, FieldSpec.rationals(1))


def test_semisimple_example_is_identity():
    mat = decomposition_matrix_oracle(2, FieldSpec.prime(5, 3))
    assert mat.nonzero() == {(lam, lam): 1 for lam in partitions_up_to(2).members}


@pytest.mark.parametrize("p,n", [(3, 2), (5, 3)])
def test_oracle_matches_small_n_theorem(p, n):
    for delta in range(p):
        theorem = decomp_charp_theorem(DecompRequest(n, p, delta))
        oracle = decomposition_matrix_oracle(n, FieldSpec.prime(p, delta))
        assert theorem.diff(oracle) == []


def test_oracle_matches_quadratic_case():
    theorem = decomp_charp_theorem(DecompRequest(2, 3, "x"))
    oracle = decomposition_matrix_oracle(2, FieldSpec.quadratic(3, "x"))
    assert theorem.diff(oracle) == []


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("delta", [0, 1, 2, 3, Fraction(1, 2)])
def test_rational_oracle_matches_char0_chains(n, delta):
    oracle = decomposition_matrix_oracle(n, FieldSpec.rationals(delta))
    expected = decomp_char0(n, None if isinstance(delta, Fraction) else delta)
    assert expected.diff(oracle) == []


def test_symmetric_group_oracle_matches_closed_form():
    assert symmetric_group_oracle(4, 3).same_entries(sym_group_decomp(4, 3))
    assert symmetric_group_oracle(3, 3).same_entries(sym_group_decomp(3, 3))
    assert symmetric_group_oracle(5, 5).same_entries(sym_group_decomp(5, 5))


def test_seed_does_not_change_the_answer():
    fs = FieldSpec.prime(3, 2)
    first = decomposition_matrix_oracle(3, fs, seed=0)
    assert first.dumps() == decomposition_matrix_oracle(3, fs, seed=0).dumps()
    assert first.dumps() == decomposition_matrix_oracle(3, fs, seed=11).dumps()


def test_parallel_rows_match_serial():
    fs = FieldSpec.prime(3, 2)
    assert decomposition_matrix_oracle(3, fs, jobs=2).dumps() == decomposition_matrix_oracle(3, fs).dumps()


def test_desk_scale_bound():
    with pytest.raises(DeskScaleExceeded):
        decomposition_matrix_oracle(3, FieldSpec.prime(3, 2), bound=4)
    with pytest.raises(DeskScaleExceeded):
        symmetric_group_oracle(5, 3, bound=3)
