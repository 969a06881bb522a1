"""Acceptance criteria 1-12.

Each test runs one criterion through ``verify.run_criterion``, prints a
single pass/fail line, and checks the runtime budget.  The matrices that the
criteria compare against are also spelled out literally here so that the
expected values do not live only inside the package.
"""

import pytest

from acceptance_log import LINES
from partdecomp import verify
from partdecomp.decomposition import DecompRequest, decomp_charp_theorem, sym_group_decomp
from partdecomp.partition_core import EMPTY, Partition

P = Partition.of

# upper bounds in seconds
BUDGETS = {1: 1, 2: 30, 3: 10, 4: 60, 5: 60, 6: 300, 7: 1200, 8: 300, 9: 600, 10: 600, 11: 60, 12: 120}


@pytest.mark.parametrize("number", sorted(verify.CRITERIA))
def test_criterion(number):
    res = verify.run_criterion(number, seed=0)
    print(res.line())
    LINES.append(res.line())
    assert res.passed, res.detail
    assert res.seconds < BUDGETS[number]


def test_kS4_matrix_literal():
    mat = sym_group_decomp(4, 3)
    rows = [P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]
    cols = [P(4), P(3, 1), P(2, 2), P(2, 1, 1)]
    table = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [1, 0, 1, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ]
    for r, vals in zip(rows, table):
        assert [mat.entry(r, c) for c in cols] == vals


def test_case_iii_matrix_literal():
    mat = decomp_charp_theorem(DecompRequest(3, 3, 2))
    rows = [EMPTY, P(1), P(2), P(1, 1), P(3), P(2, 1), P(1, 1, 1)]
    cols = [EMPTY, P(1), P(2), P(1, 1), P(3), P(2, 1)]
    table = [
        [1, 0, 0, 0, 1, 0],
        [0, 1, 1, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1],
    ]
    assert list(mat.rows) == rows and list(mat.cols) == cols
    assert [list(r) for r in mat.entries] == table
