import numpy as np
import pytest
from hypothesis import given, strategies as st

from partdecomp.cellmod import specht_module
from partdecomp.errors import PSingularLabel
from partdecomp.fields import FieldSpec
from partdecomp.oracle import Identifier
from partdecomp.modules import composition_factors
from partdecomp.partition_core import Partition, count_standard_tableaux, is_p_regular, partitions_of
from partdecomp.specht import (
    gram_matrix,
    is_standard,
    specht_generators,
    specht_gram_rank,
    specht_matrix,
    standard_tableaux,
    straighten,
)

P = Partition.of
SMALL = [lam for m in range(1, 6) for lam in partitions_of(m)]


def _compose(a, b):
    return tuple(a[b[k] - 1] for k in range(len(b)))


@pytest.mark.parametrize("lam", SMALL, ids=str)
def test_tableaux_count_and_standardness(lam):
    tabs = standard_tableaux(lam)
    assert len(tabs) == count_standard_tableaux(lam)
    assert all(is_standard(t) for t in tabs)
    for t in tabs:
        assert straighten(t) == {t: 1}


@pytest.mark.parametrize("lam", SMALL, ids=str)
def test_coxeter_relations(lam):
    gens = specht_generators(lam)
    d = len(standard_tableaux(lam))
    eye = np.eye(d, dtype=np.int64)
    for i, s in enumerate(gens):
        assert np.array_equal(s @ s, eye)
        if i + 1 < len(gens):
            t = gens[i + 1]
            assert np.array_equal(s @ t @ s, t @ s @ t)
        for u in gens[i + 2:]:
            assert np.array_equal(s @ u, u @ s)


@given(st.sampled_from([lam for lam in SMALL if lam.size() >= 3]), st.data())
def test_action_is_a_homomorphism(lam, data):
    m = lam.size()
    a = tuple(data.draw(st.permutations(range(1, m + 1))))
    b = tuple(data.draw(st.permutations(range(1, m + 1))))
    assert np.array_equal(specht_matrix(lam, _compose(a, b)), specht_matrix(lam, a) @ specht_matrix(lam, b))


def test_trivial_and_sign():
    fs = FieldSpec.prime(5, 1)
    triv = specht_module(P(4), fs)
    sign = specht_module(P(1, 1, 1, 1), fs)
    assert triv.dim == 1 and all(g[0, 0] == 1 for g in triv.gens)
    assert sign.dim == 1 and all(g[0, 0] == 4 for g in sign.gens)
    assert specht_module(P(2, 1), fs).dim == 2


def test_gram_matrix_is_symmetric():
    for lam in SMALL:
        g = gram_matrix(lam)
        assert np.array_equal(g, g.T)


def test_gram_rank_examples():
    assert specht_gram_rank(P(2, 1), 3) == 1
    assert specht_gram_rank(P(2, 2), 3) == 1
    assert specht_gram_rank(P(2, 1), FieldSpec.prime(3, 1)) == 1
    for m in range(1, 6):
        assert specht_gram_rank(P(m), 3) == 1
    with pytest.raises(PSingularLabel):
        specht_gram_rank(P(1, 1, 1), 3)


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("m", [3, 4, 5])
def test_gram_rank_is_head_dimension(m, p):
    """rank of the Gram matrix mod p equals dim D^lam found by chopping S^lam."""
    fs = FieldSpec.prime(p, 1)
    ident = Identifier(m, fs, "S")
    for lam in partitions_of(m):
        if not is_p_regular(lam, p):
            continue
        factors = composition_factors(specht_module(lam, fs), np.random.default_rng(1))
        dims = {ident.identify(f): f.dim for f in factors}
        assert dims[lam] == specht_gram_rank(lam, p)
