from math import factorial

import pytest
from hypothesis import given, strategies as st

from partdecomp.diagram_algebra import (
    AlgebraElement,
    Diagram,
    LaurentPoly,
    all_diagrams,
    bell,
    cell_basis,
    e_diagram,
    enumerate_IT,
    generator,
    minimal_elements,
    mobius,
    multiply,
    multiply_elements,
    parse_diagram,
    permutation_diagram,
    propagating_count,
    psi_basis,
    refinement_less,
    refines,
    split_orbit,
)
from partdecomp.errors import DeltaNotInvertible, IncomparableDomain, MalformedDiagram, SizeMismatch

EXAMPLE = "1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5"


@st.composite
def diagrams_of(draw, n):
    m = 2 * n
    labels = []
    top = -1
    for _ in range(m):
        b = draw(st.integers(0, top + 1))
        labels.append(b)
        top = max(top, b)
    return Diagram(n, tuple(labels))


@st.composite
def triples(draw):
    n = draw(st.integers(1, 5))
    return tuple(draw(diagrams_of(n)) for _ in range(3))


def test_parse_example():
    d = parse_diagram(EXAMPLE, 5)
    assert sorted(map(sorted, d.blocks)) == sorted(map(sorted, [[1, 3, -3, -4], [2, -1], [4], [5, -2, -5]]))
    assert propagating_count(d) == 3
    assert parse_diagram("1 -1 | 2 -2", 2) == Diagram.identity(2)
    assert Diagram.from_json(d.to_json()) == d


@pytest.mark.parametrize("text", ["1 | 1 -1", "1 -1 |", "1 x", "1 -1 | 2", "3 -1 | 2 -2 | 1"])
def test_malformed(text):
    with pytest.raises(MalformedDiagram):
        parse_diagram(text, 2 if "2" in text else 1)


def test_figure_product():
    x = parse_diagram("1 | 2 3 -3 | 4 -1 | 5 -5 | -2 | -4", 5)
    y = parse_diagram(EXAMPLE, 5)
    prod, loops = multiply(x, y)
    assert loops == 1
    assert prod == parse_diagram("1 | 2 3 4 -3 -4 | 5 -2 -5 | -1", 5)


def test_named_products():
    for n in range(1, 6):
        ident = Diagram.identity(n)
        d = e_diagram(n, n)
        assert multiply(d, d) == (d, 1)
        assert propagating_count(d) == n - 1
        assert propagating_count(ident) == n
    p12 = generator("p2", (1, 2), 3).terms[0][0]
    assert multiply(p12, p12) == (p12, 0)


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        multiply(Diagram.identity(2), Diagram.identity(3))
    with pytest.raises(IncomparableDomain):
        refines(Diagram.identity(2), Diagram.identity(3))


def test_generator_pictures():
    assert generator("s", (1, 2), 2).terms[0][0] == parse_diagram("1 -2 | 2 -1", 2)
    assert generator("p1", (1,), 2).terms[0][0] == parse_diagram("1 | -1 | 2 -2", 2)
    with pytest.raises(ValueError):
        generator("s", (1, 1), 2)
    with pytest.raises(DeltaNotInvertible):
        generator("e", (1,), 2, delta=0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_generator_relations(n):
    delta = LaurentPoly.delta()
    ident = generator("id", (), n)
    for i in range(1, n):
        s = generator("s", (i, i + 1), n)
        p2 = generator("p2", (i, i + 1), n)
        assert multiply_elements(s, s) == ident
        assert multiply_elements(p2, p2) == p2
    for i in range(1, n + 1):
        p1 = generator("p1", (i,), n)
        e = generator("e", (i,), n)
        assert multiply_elements(p1, p1) == p1.scale(delta)
        assert multiply_elements(e, e) == e


def test_e_n_corner():
    # e_n x e_n only involves diagrams in which n and its bar are singletons.
    n = 3
    e = generator("e", (n,), n)
    for x in all_diagrams(n):
        out = multiply_elements(multiply_elements(e, AlgebraElement.basis(x)), e)
        for d, _ in out.terms:
            blocks = {frozenset(b) for b in d.blocks}
            assert frozenset({n}) in blocks and frozenset({-n}) in blocks


@given(st.integers(1, 5).flatmap(diagrams_of))
def test_identity_is_neutral(d):
    assert multiply(Diagram.identity(d.n), d) == (d, 0)
    assert multiply(d, Diagram.identity(d.n)) == (d, 0)


@given(triples())
def test_associativity(xyz):
    x, y, z = xyz
    xy, a = multiply(x, y)
    left, b = multiply(xy, z)
    yz, c = multiply(y, z)
    right, d = multiply(x, yz)
    assert left == right
    assert a + b == c + d


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(diagrams_of(n), diagrams_of(n))))
def test_propagating_filtration_and_flip(xy):
    x, y = xy
    prod, loops = multiply(x, y)
    assert propagating_count(prod) <= min(propagating_count(x), propagating_count(y))
    assert multiply(y.flip(), x.flip()) == (prod.flip(), loops)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_diagram_counts(n):
    assert len(all_diagrams(n)) == bell(2 * n)
    total = 0
    for t in range(n + 1):
        reps = cell_basis(n, t)
        assert len(enumerate_IT(n, t)) == factorial(t) * len(reps)
        total += factorial(t) * len(reps) ** 2
    assert total == bell(2 * n)


def test_bell_numbers():
    assert [bell(m) for m in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]


@pytest.mark.parametrize("n,t", [(2, 0), (2, 1), (3, 1), (3, 2)])
def test_split_orbit(n, t):
    for d in enumerate_IT(n, t):
        rep, perm = split_orbit(d)
        assert rep in cell_basis(n, t)
        assert multiply(rep, permutation_diagram(perm, n))[0] == d


@pytest.mark.parametrize("n,t", [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)])
def test_mobius_inversion(n, t):
    members = enumerate_IT(n, t)
    for x in members:
        for y in members:
            if refinement_less(x, y):
                interval = [z for z in members if refines(x, z) and refines(z, y)]
                assert sum(mobius(x, z) for z in interval) == 0
    x = members[0]
    covers = [y for y in members if refinement_less(x, y)
              and not any(refinement_less(x, z) and refinement_less(z, y) for z in members)]
    assert all(mobius(x, y) == -1 for y in covers)


@pytest.mark.parametrize("n,t", [(2, 1), (3, 1), (3, 2)])
def test_psi_basis_leading_terms(n, t):
    mins = minimal_elements(n, t)
    psis = psi_basis(n, t)
    assert len(psis) == len(mins)
    for y, psi in zip(mins, psis):
        coeffs = psi.as_dict()
        assert coeffs[y] == 1
        assert [d for d in mins if d in coeffs] == [y]


def test_laurent_arithmetic():
    d = LaurentPoly.delta()
    assert d * d == LaurentPoly.make({2: 1})
    assert (d + LaurentPoly.const(1)) - d == LaurentPoly.const(1)
    assert str(LaurentPoly.make({1: 1, 0: -2})) == "δ - 2"
