"""Integral Specht modules of the symmetric group.

Basis: standard polytabloids ``e_T``.  Non-standard polytabloids are
rewritten with Garnir relations.  The integer matrices are later reduced
into whatever field is needed.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from .errors import PSingularLabel
from .fields import Field
from .linalg import rank
from .partition_core import Partition, is_p_regular

Tableau = tuple[tuple[int, ...], ...]


def _columns(t: Tableau) -> list[list[int]]:
    width = len(t[0]) if t else 0
    return [[row[c] for row in t if len(row) > c] for c in range(width)]


def _from_columns(shape: tuple[int, ...], cols: list[list[int]]) -> Tableau:
    return tuple(tuple(cols[c][r] for c in range(part)) for r, part in enumerate(shape))


def is_standard(t: Tableau) -> bool:
    rows_ok = all(row[i] < row[i + 1] for row in t for i in range(len(row) - 1))
    return rows_ok and all(col[i] < col[i + 1] for col in _columns(t) for i in range(len(col) - 1))


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> tuple[Tableau, ...]:
    """Standard Young tableaux of shape ``lam``, sorted by row reading word."""
    m = lam.size()
    if m == 0:
        return ((),)
    out = []
    for r in range(1, len(lam) + 1):
        if lam[r + 1] < lam[r]:
            smaller = lam.remove_node(r)
            for t in standard_tableaux(smaller):
                rows = [list(row) for row in t] + [[]]
                rows[r - 1].append(m)
                out.append(tuple(tuple(row) for row in rows if row))
    return tuple(sorted(out))


def _perm_sign(seq: list[int]) -> int:
    """Sign of the permutation sending position i to ``seq[i]``."""
    seen = [False] * len(seq)
    sign = 1
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = seq[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _column_sort(t: Tableau) -> tuple[int, Tableau]:
    shape = tuple(len(row) for row in t)
    sign = 1
    cols = []
    for col in _columns(t):
        order = sorted(range(len(col)), key=col.__getitem__)
        sign *= _perm_sign(order)
        cols.append(sorted(col))
    return sign, _from_columns(shape, cols)


@lru_cache(maxsize=None)
def straighten(t: Tableau) -> dict[Tableau, int]:
    """Express ``e_t`` in the standard polytabloid basis."""
    sign, t = _column_sort(t)
    if is_standard(t):
        return {t: sign}
    i, j = next(
        (r, c)
        for r, row in enumerate(t)
        for c in range(len(row) - 1)
        if row[c] > row[c + 1]
    )
    col_a = [(r, j) for r in range(i, len(t)) if len(t[r]) > j]
    col_b = [(r, j + 1) for r in range(0, i + 1)]
    slots = col_a + col_b
    values = [t[r][c] for r, c in slots]
    pool = sorted(values)
    out: dict[Tableau, int] = {}
    for chosen in combinations(pool, len(col_a)):
        rest = [v for v in pool if v not in chosen]
        new_vals = list(chosen) + rest
        if new_vals == values:
            continue
        perm_sign = _perm_sign([values.index(v) for v in new_vals])
        rows = [list(row) for row in t]
        for (r, c), v in zip(slots, new_vals):
            rows[r][c] = v
        for std, coeff in straighten(tuple(tuple(row) for row in rows)).items():
            out[std] = out.get(std, 0) - sign * perm_sign * coeff
    return {k: v for k, v in out.items() if v}


def act_on_tableau(perm: tuple[int, ...], t: Tableau) -> Tableau:
    """Replace each entry ``a`` by ``perm[a-1]``."""
    return tuple(tuple(perm[a - 1] for a in row) for row in t)


def transposition(i: int, m: int) -> tuple[int, ...]:
    perm = list(range(1, m + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


@lru_cache(maxsize=None)
def specht_matrix(lam: Partition, perm: tuple[int, ...]) -> np.ndarray:
    """Integer matrix of ``perm`` on the standard polytabloid basis (column convention)."""
    basis = standard_tableaux(lam)
    index = {t: k for k, t in enumerate(basis)}
    out = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for j, t in enumerate(basis):
        for std, coeff in straighten(act_on_tableau(perm, t)).items():
            out[index[std], j] += coeff
    return out


def specht_generators(lam: Partition) -> list[np.ndarray]:
    """Matrices of the adjacent transpositions ``s_1 .. s_{m-1}``."""
    m = lam.size()
    return [specht_matrix(lam, transposition(i, m)) for i in range(1, m)]


def polytabloid(t: Tableau) -> dict[Tableau, int]:
    """``e_t`` as a signed sum of row-sorted tableaux (tabloids)."""
    cols = _columns(t)
    shape = tuple(len(row) for row in t)
    out: dict[Tableau, int] = {}
    for choice in product(*(permutations(range(len(c))) for c in cols)):
        sign = 1
        new_cols = []
        for col, perm in zip(cols, choice):
            sign *= _perm_sign(list(perm))
            new_cols.append([col[k] for k in perm])
        tab = _from_columns(shape, new_cols)
        key = tuple(tuple(sorted(row)) for row in tab)
        out[key] = out.get(key, 0) + sign
    return out


@lru_cache(maxsize=None)
def gram_matrix(lam: Partition) -> np.ndarray:
    """Gram matrix of the standard polytabloids under the tabloid form."""
    vecs = [polytabloid(t) for t in standard_tableaux(lam)]
    k = len(vecs)
    out = np.zeros((k, k), dtype=np.int64)
    for a in range(k):
        for b in range(a, k):
            s = sum(c * vecs[b].get(key, 0) for key, c in vecs[a].items())
            out[a, b] = out[b, a] = s
    return out


def specht_gram_rank(lam: Partition, p) -> int:
    """``dim D^lam`` in characteristic ``p`` (the rank of the Gram matrix mod p).

    ``p`` is a prime or a ``FieldSpec`` of positive characteristic.
    """
    from .fields import PrimeField

    p = getattr(p, "characteristic", p)
    if not p:
        raise ValueError("the Gram rank is only needed in positive characteristic")
    if not is_p_regular(lam, p):
        raise PSingularLabel(f"{lam} is not {p}-regular")
    F = PrimeField(p)
    return rank(F, F.array(gram_matrix(lam)))


def specht_module_matrices(lam: Partition, F: Field) -> list[np.ndarray]:
    return [F.array(g) for g in specht_generators(lam)]
