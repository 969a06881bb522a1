"""Exact linear algebra over a :class:`~partdecomp.fields.Field`.

Vectors are rows unless stated otherwise.  Subspaces are kept in reduced row
echelon form so that reducing a batch of vectors is a single matrix product.
"""

from __future__ import annotations

import numpy as np

from .fields import Field


def rref(F: Field, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``a`` with zero rows dropped, plus pivot columns."""
    a = np.array(a, dtype=F.dtype, copy=True)
    if a.ndim != 2:
        raise ValueError("rref expects a matrix")
    m, n = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(F.nonzero(a[r:, c]))[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = F.inv(a[r, c])
        a[r] = F.mul(a[r], inv)
        factors = a[:, c].copy()
        factors[r] = F.zero
        rows = np.nonzero(F.nonzero(factors))[0]
        if rows.size:
            a[rows] = F.sub(a[rows], F.mul(factors[rows][:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(F: Field, a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return len(rref(F, a)[1])


def nullspace(F: Field, a: np.ndarray) -> np.ndarray:
    """Rows spanning ``{v : a @ v = 0}``."""
    n = a.shape[1]
    if a.shape[0] == 0:
        return F.eye(n)
    r, piv = rref(F, a)
    free = [c for c in range(n) if c not in set(piv)]
    out = F.zeros((len(free), n))
    for i, f in enumerate(free):
        out[i, f] = F.one
        for row, pc in enumerate(piv):
            out[i, pc] = F.neg(r[row, f])
    return out


def left_nullspace(F: Field, a: np.ndarray) -> np.ndarray:
    """Rows spanning ``{w : w @ a = 0}``."""
    return nullspace(F, a.T)


def inverse(F: Field, a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    aug = np.concatenate([np.asarray(a, dtype=F.dtype), F.eye(n)], axis=1)
    r, piv = rref(F, aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return r[:n, n:]


class EchelonSpace:
    """A subspace held in reduced row echelon form."""

    def __init__(self, F: Field, dim: int):
        self.F = F
        self.dim = dim
        self.rows = F.zeros((0, dim))
        self.pivots: list[int] = []

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Residues of the rows of ``v`` modulo the space."""
        if not self.pivots:
            return np.array(v, copy=True)
        return self.F.sub(v, self.F.matmul(v[:, self.pivots], self.rows))

    def add(self, v: np.ndarray) -> np.ndarray:
        """Extend the space by the rows of ``v``; return the new echelon rows."""
        F = self.F
        res = self.reduce(np.atleast_2d(v))
        new, piv = rref(F, res)
        if not piv:
            return new
        if self.pivots:
            self.rows = F.sub(self.rows, F.matmul(self.rows[:, piv], new))
        rows = np.concatenate([self.rows, new], axis=0)
        pivots = self.pivots + piv
        order = np.argsort(pivots, kind="stable")
        self.rows = rows[order]
        self.pivots = [pivots[i] for i in order]
        return new

    def contains(self, v: np.ndarray) -> bool:
        return not self.F.nonzero(self.reduce(np.atleast_2d(v))).any()

    def coordinates(self, v: np.ndarray) -> np.ndarray:
        """Coefficients of rows of ``v`` (assumed in the space) against ``self.rows``."""
        return np.atleast_2d(v)[:, self.pivots]


def spin(F: Field, gens: list[np.ndarray], vectors: np.ndarray) -> EchelonSpace:
    """Smallest subspace containing ``vectors`` and stable under column action ``g @ v``."""
    dim = vectors.shape[1]
    space = EchelonSpace(F, dim)
    frontier = space.add(vectors)
    while len(frontier) and len(space) < dim:
        images = [F.matmul(frontier, g.T) for g in gens]
        if not images:
            break
        frontier = space.add(np.concatenate(images, axis=0))
    return space


def same_span(F: Field, a: np.ndarray, b: np.ndarray) -> bool:
    ra, rb = rank(F, a), rank(F, b)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(F, np.concatenate([a, b], axis=0)) == ra
