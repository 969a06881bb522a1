"""Specht modules of S_m and cell modules of the partition algebra as matrix modules.

The cell module of ``lam`` (``t = |lam|``) has basis ``r ⊗ T`` where ``r``
runs over orbit representatives of ``I(n,t)`` under the right ``S_t`` action
and ``T`` over standard tableaux of ``lam``.  A diagram ``x`` sends
``r ⊗ T`` to zero if ``x r`` has fewer than ``t`` propagating blocks, and
otherwise, writing ``x r = delta^a r' d_pi``, to ``delta^a r' ⊗ pi^{-1} e_T``.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .diagram_algebra import (
    AlgebraElement,
    Diagram,
    cell_basis,
    generator_diagrams,
    multiply,
    p2_diagram,
    propagating_count,
    psi_basis,
    split_orbit,
)
from .errors import LabelTooLarge
from .fields import FieldSpec
from .linalg import nullspace, same_span
from .modules import MatrixModule
from .partition_core import as_partition
from .specht import specht_generators, specht_matrix, standard_tableaux


def _inverse_perm(perm: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, img in enumerate(perm, 1):
        out[img - 1] = i
    return tuple(out)


def specht_module(lam, fs: FieldSpec) -> MatrixModule:
    """``S^lam`` over the field of ``fs``; generators are ``s_1 .. s_{m-1}``."""
    lam = as_partition(lam)
    F = fs.field
    m = lam.size()
    gens = tuple(F.array(g) for g in specht_generators(lam))
    names = tuple(f"s{i},{i + 1}" for i in range(1, m))
    dim = len(standard_tableaux(lam))
    return MatrixModule(F, dim, gens, f"S_{m}", lam, names)


class CellModule:
    """Bookkeeping for ``Δ_lam(n)``; ``.module`` is the matrix module."""

    def __init__(self, lam, n: int, fs: FieldSpec):
        lam = as_partition(lam)
        if lam.size() > n:
            raise LabelTooLarge(f"|{lam}| = {lam.size()} exceeds n = {n}")
        self.lam, self.n, self.fs = lam, n, fs
        self.t = lam.size()
        self.basis = cell_basis(n, self.t)
        self.index = {d: k for k, d in enumerate(self.basis)}
        self.fdim = len(standard_tableaux(lam))
        self.dim = len(self.basis) * self.fdim

    def _integer_action(self, x: Diagram) -> dict[int, np.ndarray]:
        """Matrix of ``x`` split by the power of delta it carries."""
        fd = self.fdim
        out: dict[int, np.ndarray] = {}
        for j, r in enumerate(self.basis):
            w, loops = multiply(x, r)
            if propagating_count(w) < self.t:
                continue
            rep, perm = split_orbit(w)
            i = self.index[rep]
            block = specht_matrix(self.lam, _inverse_perm(perm))
            mat = out.setdefault(loops, np.zeros((self.dim, self.dim), dtype=np.int64))
            mat[i * fd:(i + 1) * fd, j * fd:(j + 1) * fd] += block
        return out

    def action(self, x: Diagram) -> np.ndarray:
        F = self.fs.field
        acc = F.zeros((self.dim, self.dim))
        for power, mat in self._integer_action(x).items():
            scale = self.fs.delta_power(power)
            acc = F.add(acc, F.mul(scale, F.array(mat)))
        return acc

    def element_action(self, a: AlgebraElement) -> np.ndarray:
        F = self.fs.field
        acc = F.zeros((self.dim, self.dim))
        for d, c in a.terms:
            acc = F.add(acc, F.mul(F.scalar(c), self.action(d)))
        return acc

    @cached_property
    def module(self) -> MatrixModule:
        gens = generator_diagrams(self.n)
        mats = tuple(self.action(d) for _, d in gens)
        names = tuple(name for name, _ in gens)
        return MatrixModule(self.fs.field, self.dim, mats, f"P_{self.n}", self.lam, names)

    def head_generator(self) -> np.ndarray:
        """``y_t ⊗ e_T`` for the identity-like representative; it generates the module."""
        F = self.fs.field
        v = F.zeros(self.dim)
        ident = Diagram.from_blocks(
            [[k, -k] for k in range(1, self.t + 1)]
            + [[k] for k in range(self.t + 1, self.n + 1)]
            + [[-k] for k in range(self.t + 1, self.n + 1)],
            self.n,
        )
        v[self.index[ident] * self.fdim] = F.one
        return v

    def tensor(self, x: Diagram, s: np.ndarray) -> np.ndarray:
        """Coordinates of ``x ⊗ s`` for ``x`` in ``I(n,t)`` and ``s`` in the Specht module."""
        F = self.fs.field
        rep, perm = split_orbit(x)
        out = F.zeros(self.dim)
        i = self.index[rep]
        mat = F.array(specht_matrix(self.lam, _inverse_perm(perm)))
        out[i * self.fdim:(i + 1) * self.fdim] = F.matmul(mat, s[:, None])[:, 0]
        return out


def cell_module(lam, n: int, fs: FieldSpec) -> MatrixModule:
    return CellModule(lam, n, fs).module


def psi_annihilator_check(mu, n: int, fs: FieldSpec) -> bool:
    """Joint kernel of all ``p_{i,j}`` on ``Δ_mu(n)`` equals the span of ``ψ ⊗ s``."""
    cm = CellModule(mu, n, fs)
    F = fs.field
    ops = [cm.action(p2_diagram(i, j, n)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if ops:
        kernel = nullspace(F, np.concatenate(ops, axis=0))
    else:
        kernel = F.eye(cm.dim)
    vecs = []
    for psi in psi_basis(n, cm.t):
        for k in range(cm.fdim):
            s = F.zeros(cm.fdim)
            s[k] = F.one
            acc = F.zeros(cm.dim)
            for x, c in psi.terms:
                acc = F.add(acc, F.mul(F.scalar(c), cm.tensor(x, s)))
            vecs.append(acc)
    span = np.array(vecs, dtype=F.dtype).reshape(len(vecs), cm.dim)
    return same_span(F, kernel, span)


def joint_kernel_dim(mu, n: int, fs: FieldSpec) -> int:
    cm = CellModule(mu, n, fs)
    F = fs.field
    ops = [cm.action(p2_diagram(i, j, n)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if not ops:
        return cm.dim
    return nullspace(F, np.concatenate(ops, axis=0)).shape[0]
