"""Brute-force decomposition matrices from explicit modules.

Each cell module (or Specht module) is chopped into simple factors with the
MeatAxe.  A simple factor ``F`` is named ``lam`` exactly when there is a
nonzero map from the standard module of ``lam`` to ``F`` (the standard module
has simple head ``L_lam`` for every label that indexes a simple).  Nothing
here consults block theory or the closed-form theorems.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Optional

import numpy as np

from .cellmod import CellModule, specht_module
from .diagram_algebra import cell_basis
from .errors import DeskScaleExceeded, IdentificationFailed
from .fields import FieldSpec
from .labeled import LabeledMatrix
from .modules import MatrixModule, composition_factors, hom_dim
from .partition_core import EMPTY, Partition, is_p_regular, partitions_of, partitions_up_to
from .specht import standard_tableaux

DEFAULT_BOUND = 200


def simple_labels(n: int, fs: FieldSpec) -> tuple[Partition, ...]:
    """Labels of the simple ``P_n`` modules.

    In characteristic ``p`` these are the p-regular partitions; when delta is
    zero and ``n >= 1`` the empty partition drops out because ``L_∅`` vanishes.
    """
    p = fs.characteristic or None
    labels = partitions_up_to(n, p).members
    if n >= 1 and fs.delta == 0:
        labels = tuple(lam for lam in labels if lam != EMPTY)
    return labels


def cell_dim(lam: Partition, n: int) -> int:
    return len(cell_basis(n, lam.size())) * len(standard_tableaux(lam))


class Identifier:
    """Names simple factors; caches standard modules and already-named simples."""

    def __init__(self, n: int, fs: FieldSpec, algebra: str = "P"):
        self.n, self.fs, self.algebra = n, fs, algebra
        self._standard: dict[Partition, tuple[MatrixModule, np.ndarray]] = {}
        self._known: list[tuple[Partition, MatrixModule]] = []
        if algebra == "P":
            self.candidates = simple_labels(n, fs)
        else:
            p = fs.characteristic
            self.candidates = tuple(lam for lam in partitions_of(n) if not p or is_p_regular(lam, p))

    def standard(self, lam: Partition) -> tuple[MatrixModule, np.ndarray]:
        if lam not in self._standard:
            if self.algebra == "P":
                cm = CellModule(lam, self.n, self.fs)
                self._standard[lam] = (cm.module, cm.head_generator())
            else:
                mod = specht_module(lam, self.fs)
                gen = self.fs.field.zeros(mod.dim)
                gen[0] = self.fs.field.one
                self._standard[lam] = (mod, gen)
        return self._standard[lam]

    def standard_dim(self, lam: Partition) -> int:
        if self.algebra == "P":
            return cell_dim(lam, self.n)
        return len(standard_tableaux(lam))

    def identify(self, simple: MatrixModule) -> Partition:
        for lam, known in self._known:
            if known.dim == simple.dim and hom_dim(known, simple) > 0:
                return lam
        hits = []
        for lam in self.candidates:
            if self.standard_dim(lam) < simple.dim:
                continue
            mod, gen = self.standard(lam)
            if hom_dim(mod, simple, generator=gen) > 0:
                hits.append(lam)
        if len(hits) != 1:
            raise IdentificationFailed(f"{len(hits)} candidate labels for a factor of dim {simple.dim}: {hits}")
        self._known.append((hits[0], simple))
        return hits[0]


def identify_factor(simple: MatrixModule, n: int, fs: FieldSpec) -> Partition:
    """Label of a simple ``P_n`` module (or ``S_n`` module when ``simple.algebra`` is ``S_n``)."""
    kind = "S" if simple.algebra.startswith("S_") else "P"
    return Identifier(n, fs, kind).identify(simple)


def _row_seed(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def _factor_row(args) -> dict[Partition, int]:
    mu, n, fs, seed, index, algebra = args
    ident = Identifier(n, fs, algebra)
    module = ident.standard(mu)[0]
    counts: dict[Partition, int] = {}
    for factor in composition_factors(module, _row_seed(seed, index)):
        lam = ident.identify(factor)
        counts[lam] = counts.get(lam, 0) + 1
    return counts


def _run_rows(tasks: list, jobs: int) -> list[dict[Partition, int]]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_factor_row, tasks))
    return [_factor_row(t) for t in tasks]


def _meta(n: int, fs: FieldSpec) -> dict:
    return {"n": n, "field": fs.to_json(), "delta": fs.delta_str()}


def decomposition_matrix_oracle(
    n: int,
    fs: FieldSpec,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
    jobs: int = 1,
) -> LabeledMatrix:
    """Rows: all partitions of size ≤ n; columns: labels of simple modules."""
    rows = partitions_up_to(n).members
    largest = max(cell_dim(mu, n) for mu in rows)
    if largest > bound:
        raise DeskScaleExceeded(f"largest cell module has dim {largest} > bound {bound}")
    tasks = [(mu, n, fs, seed, i, "P") for i, mu in enumerate(rows)]
    counts = _run_rows(tasks, jobs)
    cols = simple_labels(n, fs)
    values = {(mu, lam): c for mu, row in zip(rows, counts) for lam, c in row.items()}
    return LabeledMatrix.from_mapping(rows, cols, values, **_meta(n, fs))


def symmetric_group_oracle(m: int, p: int, seed: int = 0, bound: int = DEFAULT_BOUND, jobs: int = 1) -> LabeledMatrix:
    """``D(kS_m)`` over ``F_p`` from composition factors of Specht modules."""
    fs = FieldSpec.prime(p, 1)
    rows = partitions_of(m)
    largest = max(len(standard_tableaux(lam)) for lam in rows)
    if largest > bound:
        raise DeskScaleExceeded(f"largest Specht module has dim {largest} > bound {bound}")
    tasks = [(lam, m, fs, seed, i, "S") for i, lam in enumerate(rows)]
    counts = _run_rows(tasks, jobs)
    cols = tuple(lam for lam in rows if is_p_regular(lam, p))
    values = {(mu, lam): c for mu, row in zip(rows, counts) for lam, c in row.items()}
    return LabeledMatrix.from_mapping(rows, cols, values, n=m, field={"p": p, "ext": None})


def factor_dims(module: MatrixModule, rng: Optional[np.random.Generator] = None) -> list[int]:
    return sorted(f.dim for f in composition_factors(module, rng))
