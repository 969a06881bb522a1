"""Decomposition matrices built from the block and chain theorems.

Characteristic 0 uses Martin's chains.  In characteristic p three regimes are
covered: delta outside the prime field (block diagonal of symmetric group
matrices), ``n < p`` (one ``delta + r p`` pair per row at most) and
``n = p`` with ``delta = p - 1`` (the principal block comes from Peel's hook
theorem, all other blocks are copied from characteristic 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .block_theory import blocks_char0, is_delta_pair, martin_chain
from .errors import ChainShapeViolation, UnsupportedCase
from .labeled import LabeledMatrix
from .oracle import DEFAULT_BOUND, symmetric_group_oracle
from .partition_core import EMPTY, Partition, is_p_regular, partitions_of, partitions_up_to
from .abacus import p_core

Delta = Union[int, str, None]


def _columns(n: int, p: Optional[int], delta: Delta) -> tuple[Partition, ...]:
    labels = partitions_up_to(n, p).members
    if n >= 1 and delta == 0:
        labels = tuple(lam for lam in labels if lam != EMPTY)
    return labels


def _build(n: int, p: Optional[int], delta: Delta, values: dict, field: dict) -> LabeledMatrix:
    rows = partitions_up_to(n).members
    cols = _columns(n, p, delta)
    kept = {(r, c): v for (r, c), v in values.items() if c in set(cols)}
    return LabeledMatrix.from_mapping(rows, cols, kept, n=n, field=field, delta="" if delta is None else str(delta))


def decomp_char0(n: int, delta: Optional[int]) -> LabeledMatrix:
    """``delta=None`` is a non-integral parameter (identity matrix).

    With ``delta = 0`` and ``n >= 1`` the column of the empty partition is
    omitted because that simple module is zero.
    """
    values: dict = {}
    for cls in blocks_char0(n, delta).classes:
        chain = cls if delta is None else martin_chain(cls, delta)
        for i, lam in enumerate(chain):
            values[(lam, lam)] = 1
            if i + 1 < len(chain):
                values[(lam, chain[i + 1])] = 1
    return _build(n, None, "ss" if delta is None else delta, values, {"p": 0, "ext": None})


def _peel_hooks(p: int) -> dict:
    """Rows of the empty-core block of ``D(kS_p)``."""
    values = {}
    for m in range(p):
        hook = Partition((p - m,) + (1,) * m)
        if m == 0:
            values[(hook, hook)] = 1
        elif m < p - 1:
            values[(hook, hook)] = 1
            values[(hook, Partition((p - m + 1,) + (1,) * (m - 1)))] = 1
        else:
            values[(hook, Partition((2,) + (1,) * (p - 2)))] = 1
    return values


def sym_group_decomp(m: int, p: int, seed: int = 0, bound: int = DEFAULT_BOUND) -> LabeledMatrix:
    """``D(kS_m)`` over a field of characteristic ``p``: rows all partitions of m, columns p-regular ones."""
    rows = partitions_of(m)
    cols = tuple(lam for lam in rows if is_p_regular(lam, p))
    field = {"p": p, "ext": None}
    if m < p:
        return LabeledMatrix.identity(rows, n=m, field=field)
    if m == p:
        values = _peel_hooks(p)
        for lam in rows:
            if p_core(lam, p) != EMPTY:
                values[(lam, lam)] = 1
        return LabeledMatrix.from_mapping(rows, cols, values, n=m, field=field)
    return symmetric_group_oracle(m, p, seed=seed, bound=bound)


def stacked_symmetric(n: int, p: int, seed: int = 0, bound: int = DEFAULT_BOUND) -> LabeledMatrix:
    """Block diagonal of ``D(kS_m)`` for ``m = 0..n`` with rows/cols aligned to all labels of size ≤ n."""
    values = {}
    for m in range(n + 1):
        values.update(sym_group_decomp(m, p, seed, bound).nonzero())
    rows = partitions_up_to(n).members
    cols = partitions_up_to(n, p).members
    return LabeledMatrix.from_mapping(rows, cols, values, n=n, field={"p": p, "ext": None})


@dataclass(frozen=True)
class DecompRequest:
    """``delta`` is an integer 0..p-1, or ``"x"`` for an element outside the prime field."""

    n: int
    p: int
    delta: Union[int, str]
    method: str = "theorem"

    def __post_init__(self):
        if self.p <= 2:
            raise ValueError("characteristic must be an odd prime")
        if self.delta != "x" and not (isinstance(self.delta, int) and 0 <= self.delta < self.p):
            raise ValueError(f"delta must be 'x' or an integer in 0..{self.p - 1}")
        if self.method not in ("theorem", "oracle", "both"):
            raise ValueError(f"unknown method {self.method!r}")


def _case_small_n(n: int, p: int, delta: int) -> dict:
    """Each row gets at most one partner, found by a ``delta + r p`` pair search."""
    labels = partitions_up_to(n).members
    values = {}
    for mu in labels:
        values[(mu, mu)] = 1
        hits = [
            (d, lam)
            for d in range(-n, 2 * n + 1)
            if (d - delta) % p == 0
            for lam in labels
            if is_delta_pair(mu, lam, d)
        ]
        if len(hits) > 1:
            raise ChainShapeViolation(f"row {mu} has several pair partners: {hits}")
        if hits:
            values[(mu, hits[0][1])] = 1
    return values


def _case_n_equals_p(p: int) -> dict:
    values = {}
    principal = {Partition((p - m,) + (1,) * m) for m in range(p)} | {EMPTY}
    values[(EMPTY, EMPTY)] = 1
    values[(EMPTY, Partition((p,)))] = 1
    values.update(_peel_hooks(p))
    char0 = decomp_char0(p, p - 1)
    for mu, row in ((r, char0.row(r)) for r in char0.rows if r not in principal):
        for lam, v in row.items():
            if lam in principal:
                raise ChainShapeViolation(f"row {mu} reaches the principal block at {lam}")
            if not is_p_regular(lam, p):
                raise ChainShapeViolation(f"column {lam} of row {mu} is {p}-singular")
            values[(mu, lam)] = v
    return values


def decomp_charp_theorem(req: DecompRequest) -> LabeledMatrix:
    n, p, delta = req.n, req.p, req.delta
    if delta == "x":
        values = stacked_symmetric(n, p).nonzero()
        field = {"p": p, "ext": "x"}
    elif n < p:
        values = _case_small_n(n, p, delta)
        field = {"p": p, "ext": None}
    elif n == p and delta == p - 1:
        values = _case_n_equals_p(p)
        field = {"p": p, "ext": None}
    else:
        raise UnsupportedCase(f"no closed form for n={n}, p={p}, delta={delta}; use the oracle")
    return _build(n, p, delta, values, field)


def product_check_remark(p: int) -> bool:
    """Characteristic-p matrix at ``n = p``, ``delta = p - 1`` equals char-0 matrix times stacked ``D(kS_m)``."""
    left = decomp_char0(p, p - 1)
    product = left @ stacked_symmetric(p, p)
    return product.same_entries(decomp_charp_theorem(DecompRequest(p, p, p - 1)))


@dataclass(frozen=True)
class CounterexampleReport:
    oracle: LabeledMatrix
    products: dict
    entries: dict

    @property
    def holds(self) -> bool:
        products_differ = all(not prod.same_entries(self.oracle) for prod in self.products.values())
        return products_differ and all(self.entries.values())


def counterexample_report(seed: int = 0) -> CounterexampleReport:
    from .fields import FieldSpec
    from .oracle import decomposition_matrix_oracle

    n, p = 4, 3
    oracle = decomposition_matrix_oracle(n, FieldSpec.prime(p, 1), seed=seed)
    sym = stacked_symmetric(n, p)
    products = {r: decomp_char0(n, 1 + p * r) @ sym for r in (0, 1)}
    P = Partition.of
    entries = {
        "(2,1)->(2,1^2) = 1": oracle.entry(P(2, 1), P(2, 1, 1)) == 1,
        "(1)->(4) >= 1": oracle.entry(P(1), P(4)) >= 1,
        "(2^2)->(4) >= 1": oracle.entry(P(2, 2), P(4)) >= 1,
    }
    return CounterexampleReport(oracle, products, entries)


def counterexample_check(seed: int = 0) -> bool:
    return counterexample_report(seed).holds
