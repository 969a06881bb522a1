"""Blocks of the partition algebra in characteristic 0 and p.

Two labels share a block when the shifted vectors ``hat(lam) + rho(delta)``
agree as multisets (characteristic 0), or agree as multisets after reduction
mod p (characteristic p).  The latter is the same as equality of bead counts
on the delta-marked abacus.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Optional

from .abacus import beta_delta, gamma_delta, p_core
from .errors import ChainShapeViolation, LabelTooLarge
from .partition_core import Partition, content, Node, partitions_up_to, sort_key


@dataclass(frozen=True)
class HatVector:
    entries: tuple[int, ...]


@dataclass(frozen=True)
class RhoShift:
    delta: int
    n: int

    @property
    def entries(self) -> tuple[int, ...]:
        return (self.delta,) + tuple(-i for i in range(1, self.n + 1))


def hat(lam: Partition, n: int) -> HatVector:
    if lam.size() > n:
        raise LabelTooLarge(f"|{lam}| > {n}")
    return HatVector((-lam.size(),) + tuple(lam[i] for i in range(1, n + 1)))


def rho(delta: int, n: int) -> RhoShift:
    return RhoShift(delta, n)


def _shifted(lam: Partition, delta: int, n: int) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(hat(lam, n).entries, rho(delta, n).entries))


def is_delta_pair(mu: Partition, lam: Partition, delta: int) -> bool:
    """``mu ↪_delta lam``: a strip in one row whose last node has content ``delta - |mu|``."""
    if mu == lam or not lam.contains(mu):
        return False
    rows = [i for i in range(1, max(len(lam), len(mu)) + 1) if lam[i] != mu[i]]
    if len(rows) != 1:
        return False
    i = rows[0]
    return content(Node(i, lam[i])) == delta - mu.size()


def same_block_char0(a: Partition, b: Partition, delta: Optional[int], n: int) -> bool:
    """``delta=None`` stands for a non-integral parameter: only ``a == b`` share a block."""
    if delta is None:
        return a == b
    return Counter(_shifted(a, delta, n)) == Counter(_shifted(b, delta, n))


def same_block_charp(a: Partition, b: Partition, delta: int, p: int, n: int) -> bool:
    return gamma_delta(a, n, delta, p) == gamma_delta(b, n, delta, p)


def same_block_charp_multiset(a: Partition, b: Partition, delta: int, p: int, n: int) -> bool:
    """Independent form of :func:`same_block_charp`: compare the residues of ``beta_delta``."""
    ra = Counter(x % p for x in beta_delta(a, n, delta))
    rb = Counter(x % p for x in beta_delta(b, n, delta))
    return ra == rb


@dataclass(frozen=True)
class BlockDecomposition:
    n: int
    p: int
    delta: Optional[int]
    classes: tuple[tuple[Partition, ...], ...]

    def class_of(self, lam: Partition) -> tuple[Partition, ...]:
        for cls in self.classes:
            if lam in cls:
                return cls
        raise KeyError(lam)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "delta": self.delta,
            "classes": [[lam.to_json() for lam in cls] for cls in self.classes],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BlockDecomposition":
        classes = tuple(tuple(Partition.from_json(x) for x in c) for c in data["classes"])
        return cls(data["n"], data["p"], data["delta"], classes)

    def render(self) -> str:
        return "\n".join("{" + ", ".join(lam.pretty() for lam in cls) + "}" for cls in self.classes)


def _group(n: int, key) -> tuple[tuple[Partition, ...], ...]:
    groups: dict = defaultdict(list)
    for lam in partitions_up_to(n):
        groups[key(lam)].append(lam)
    classes = [tuple(sorted(g, key=sort_key)) for g in groups.values()]
    return tuple(sorted(classes, key=lambda c: sort_key(c[0])))


def martin_chain(cls: tuple[Partition, ...], delta: int) -> tuple[Partition, ...]:
    """Order a characteristic-0 block as a chain; consecutive members must be delta-pairs
    differing in row ``position + 1``."""
    chain = tuple(sorted(cls, key=sort_key))
    for i, (a, b) in enumerate(zip(chain, chain[1:])):
        if not is_delta_pair(a, b, delta):
            raise ChainShapeViolation(f"{a} and {b} are not a {delta}-pair")
        rows = [r for r in range(1, len(b) + 1) if a[r] != b[r]]
        if rows != [i + 1]:
            raise ChainShapeViolation(f"{a} ⊂ {b} differ in row {rows}, expected {i + 1}")
    return chain


def blocks_char0(n: int, delta: Optional[int]) -> BlockDecomposition:
    if delta is None:
        classes = tuple((lam,) for lam in partitions_up_to(n))
    else:
        classes = _group(n, lambda lam: tuple(sorted(_shifted(lam, delta, n))))
        for cls in classes:
            martin_chain(cls, delta)
    return BlockDecomposition(n, 0, delta, classes)


def blocks_charp(n: int, p: int, delta: int) -> BlockDecomposition:
    if not 0 <= delta < p:
        raise ValueError(f"delta representative must lie in 0..{p - 1}")
    return BlockDecomposition(n, p, delta, _group(n, lambda lam: gamma_delta(lam, n, delta, p)))


def blocks_outside_prime_field(n: int, p: int) -> BlockDecomposition:
    """delta not in F_p: labels are linked only within one size, by equal p-cores."""
    return BlockDecomposition(n, p, None, _group(n, lambda lam: (lam.size(), p_core(lam, p))))


def is_semisimple_char0(n: int, delta: Optional[int]) -> bool:
    """``delta=None`` means non-integral, which is always semisimple."""
    if delta is None:
        return True
    return not (0 <= delta < 2 * n - 1)
