"""Integer partitions, the dominance-with-size order and Young diagram nodes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, NamedTuple, Optional


class Node(NamedTuple):
    row: int
    col: int


def content(nd: Node) -> int:
    """Content ``col - row`` of a node."""
    return nd.col - nd.row


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing tuple of positive integers; ``Partition(())`` is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive: {self.parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``5,4`` style text; a lone ``-`` (or empty text) is the empty partition."""
        text = text.strip()
        if text in ("-", "", "()", "∅"):
            return cls(())
        text = text.strip("()[]")
        try:
            parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}") from exc
        return cls(tuple(parts))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "-"

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access, zero past the end (``lam[1]`` is the largest part)."""
        if i < 1:
            raise IndexError("partition rows are 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def size(self) -> int:
        return sum(self.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> "Partition":
        return cls(tuple(data))

    def pretty(self) -> str:
        """Exponent notation, e.g. ``(5^2,3,2,1^2)``."""
        if not self.parts:
            return "∅"
        out = []
        for value, count in _runs(self.parts):
            out.append(str(value) if count == 1 else f"{value}^{count}")
        return "(" + ",".join(out) + ")"

    def nodes(self) -> list[Node]:
        return [Node(r, c) for r, part in enumerate(self.parts, 1) for c in range(1, part + 1)]

    def contains(self, other: "Partition") -> bool:
        """True when the Young diagram of ``other`` sits inside this one."""
        return len(other) <= len(self) and all(self[i] >= other[i] for i in range(1, len(other) + 1))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    def add_node(self, row: int) -> "Partition":
        parts = list(self.parts) + [0]
        parts[row - 1] += 1
        return Partition(tuple(parts))

    def remove_node(self, row: int) -> "Partition":
        parts = list(self.parts)
        parts[row - 1] -= 1
        return Partition(tuple(parts))


def _runs(parts: tuple[int, ...]) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for x in parts:
        if runs and runs[-1][0] == x:
            runs[-1] = (x, runs[-1][1] + 1)
        else:
            runs.append((x, 1))
    return runs


EMPTY = Partition(())


def as_partition(obj) -> Partition:
    if isinstance(obj, Partition):
        return obj
    if isinstance(obj, str):
        return Partition.parse(obj)
    return Partition(tuple(obj))


def dominance_leq(a: Partition, b: Partition) -> bool:
    """Dominance order with size: smaller size first, then prefix sums."""
    if a.size() != b.size():
        return a.size() < b.size()
    length = max(len(a), len(b))
    pa = accumulate(a[i] for i in range(1, length + 1))
    pb = accumulate(b[i] for i in range(1, length + 1))
    return all(x <= y for x, y in zip(pa, pb))


def is_p_regular(a: Partition, p: int) -> bool:
    return all(count < p for count in Counter(a.parts).values())


def removable_nodes(a: Partition) -> list[Node]:
    return [Node(i, a[i]) for i in range(1, len(a) + 1) if a[i + 1] < a[i]]


def addable_nodes(a: Partition) -> list[Node]:
    nodes = [Node(1, a[1] + 1)]
    nodes += [Node(i, a[i] + 1) for i in range(2, len(a) + 2) if a[i - 1] > a[i]]
    return nodes


def sort_key(a: Partition) -> tuple:
    """Size ascending, then reverse-lexicographic within a size."""
    return (a.size(), tuple(-x for x in a.parts))


@lru_cache(maxsize=None)
def partitions_of(m: int) -> tuple[Partition, ...]:
    """All partitions of ``m`` in reverse-lexicographic order."""

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(t) for t in gen(m, m))


@dataclass(frozen=True)
class PartitionSet:
    """``Λ_{≤n}`` (or its p-regular subset) in the canonical total order."""

    n: int
    members: tuple[Partition, ...]
    p: Optional[int] = None

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item) -> bool:
        return item in self.members

    def index(self, item: Partition) -> int:
        return self.members.index(item)


def partitions_up_to(n: int, p: Optional[int] = None) -> PartitionSet:
    if n < 0:
        raise ValueError("n must be non-negative")
    members = [lam for m in range(n + 1) for lam in partitions_of(m)]
    if p is not None:
        members = [lam for lam in members if is_p_regular(lam, p)]
    return PartitionSet(n, tuple(members), p)


def hook_lengths(a: Partition) -> list[int]:
    conj = a.conjugate()
    return [a[r] - c + conj[c] - r + 1 for r, c in a.nodes()]


def count_standard_tableaux(a: Partition) -> int:
    """``f^λ`` by the hook length formula."""
    from math import factorial, prod

    return factorial(a.size()) // prod(hook_lengths(a))
