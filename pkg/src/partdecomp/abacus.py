"""James' abacus, beta-sequences, p-cores and the delta-marked abacus."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import BeadCountTooSmall
from .partition_core import Partition


@dataclass(frozen=True)
class BetaSequence:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = self.values
        if any(vals[i] <= vals[i + 1] for i in range(len(vals) - 1)) or (vals and vals[-1] < 0):
            raise ValueError(f"not a beta-sequence: {vals!r}")

    @property
    def beads(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class MarkedAbacus:
    p: int
    beads: int
    positions: frozenset[int]
    marker: int

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "beads": self.beads,
            "positions": sorted(self.positions, reverse=True),
            "marker": self.marker,
        }

    @classmethod
    def from_json(cls, data: dict) -> "MarkedAbacus":
        return cls(data["p"], data["beads"], frozenset(data["positions"]), data["marker"])


def _check_beads(a: Partition, b: int) -> None:
    if b < a.size() or b < len(a):
        raise BeadCountTooSmall(f"need at least {max(a.size(), len(a))} beads for {a}, got {b}")


def beta_sequence(a: Partition, b: int) -> BetaSequence:
    _check_beads(a, b)
    return BetaSequence(tuple(a[i] - i + b for i in range(1, b + 1)))


def partition_of_beta(s: BetaSequence) -> Partition:
    b = s.beads
    return Partition(tuple(x + i - b for i, x in enumerate(s.values, 1)))


def gamma(a: Partition, b: int, p: int) -> tuple[int, ...]:
    """Bead count on each of the ``p`` runners."""
    counts = Counter(x % p for x in beta_sequence(a, b).values)
    return tuple(counts[i] for i in range(p))


def _default_beads(a: Partition) -> int:
    return max(a.size(), len(a))


def p_core(a: Partition, p: int, beads: int | None = None) -> Partition:
    """Slide every bead as far up its runner as it goes."""
    b = _default_beads(a) if beads is None else beads
    counts = gamma(a, b, p)
    positions = [r + p * k for r in range(p) for k in range(counts[r])]
    return partition_of_beta(BetaSequence(tuple(sorted(positions, reverse=True))))


def beta_delta(a: Partition, b: int, delta: int) -> tuple[int, ...]:
    return (delta - a.size() + b,) + beta_sequence(a, b).values


def marked_abacus(a: Partition, b: int, delta: int, p: int) -> MarkedAbacus:
    seq = beta_delta(a, b, delta)
    return MarkedAbacus(p, b, frozenset(seq[1:]), seq[0] % p)


def gamma_delta(a: Partition, b: int, delta: int, p: int) -> tuple[int, ...]:
    counts = list(gamma(a, b, p))
    counts[(delta - a.size() + b) % p] += 1
    return tuple(counts)


def render_abacus(m: MarkedAbacus) -> str:
    """ASCII picture: ``v`` over the marked runner, ``o`` for beads, ``|`` for empty slots."""
    top = max(m.positions, default=-1)
    nrows = -(-(top + 1) // m.p)
    lines = [" ".join("v" if r == m.marker else " " for r in range(m.p)).rstrip()]
    for row in range(nrows):
        cells = ("o" if row * m.p + r in m.positions else "|" for r in range(m.p))
        lines.append(" ".join(cells))
    return "\n".join(lines)
