"""Integer matrices indexed by partitions, with JSON/CSV/text output."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Optional

from .partition_core import Partition


@dataclass(frozen=True)
class LabeledMatrix:
    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]
    n: Optional[int] = None
    field: Mapping = dc_field(default_factory=dict, compare=False)
    delta: str = dc_field(default="", compare=False)

    def __post_init__(self):
        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols) for r in self.entries):
            raise ValueError("entries do not match the label lists")
        if len(set(self.rows)) != len(self.rows) or len(set(self.cols)) != len(self.cols):
            raise ValueError("duplicate labels")

    @classmethod
    def from_mapping(
        cls,
        rows: Iterable[Partition],
        cols: Iterable[Partition],
        values: Mapping[tuple[Partition, Partition], int],
        **meta,
    ) -> "LabeledMatrix":
        rows, cols = tuple(rows), tuple(cols)
        colset = set(cols)
        for (r, c), v in values.items():
            if v and c not in colset:
                raise KeyError(f"column {c} is not a label")
        entries = tuple(tuple(int(values.get((r, c), 0)) for c in cols) for r in rows)
        return cls(rows, cols, entries, **meta)

    @classmethod
    def identity(cls, labels: Iterable[Partition], **meta) -> "LabeledMatrix":
        labels = tuple(labels)
        return cls.from_mapping(labels, labels, {(a, a): 1 for a in labels}, **meta)

    def entry(self, row: Partition, col: Partition) -> int:
        return self.entries[self.rows.index(row)][self.cols.index(col)]

    def row(self, label: Partition) -> dict[Partition, int]:
        vals = self.entries[self.rows.index(label)]
        return {c: v for c, v in zip(self.cols, vals) if v}

    def nonzero(self) -> dict[tuple[Partition, Partition], int]:
        return {(r, c): v for r, vals in zip(self.rows, self.entries) for c, v in zip(self.cols, vals) if v}

    def __matmul__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        if set(self.cols) != set(other.rows):
            raise ValueError("inner labels do not agree")
        out = {}
        for r in self.rows:
            for c in other.cols:
                out[(r, c)] = sum(self.entry(r, k) * other.entry(k, c) for k in self.cols)
        return LabeledMatrix.from_mapping(self.rows, other.cols, out, n=self.n)

    def same_entries(self, other: "LabeledMatrix") -> bool:
        """Label-aligned equality (label order may differ)."""
        return (
            set(self.rows) == set(other.rows)
            and set(self.cols) == set(other.cols)
            and self.nonzero() == other.nonzero()
        )

    def diff(self, other: "LabeledMatrix") -> list[tuple[Partition, Partition, int, int]]:
        rows = list(self.rows) + [r for r in other.rows if r not in self.rows]
        cols = list(self.cols) + [c for c in other.cols if c not in self.cols]
        mine, theirs = self.nonzero(), other.nonzero()
        out = []
        for r in rows:
            for c in cols:
                a, b = mine.get((r, c), 0), theirs.get((r, c), 0)
                if a != b:
                    out.append((r, c, a, b))
        if set(self.rows) != set(other.rows) or set(self.cols) != set(other.cols):
            out.append((None, None, len(self.rows) * len(self.cols), len(other.rows) * len(other.cols)))
        return out

    def restricted(self, rows: Iterable[Partition], cols: Iterable[Partition]) -> "LabeledMatrix":
        rows, cols = tuple(rows), tuple(cols)
        return LabeledMatrix(
            rows,
            cols,
            tuple(tuple(self.entry(r, c) for c in cols) for r in rows),
            self.n,
            self.field,
            self.delta,
        )

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field": dict(self.field),
            "delta": self.delta,
            "rows": [r.to_json() for r in self.rows],
            "cols": [c.to_json() for c in self.cols],
            "entries": [list(r) for r in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LabeledMatrix":
        return cls(
            tuple(Partition.from_json(r) for r in data["rows"]),
            tuple(Partition.from_json(c) for c in data["cols"]),
            tuple(tuple(int(v) for v in r) for r in data["entries"]),
            data.get("n"),
            data.get("field") or {},
            data.get("delta", ""),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + [str(c) for c in self.cols])
        for r, vals in zip(self.rows, self.entries):
            writer.writerow([str(r)] + list(vals))
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "LabeledMatrix":
        reader = list(csv.reader(io.StringIO(text)))
        cols = tuple(Partition.parse(c) for c in reader[0][1:])
        rows = tuple(Partition.parse(r[0]) for r in reader[1:])
        entries = tuple(tuple(int(v) for v in r[1:]) for r in reader[1:])
        return cls(rows, cols, entries)

    def render(self) -> str:
        """Bordered table; zero entries shown as ``.``."""
        col_names = [c.pretty() for c in self.cols]
        row_names = [r.pretty() for r in self.rows]
        lw = max((len(s) for s in row_names), default=1)
        widths = [max(len(s), 1) for s in col_names]
        head = " " * lw + " | " + " ".join(s.rjust(w) for s, w in zip(col_names, widths))
        lines = [head, "-" * len(head)]
        for name, vals in zip(row_names, self.entries):
            cells = " ".join((str(v) if v else ".").rjust(w) for v, w in zip(vals, widths))
            lines.append(name.ljust(lw) + " | " + cells)
        return "\n".join(lines)
