"""Set-partition diagrams and the partition algebra P_n(delta).

Points ``1..n`` are the top row and ``-1..-n`` the barred bottom row.  A
diagram is stored as a restricted-growth labelling of the ``2n`` points in
the order ``1..n, -1..-n``, which makes equality and hashing canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import DeltaNotInvertible, IncomparableDomain, MalformedDiagram, SizeMismatch


class UnionFind:
    """Array union-find with path compression."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _rgs(labels: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(x, len(relabel)) for x in labels)


def _point_index(pt: int, n: int) -> int:
    return pt - 1 if pt > 0 else n - pt - 1


def _index_point(idx: int, n: int) -> int:
    return idx + 1 if idx < n else -(idx - n + 1)


@dataclass(frozen=True)
class Diagram:
    n: int
    labels: tuple[int, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> "Diagram":
        labels = [-1] * (2 * n)
        for b, block in enumerate(blocks):
            block = list(block)
            if not block:
                raise MalformedDiagram("empty block")
            for pt in block:
                if pt == 0 or abs(pt) > n:
                    raise MalformedDiagram(f"point {pt} out of range for n={n}")
                idx = _point_index(pt, n)
                if labels[idx] != -1:
                    raise MalformedDiagram(f"point {pt} appears twice")
                labels[idx] = b
        if -1 in labels:
            missing = [_index_point(i, n) for i, x in enumerate(labels) if x == -1]
            raise MalformedDiagram(f"points {missing} not covered")
        return cls(n, _rgs(labels))

    @classmethod
    def identity(cls, n: int) -> "Diagram":
        return cls(n, tuple(range(n)) * 2)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(max(self.labels, default=-1) + 1)]
        for idx, b in enumerate(self.labels):
            out[b].append(_index_point(idx, self.n))
        return tuple(tuple(block) for block in out)

    def __str__(self) -> str:
        return " | ".join(" ".join(map(str, block)) for block in self.blocks)

    def __repr__(self) -> str:
        return f"Diagram({self.n}, {str(self)!r})"

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        return cls.from_blocks(data["blocks"], data["n"])

    def top(self) -> tuple[int, ...]:
        return self.labels[: self.n]

    def bottom(self) -> tuple[int, ...]:
        return self.labels[self.n :]

    def flip(self) -> "Diagram":
        """Reflect top and bottom rows (the anti-involution ``x -> x*``)."""
        return Diagram(self.n, _rgs(self.bottom() + self.top()))

    def __mul__(self, other: "Diagram") -> tuple["Diagram", int]:
        return multiply(self, other)


def parse_diagram(text: str, n: int) -> Diagram:
    blocks = []
    for chunk in text.split("|"):
        toks = chunk.split()
        if not toks:
            raise MalformedDiagram(f"empty block in {text!r}")
        try:
            blocks.append([int(t) for t in toks])
        except ValueError as exc:
            raise MalformedDiagram(f"bad point in {chunk!r}") from exc
    return Diagram.from_blocks(blocks, n)


def multiply(x: Diagram, y: Diagram) -> tuple[Diagram, int]:
    """Stack ``x`` on top of ``y``; return the product diagram and the number of closed loops."""
    if x.n != y.n:
        raise SizeMismatch(f"cannot multiply P_{x.n} and P_{y.n} diagrams")
    n = x.n
    uf = UnionFind(3 * n)
    # rows: x top 0..n-1, middle n..2n-1, y bottom 2n..3n-1
    first: dict[int, int] = {}
    for idx, b in enumerate(x.labels):
        uf.union(first.setdefault(b, idx), idx)
    first = {}
    for idx, b in enumerate(y.labels):
        idx += n
        uf.union(first.setdefault(b, idx), idx)
    roots = [uf.find(i) for i in range(3 * n)]
    outer = set(roots[:n]) | set(roots[2 * n :])
    loops = len({r for r in roots[n : 2 * n] if r not in outer})
    return Diagram(n, _rgs(roots[:n] + roots[2 * n :])), loops


def propagating_count(d: Diagram) -> int:
    return len(set(d.top()) & set(d.bottom()))


def refines(x: Diagram, y: Diagram) -> bool:
    """Every block of ``x`` lies inside a block of ``y``."""
    if x.n != y.n:
        raise IncomparableDomain("diagrams of different sizes")
    image: dict[int, int] = {}
    return all(image.setdefault(a, b) == b for a, b in zip(x.labels, y.labels))


def refinement_less(x: Diagram, y: Diagram) -> bool:
    return x != y and refines(x, y)


# -- named diagrams --------------------------------------------------------


def s_diagram(i: int, j: int, n: int) -> Diagram:
    top = list(range(1, n + 1))
    top[i - 1], top[j - 1] = j, i
    return Diagram.from_blocks([[a, -top[a - 1]] for a in range(1, n + 1)], n)


def p2_diagram(i: int, j: int, n: int) -> Diagram:
    blocks = [[a, -a] for a in range(1, n + 1) if a not in (i, j)]
    return Diagram.from_blocks(blocks + [[i, j, -i, -j]], n)


def p1_diagram(i: int, n: int) -> Diagram:
    blocks = [[a, -a] for a in range(1, n + 1) if a != i]
    return Diagram.from_blocks(blocks + [[i], [-i]], n)


def e_diagram(i: int, n: int) -> Diagram:
    """Strands ``1..i-1``; every other point a singleton."""
    blocks = [[a, -a] for a in range(1, i)]
    blocks += [[a] for a in range(i, n + 1)] + [[-a] for a in range(i, n + 1)]
    return Diagram.from_blocks(blocks, n)


def permutation_diagram(perm: Sequence[int], n: int) -> Diagram:
    """Top point ``k`` joined to bottom point ``perm[k-1]``; identity beyond ``len(perm)``."""
    images = list(perm) + list(range(len(perm) + 1, n + 1))
    return Diagram.from_blocks([[k, -images[k - 1]] for k in range(1, n + 1)], n)


def generator_diagrams(n: int) -> list[tuple[str, Diagram]]:
    """The fixed generator order used for every module action."""
    gens = [(f"s{i},{i + 1}", s_diagram(i, i + 1, n)) for i in range(1, n)]
    gens += [(f"p{i},{i + 1}", p2_diagram(i, i + 1, n)) for i in range(1, n)]
    gens += [(f"p{i}", p1_diagram(i, n)) for i in range(1, n + 1)]
    return gens


# -- enumeration -----------------------------------------------------------


def set_partitions(m: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``m``."""

    def rec(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from rec(prefix, max(top, b))
            prefix.pop()

    yield from rec([], -1)


def all_diagrams(n: int) -> list[Diagram]:
    return [Diagram(n, rgs) for rgs in set_partitions(2 * n)]


@lru_cache(maxsize=None)
def enumerate_IT(n: int, t: int) -> tuple[Diagram, ...]:
    """Diagrams with exactly ``t`` propagating blocks and ``t+1..n`` bar as singletons."""
    if not 0 <= t <= n:
        raise ValueError("need 0 <= t <= n")
    out = set()
    for top in set_partitions(n):
        k = max(top, default=-1) + 1
        for chosen in permutations(range(k), t):
            bottom = list(chosen) + [k + j for j in range(n - t)]
            out.add(Diagram(n, _rgs(top + tuple(bottom))))
    return tuple(sorted(out, key=lambda d: d.labels))


@lru_cache(maxsize=None)
def cell_basis(n: int, t: int) -> tuple[Diagram, ...]:
    """Orbit representatives of ``I(n,t)`` under the right ``S_t`` action.

    In a representative the propagating blocks, listed by least top point,
    meet the bottom points ``1..t`` in increasing order.
    """
    return tuple(d for d in enumerate_IT(n, t) if split_orbit(d)[1] == tuple(range(1, t + 1)))


def split_orbit(d: Diagram) -> tuple[Diagram, tuple[int, ...]]:
    """Write ``d`` in ``I(n,t)`` as ``rep * permutation_diagram(perm)``.

    Returns ``(rep, perm)`` where ``perm[k-1]`` is the bottom point of the
    k-th propagating block (blocks ordered by least top point).
    """
    n = d.n
    top, bottom = d.top(), d.bottom()
    order: list[int] = []
    for b in top:
        if b in bottom and b not in order:
            order.append(b)
    perm = tuple(bottom.index(b) + 1 for b in order)
    t = len(order)
    new_bottom = list(bottom)
    for k, b in enumerate(order):
        new_bottom[k] = b
    fresh = max(d.labels) + 1
    for j in range(t, n):
        new_bottom[j] = fresh + j
    return Diagram(n, _rgs(top + tuple(new_bottom))), perm


# -- refinement order on I(n,t) ---------------------------------------------


def _check_same_domain(x: Diagram, y: Diagram) -> None:
    if x.n != y.n:
        raise IncomparableDomain("diagrams of different sizes")


@lru_cache(maxsize=None)
def _upsets(n: int, t: int) -> dict[Diagram, tuple[Diagram, ...]]:
    members = enumerate_IT(n, t)
    return {x: tuple(y for y in members if y != x and refines(x, y)) for x in members}


@lru_cache(maxsize=None)
def _mobius_from(x: Diagram) -> dict[Diagram, int]:
    """``mobius(x, y)`` for every ``y`` above ``x``, keyed by ``y``."""
    n = x.n
    t = propagating_count(x)
    up = _upsets(n, t)
    above = sorted(up[x], key=lambda d: -_block_count(d))
    mu = {x: 1}
    for y in above:
        mu[y] = -sum(v for z, v in mu.items() if z == x or (z != y and refines(z, y)))
    return mu


def _block_count(d: Diagram) -> int:
    return max(d.labels, default=-1) + 1


def mobius(x: Diagram, y: Diagram) -> int:
    _check_same_domain(x, y)
    if x == y:
        return 1
    if not refinement_less(x, y):
        return 0
    return _mobius_from(x).get(y, 0)


@lru_cache(maxsize=None)
def minimal_elements(n: int, t: int) -> tuple[Diagram, ...]:
    members = enumerate_IT(n, t)
    return tuple(x for x in members if not any(refinement_less(y, x) for y in members))


# -- linear combinations ---------------------------------------------------


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in one indeterminate (the symbolic delta)."""

    coeffs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def make(cls, mapping: dict[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in mapping.items() if c)))

    @classmethod
    def delta(cls) -> "LaurentPoly":
        return cls(((1, 1),))

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls.make({0: c})

    def _as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def _coerce(self, other) -> "LaurentPoly":
        return other if isinstance(other, LaurentPoly) else LaurentPoly.const(int(other))

    def __add__(self, other):
        other = self._coerce(other)
        d = self._as_dict()
        for e, c in other.coeffs:
            d[e] = d.get(e, 0) + c
        return LaurentPoly.make(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        d: dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.make(d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if len(self.coeffs) == 1:
            e, c = self.coeffs[0]
            if c in (1, -1) or k >= 0:
                return LaurentPoly.make({e * k: c ** abs(k)})
        if k < 0:
            raise DeltaNotInvertible(f"{self} is not a unit")
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.const(int(other))
            except (TypeError, ValueError):
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in sorted(self.coeffs, reverse=True):
            mono = "" if e == 0 else ("δ" if e == 1 else f"δ^{e}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class AlgebraElement:
    n: int
    terms: tuple[tuple[Diagram, object], ...] = field(default=())

    @classmethod
    def make(cls, n: int, mapping: dict) -> "AlgebraElement":
        items = [(d, c) for d, c in mapping.items() if c]
        items.sort(key=lambda dc: dc[0].labels)
        return cls(n, tuple(items))

    @classmethod
    def basis(cls, d: Diagram, coeff=1) -> "AlgebraElement":
        return cls.make(d.n, {d: coeff})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def _check(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise SizeMismatch(f"elements of P_{self.n} and P_{other.n}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        d = self.as_dict()
        for k, c in other.terms:
            d[k] = d[k] + c if k in d else c
        return AlgebraElement.make(self.n, d)

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement.make(self.n, {k: v * c for k, v in self.terms})

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) * [{d}]" for d, c in self.terms)


def multiply_elements(a: AlgebraElement, b: AlgebraElement, delta=None) -> AlgebraElement:
    """Bilinear product; ``delta=None`` keeps delta symbolic."""
    a._check(b)
    if delta is None:
        delta = LaurentPoly.delta()
    out: dict = {}
    for x, cx in a.terms:
        for y, cy in b.terms:
            d, loops = multiply(x, y)
            c = cx * cy * (delta ** loops) if loops else cx * cy
            out[d] = out[d] + c if d in out else c
    return AlgebraElement.make(a.n, out)


def generator(kind: str, indices: Sequence[int], n: int, delta=None) -> AlgebraElement:
    """Named elements ``s`` (``s_{i,j}``), ``p2`` (``p_{i,j}``), ``p1`` (``p_i``), ``e`` (``e_i``), ``id``."""
    idx = tuple(indices)
    for i in idx:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
    if kind == "id":
        return AlgebraElement.basis(Diagram.identity(n))
    if kind in ("s", "p2"):
        i, j = idx
        if i == j:
            raise ValueError("indices must be distinct")
        d = s_diagram(i, j, n) if kind == "s" else p2_diagram(i, j, n)
        return AlgebraElement.basis(d)
    if kind == "p1":
        (i,) = idx
        return AlgebraElement.basis(p1_diagram(i, n))
    if kind == "e":
        (i,) = idx
        if delta is None:
            delta = LaurentPoly.delta()
        if not delta:
            raise DeltaNotInvertible("e_i needs delta to be invertible")
        try:
            coeff = delta ** (-(n - i + 1))
        except ZeroDivisionError as exc:
            raise DeltaNotInvertible(str(exc)) from exc
        return AlgebraElement.basis(e_diagram(i, n), coeff)
    raise ValueError(f"unknown generator kind {kind!r}")


@lru_cache(maxsize=None)
def psi_basis(n: int, t: int) -> tuple[AlgebraElement, ...]:
    """For each minimal ``y`` the combination ``sum_x mobius(y, x) x`` over ``I(n,t)``."""
    out = []
    for y in minimal_elements(n, t):
        mu = _mobius_from(y)
        out.append(AlgebraElement.make(n, {x: c for x, c in mu.items()}))
    return tuple(out)


def bell(m: int) -> int:
    """Bell numbers from the Bell triangle."""
    row = [1]
    for _ in range(m):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
    return row[0]
