"""Matrix modules: submodules and quotients, Hom spaces, and a MeatAxe chop.

A module is one square matrix per algebra generator acting on column
vectors.  Hom spaces are computed from a spin presentation of the source:
the source is spanned by words applied to a few root vectors, and every
generator image of a basis word gives one linear relation that the image
of the roots must satisfy in the target.
"""

from __future__ import annotations

import weakref
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import ChopBudgetExceeded, GeneratorMismatch
from .fields import Field, Rationals
from .linalg import EchelonSpace, inverse, left_nullspace, nullspace, spin
from .partition_core import Partition

CHOP_BUDGET = 64
MAX_WORD_LENGTH = 4
# Norton's test over QQ only evaluates characteristic-polynomial factors up to this degree.
MAX_FACTOR_DEGREE = 3


@dataclass(frozen=True, eq=False)
class MatrixModule:
    field: Field
    dim: int
    gens: tuple[np.ndarray, ...]
    algebra: str = ""
    label: Optional[Partition] = None
    names: tuple[str, ...] = ()

    def __post_init__(self):
        for g in self.gens:
            if g.shape != (self.dim, self.dim):
                raise ValueError(f"generator of shape {g.shape} on a module of dim {self.dim}")

    def __repr__(self) -> str:
        tag = f" {self.label}" if self.label is not None else ""
        return f"<MatrixModule{tag} dim={self.dim} over {self.field!r} for {self.algebra or '?'}>"

    def with_gens(self, dim: int, gens: Sequence[np.ndarray], label=None) -> "MatrixModule":
        return MatrixModule(self.field, dim, tuple(gens), self.algebra, label, self.names)

    def submodule(self, space: EchelonSpace) -> "MatrixModule":
        """Action on an invariant subspace, in the basis of its echelon rows."""
        F, rows, piv = self.field, space.rows, space.pivots
        return self.with_gens(len(piv), [F.matmul(rows, g.T)[:, piv].T for g in self.gens])

    def quotient(self, space: EchelonSpace) -> "MatrixModule":
        """Action on ``M / space``, using unit vectors at non-pivot columns as a basis."""
        F, rows, piv = self.field, space.rows, space.pivots
        free = [c for c in range(self.dim) if c not in set(piv)]
        out = []
        for g in self.gens:
            block = g[np.ix_(free, free)]
            if piv:
                block = F.sub(block, F.matmul(rows[:, free].T, g[np.ix_(piv, free)]))
            out.append(block)
        return self.with_gens(len(free), out)

    def check_relations(self, delta=None) -> bool:
        """``s^2 = 1``, ``p_{i,j}^2 = p_{i,j}``, ``p_i^2 = delta p_i`` and the adjacent braid relation."""
        F = self.field
        eye = F.eye(self.dim)
        named = dict(zip(self.names, self.gens))
        for name, g in named.items():
            sq = F.matmul(g, g)
            if name.startswith("s"):
                ok = (sq == eye).all()
            elif "," in name:
                ok = (sq == g).all()
            else:
                ok = delta is None or (sq == F.mul(delta, g)).all()
            if not ok:
                return False
        s = [g for name, g in named.items() if name.startswith("s")]
        for a, b in zip(s, s[1:]):
            if not (F.matmul(F.matmul(a, b), a) == F.matmul(F.matmul(b, a), b)).all():
                return False
        return True


def _check_compatible(m: MatrixModule, n: MatrixModule) -> None:
    if m.field != n.field:
        raise GeneratorMismatch(f"fields differ: {m.field!r} vs {n.field!r}")
    if len(m.gens) != len(n.gens) or (m.algebra and n.algebra and m.algebra != n.algebra):
        raise GeneratorMismatch(f"modules for different algebras: {m.algebra} vs {n.algebra}")


# -- spin presentations ----------------------------------------------------


@dataclass
class Presentation:
    """Spin of root vectors with word bookkeeping.

    ``events`` lists, in processing order, ``(i, g, k, None)`` when
    ``gen[g] @ word[i]`` became the new basis word ``k`` and ``(i, g, None, c)``
    when it equals ``sum_j c[j] word[j]``.
    """

    dim: int
    roots: list[int]
    words: np.ndarray
    events: list = field(default_factory=list)


_PRESENTATIONS: "weakref.WeakKeyDictionary[MatrixModule, Presentation]" = weakref.WeakKeyDictionary()


def presentation(m: MatrixModule, generator: Optional[np.ndarray] = None) -> Presentation:
    cached = _PRESENTATIONS.get(m)
    if cached is not None and generator is None:
        return cached
    F, d = m.field, m.dim
    words: list[np.ndarray] = []
    roots: list[int] = []
    events: list = []
    ech = F.zeros((0, d))
    piv: list[int] = []
    tr = F.zeros((0, 0))  # ech = tr @ words

    def insert(w: np.ndarray) -> Optional[np.ndarray]:
        """Add ``w`` if independent; else return its coordinates on the words."""
        nonlocal ech, piv, tr
        k = len(words)
        a = w[piv] if piv else F.zeros(0)
        r = F.sub(w, F.matmul(a[None, :], ech)[0]) if piv else w.copy()
        nz = np.nonzero(F.nonzero(r))[0]
        if nz.size == 0:
            return F.matmul(a[None, :], tr)[0] if piv else F.zeros(0)
        pc = int(nz[0])
        inv = F.inv(r[pc])
        r = F.mul(r, inv)
        t_row = F.zeros(k + 1)
        t_row[k] = F.one
        if piv:
            t_row[:k] = F.neg(F.matmul(a[None, :], tr)[0])
        t_row = F.mul(t_row, inv)
        tr = np.concatenate([tr, F.zeros((tr.shape[0], 1))], axis=1)
        col = ech[:, pc].copy()
        if piv and F.nonzero(col).any():
            ech = F.sub(ech, F.mul(col[:, None], r[None, :]))
            tr = F.sub(tr, F.mul(col[:, None], t_row[None, :]))
        ech = np.concatenate([ech, r[None, :]], axis=0)
        tr = np.concatenate([tr, t_row[None, :]], axis=0)
        piv.append(pc)
        words.append(w)
        return None

    candidates = []
    if generator is not None:
        candidates.append(np.asarray(generator, dtype=F.dtype))
    unit = 0
    i = 0
    while len(words) < d:
        if i == len(words):
            # frontier exhausted: add a new root
            while True:
                if candidates:
                    v = candidates.pop(0)
                else:
                    v = F.zeros(d)
                    v[unit] = F.one
                    unit += 1
                if insert(v) is None:
                    roots.append(len(words) - 1)
                    break
            continue
        for g, mat in enumerate(m.gens):
            w = F.matmul(mat, words[i][:, None])[:, 0]
            k = len(words)
            coords = insert(w)
            if coords is None:
                events.append((i, g, k, None))
            else:
                events.append((i, g, None, coords))
        i += 1
    for i in range(i, len(words)):
        for g, mat in enumerate(m.gens):
            w = F.matmul(mat, words[i][:, None])[:, 0]
            a = w[piv]
            events.append((i, g, None, F.matmul(a[None, :], tr)[0]))
    pres = Presentation(d, roots, np.array(words, dtype=F.dtype).reshape(len(words), d), events)
    if generator is None:
        _PRESENTATIONS[m] = pres
    return pres


def _hom_solutions(m: MatrixModule, n: MatrixModule, pres: Presentation, want_basis: bool):
    """Solve for the images of the roots; returns (dim, word images T)."""
    F = m.field
    dn = n.dim
    s = dn * len(pres.roots)
    if s == 0 or m.dim == 0:
        return 0, None
    # images[k] is a (dn x s) matrix: image of word k as a function of the unknowns
    images: dict[int, np.ndarray] = {}
    for j, r in enumerate(pres.roots):
        block = F.zeros((dn, s))
        block[:, j * dn:(j + 1) * dn] = F.eye(dn)
        images[r] = block
    pending: list[np.ndarray] = []
    pending_rows = 0

    def apply(y: np.ndarray) -> None:
        for k in images:
            images[k] = F.matmul(images[k], y)

    for i, g, k, coeffs in pres.events:
        if i not in images:
            continue
        if k is not None:
            images[k] = F.matmul(n.gens[g], images[i])
            continue
        lhs = F.matmul(n.gens[g], images[i])
        idx = [j for j in np.nonzero(F.nonzero(coeffs))[0] if j in images]
        for j in idx:
            lhs = F.sub(lhs, F.mul(coeffs[j], images[j]))
        if F.nonzero(lhs).any():
            pending.append(lhs)
            pending_rows += lhs.shape[0]
        if pending_rows >= max(2 * s, 8):
            ys = nullspace(F, np.concatenate(pending, axis=0))
            pending, pending_rows = [], 0
            s = ys.shape[0]
            if s == 0:
                return 0, None
            apply(ys.T)
    if pending:
        ys = nullspace(F, np.concatenate(pending, axis=0))
        s = ys.shape[0]
        if s == 0:
            return 0, None
        apply(ys.T)
    return s, images if want_basis else None


def hom_dim(m: MatrixModule, n: MatrixModule, generator: Optional[np.ndarray] = None) -> int:
    """``dim Hom(m, n)`` for left modules given by matrices."""
    _check_compatible(m, n)
    if m.dim == 0 or n.dim == 0:
        return 0
    pres = presentation(m, generator)
    return _hom_solutions(m, n, pres, False)[0]


def hom_basis(m: MatrixModule, n: MatrixModule) -> list[np.ndarray]:
    """A basis of ``Hom(m, n)`` as ``n.dim x m.dim`` matrices."""
    _check_compatible(m, n)
    if m.dim == 0 or n.dim == 0:
        return []
    F = m.field
    pres = presentation(m)
    s, images = _hom_solutions(m, n, pres, True)
    if s == 0:
        return []
    words_inv = inverse(F, pres.words.T)  # columns are the basis words
    out = []
    for col in range(s):
        img = np.stack([images[k][:, col] for k in range(m.dim)], axis=1)
        out.append(F.matmul(img, words_inv))
    return out


# -- MeatAxe ---------------------------------------------------------------


def _random_element(m: MatrixModule, rng: np.random.Generator) -> np.ndarray:
    F = m.field
    acc = F.zeros((m.dim, m.dim))
    for _ in range(int(rng.integers(2, 5))):
        length = int(rng.integers(1, MAX_WORD_LENGTH + 1))
        word = m.gens[int(rng.integers(len(m.gens)))]
        for _ in range(length - 1):
            word = F.matmul(word, m.gens[int(rng.integers(len(m.gens)))])
        coeff = F.random((), rng)
        if isinstance(F, Rationals):
            coeff = F.scalar(int(rng.integers(1, 6)))
        acc = F.add(acc, F.mul(coeff, word))
    return acc


def _sub_from_dual(m: MatrixModule, dual: EchelonSpace) -> EchelonSpace:
    """Annihilator in ``m`` of an invariant subspace of the dual."""
    space = EchelonSpace(m.field, m.dim)
    space.add(nullspace(m.field, dual.rows))
    return space


def find_submodule(m: MatrixModule, rng: np.random.Generator, budget: int = CHOP_BUDGET) -> Optional[EchelonSpace]:
    """A proper nonzero invariant subspace, or ``None`` once Norton's test proves ``m`` simple."""
    F, d = m.field, m.dim
    if d <= 1:
        return None
    gens = list(m.gens)
    gens_t = [g.T for g in gens]
    eye = F.eye(d)
    for _ in range(budget):
        a = _random_element(m, rng)
        for c in F.elements():
            shifted = F.sub(a, F.mul(c, eye))
            ker = nullspace(F, shifted)
            if ker.shape[0] == 0:
                continue
            tries = [ker[0]]
            if ker.shape[0] > 1:
                tries.append(F.matmul(F.random((1, ker.shape[0]), rng), ker)[0])
            for v in tries:
                if not F.nonzero(v).any():
                    continue
                sub = spin(F, gens, v[None, :])
                if len(sub) < d:
                    return sub
            coker = left_nullspace(F, shifted)
            for w in coker[:2]:
                dual = spin(F, gens_t, w[None, :])
                if len(dual) < d:
                    return _sub_from_dual(m, dual)
            if ker.shape[0] == 1:
                return None
    raise ChopBudgetExceeded(f"no splitting or certificate after {budget} attempts on {m!r}")


def _poly_at(F: Field, coeffs: list, a: np.ndarray) -> np.ndarray:
    """Horner evaluation of a polynomial (leading coefficient first) at a matrix."""
    d = a.shape[0]
    acc = F.zeros((d, d))
    eye = F.eye(d)
    for c in coeffs:
        acc = F.add(F.matmul(acc, a), F.mul(F.scalar(c), eye))
    return acc


def _rational_factors(a: np.ndarray) -> list[list[Fraction]]:
    """Distinct monic irreducible factors over QQ of the characteristic polynomial, by degree."""
    from sympy import QQ, Poly, Symbol, factor_list
    from sympy.polys.matrices import DomainMatrix

    rows = [[QQ(int(v.numerator), int(v.denominator)) for v in row] for row in a]
    coeffs = DomainMatrix(rows, a.shape, QQ).charpoly()
    x = Symbol("x")
    poly = Poly([QQ.to_sympy(c) for c in coeffs], x, domain="QQ")
    out = []
    for f, _ in factor_list(poly)[1]:
        f = f.monic()
        out.append([Fraction(int(c.p), int(c.q)) for c in f.all_coeffs()])
    return sorted(out, key=len)


def find_submodule_rational(m: MatrixModule, rng: np.random.Generator, budget: int = CHOP_BUDGET) -> Optional[EchelonSpace]:
    """Norton's test over QQ using irreducible factors of characteristic polynomials."""
    F, d = m.field, m.dim
    if d <= 1:
        return None
    gens = list(m.gens)
    gens_t = [g.T for g in gens]
    for _ in range(budget):
        a = _random_element(m, rng)
        for f in _rational_factors(a):
            if len(f) - 1 > MAX_FACTOR_DEGREE:
                break
            fa = _poly_at(F, f, a)
            ker = nullspace(F, fa)
            if ker.shape[0] == 0:
                continue
            sub = spin(F, gens, ker[:1])
            if len(sub) < d:
                return sub
            dual = spin(F, gens_t, left_nullspace(F, fa)[:1])
            if len(dual) < d:
                return _sub_from_dual(m, dual)
            if ker.shape[0] == len(f) - 1:
                return None
    raise ChopBudgetExceeded(f"no splitting or certificate after {budget} attempts on {m!r}")


def composition_factors(m: MatrixModule, rng: Optional[np.random.Generator] = None) -> list[MatrixModule]:
    """Simple subquotients of ``m`` with multiplicity."""
    rng = np.random.default_rng(0) if rng is None else rng
    out: list[MatrixModule] = []
    stack = [m]
    while stack:
        x = stack.pop()
        if x.dim == 0:
            continue
        if x.dim == 1:
            out.append(x)
            continue
        if isinstance(x.field, Rationals):
            sub = find_submodule_rational(x, rng)
        else:
            sub = find_submodule(x, rng)
        if sub is None:
            out.append(x)
        else:
            stack.append(x.quotient(sub))
            stack.append(x.submodule(sub))
    return out


def is_simple(m: MatrixModule, rng: Optional[np.random.Generator] = None) -> bool:
    rng = np.random.default_rng(0) if rng is None else rng
    if m.dim == 0:
        return False
    if isinstance(m.field, Rationals):
        return find_submodule_rational(m, rng) is None
    return find_submodule(m, rng) is None
