"""Exact fields: the rationals, prime fields F_p and quadratic extensions F_{p^2}.

Finite-field elements are stored as integer codes in ``int64`` numpy arrays
(``a + b*p`` stands for ``a + b*x`` in ``F_p[x]/(q)``); rationals live in
object arrays of :class:`fractions.Fraction`.  Every field exposes the same
small vectorized vocabulary so the linear algebra layer is field-agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterator, Union

import numpy as np

from .errors import DeltaNotInvertible


_EXACT_FLOAT = 2 ** 52


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` for reduced integer arrays; BLAS float path when provably exact."""
    inner = a.shape[-1] if a.ndim else 1
    if (p - 1) ** 2 * max(inner, 1) < _EXACT_FLOAT:
        out = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return np.asarray(np.fmod(out, p), dtype=np.int64)
    return (np.asarray(a, dtype=object) @ np.asarray(b, dtype=object) % p).astype(np.int64)


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


class Field:
    """Common interface; subclasses implement the arithmetic."""

    characteristic: int = 0
    order: int | None = None
    dtype = np.int64

    def array(self, data) -> np.ndarray:
        raise NotImplementedError

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def is_finite(self) -> bool:
        return self.order is not None


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero, self.one = 0, 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def array(self, data) -> np.ndarray:
        return np.asarray(data, dtype=np.int64) % self.p

    def scalar(self, value) -> int:
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def matmul(self, a, b):
        return _matmul_mod(a, b, self.p)

    def inv(self, x: int) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return (int(a) * self.inv(b)) % self.p

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv(x), -k
        return pow(int(x), k, self.p)

    def nonzero(self, a) -> np.ndarray:
        return a != 0

    def random(self, shape, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.p, size=shape, dtype=np.int64)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def to_int(self, x) -> int:
        return int(x)

    def format(self, x) -> str:
        return str(int(x))


class QuadraticField(Field):
    """``F_p[x]/(x^2 + a x + b)`` for an irreducible monic quadratic."""

    def __init__(self, p: int, poly: tuple[int, int] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        if poly is None:
            poly = least_irreducible_quadratic(p)
        a, b = poly[0] % p, poly[1] % p
        if any((r * r + a * r + b) % p == 0 for r in range(p)):
            raise ValueError(f"x^2 + {a}x + {b} is reducible over F_{p}")
        self.poly = (a, b)
        # x^2 = c1*x + c0
        self.c1, self.c0 = (-a) % p, (-b) % p
        self.characteristic = p
        self.order = p * p
        self.zero, self.one = 0, 1
        self.gen = p  # code of x

    def __repr__(self):
        a, b = self.poly
        return f"GF({self.p}^2, x^2+{a}x+{b})"

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and (other.p, other.poly) == (self.p, self.poly)

    def __hash__(self):
        return hash(("GF2", self.p, self.poly))

    @cached_property
    def _mul_table(self) -> np.ndarray:
        q, p = self.order, self.p
        codes = np.arange(q)
        a0, a1 = codes % p, codes // p
        r0 = (a0[:, None] * a0[None, :] + self.c0 * a1[:, None] * a1[None, :]) % p
        r1 = (a0[:, None] * a1[None, :] + a1[:, None] * a0[None, :] + self.c1 * a1[:, None] * a1[None, :]) % p
        return (r0 + p * r1).astype(np.int64)

    @cached_property
    def _inv_table(self) -> np.ndarray:
        inv = np.zeros(self.order, dtype=np.int64)
        tab = self._mul_table
        for x in range(1, self.order):
            inv[x] = int(np.nonzero(tab[x] == 1)[0][0])
        return inv

    def _split(self, a):
        a = np.asarray(a, dtype=np.int64)
        return a % self.p, a // self.p

    def _join(self, a0, a1):
        return (a0 % self.p) + self.p * (a1 % self.p)

    def array(self, data) -> np.ndarray:
        """Embed integer data into the prime subfield (not for element codes)."""
        return np.asarray(data, dtype=np.int64) % self.p

    def element(self, a: int, b: int) -> int:
        """Code of ``a + b*x``."""
        return (a % self.p) + self.p * (b % self.p)

    def scalar(self, value) -> int:
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def add(self, a, b):
        a0, a1 = self._split(a)
        b0, b1 = self._split(b)
        return self._join(a0 + b0, a1 + b1)

    def sub(self, a, b):
        a0, a1 = self._split(a)
        b0, b1 = self._split(b)
        return self._join(a0 - b0, a1 - b1)

    def neg(self, a):
        a0, a1 = self._split(a)
        return self._join(-a0, -a1)

    def mul(self, a, b):
        return self._mul_table[np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)]

    def matmul(self, a, b):
        a0, a1 = self._split(a)
        b0, b1 = self._split(b)
        p = self.p
        hi = _matmul_mod(a1, b1, p)
        r0 = _matmul_mod(a0, b0, p) + self.c0 * hi
        r1 = _matmul_mod(a0, b1, p) + _matmul_mod(a1, b0, p) + self.c1 * hi
        return self._join(r0, r1)

    def inv(self, x: int) -> int:
        if int(x) == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self._inv_table[int(x)])

    def div(self, a: int, b: int) -> int:
        return int(self.mul(int(a), self.inv(b)))

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv(x), -k
        out = 1
        for _ in range(k):
            out = int(self.mul(out, x))
        return out

    def nonzero(self, a) -> np.ndarray:
        return a != 0

    def random(self, shape, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.order, size=shape, dtype=np.int64)

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def in_prime_field(self, x: int) -> bool:
        return int(x) < self.p

    def format(self, x) -> str:
        a, b = int(x) % self.p, int(x) // self.p
        if b == 0:
            return str(a)
        xb = "x" if b == 1 else f"{b}x"
        return xb if a == 0 else f"{a}+{xb}"


class Rationals(Field):
    dtype = object

    def __init__(self):
        self.zero, self.one = Fraction(0), Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def array(self, data) -> np.ndarray:
        arr = np.asarray(data, dtype=object)
        flat = [Fraction(x) for x in arr.ravel()]
        out = np.empty(arr.shape, dtype=object)
        out.ravel()[:] = flat if flat else []
        return out

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def scalar(self, value) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def matmul(self, a, b):
        if a.shape[-1] == 0:
            return self.zeros(a.shape[:-1] + b.shape[1:])
        na, da = _integer_form(a)
        nb, db = _integer_form(b)
        bound = max(_max_abs(na), 1) * max(_max_abs(nb), 1) * a.shape[-1]
        if bound < _EXACT_FLOAT:
            prod = (na.astype(np.float64) @ nb.astype(np.float64)).astype(np.int64).astype(object)
        else:
            prod = na.dot(nb)
        den = da * db
        out = np.empty(prod.shape, dtype=object)
        out.ravel()[:] = [Fraction(int(v), den) for v in prod.ravel()]
        return out

    def inv(self, x) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def div(self, a, b) -> Fraction:
        return Fraction(a) / Fraction(b)

    def power(self, x, k: int) -> Fraction:
        return Fraction(x) ** k

    def nonzero(self, a) -> np.ndarray:
        return np.asarray(a != 0, dtype=bool)

    def random(self, shape, rng: np.random.Generator) -> np.ndarray:
        return self.array(rng.integers(-3, 4, size=shape))

    def elements(self):
        raise TypeError("the rationals are infinite")

    def format(self, x) -> str:
        return str(x)


def _integer_form(a: np.ndarray) -> tuple[np.ndarray, int]:
    """``a = num / den`` with ``num`` an object array of Python ints."""
    flat = [Fraction(x) for x in a.ravel()]
    den = 1
    for x in flat:
        if x.denominator != 1:
            den = den * x.denominator // gcd(den, x.denominator)
    num = np.empty(a.shape, dtype=object)
    num.ravel()[:] = [x.numerator * (den // x.denominator) for x in flat]
    return num, den


def _max_abs(a: np.ndarray) -> int:
    return max((abs(int(x)) for x in a.ravel()), default=0)


def least_irreducible_quadratic(p: int) -> tuple[int, int]:
    """Coefficients ``(a, b)`` of the lexicographically least irreducible ``x^2 + a x + b``."""
    for a in range(p):
        for b in range(p):
            if all((r * r + a * r + b) % p for r in range(p)):
                return a, b
    raise ValueError(f"no irreducible quadratic over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """A field together with the value of the parameter delta in it."""

    field: Field
    delta: object

    @classmethod
    def rationals(cls, delta) -> "FieldSpec":
        return cls(Rationals(), Fraction(delta))

    @classmethod
    def prime(cls, p: int, delta: int) -> "FieldSpec":
        if p <= 2:
            raise ValueError("characteristic must be an odd prime")
        f = PrimeField(p)
        return cls(f, f.scalar(delta))

    @classmethod
    def quadratic(cls, p: int, delta: Union[str, int, tuple[int, int]] = "x") -> "FieldSpec":
        """``delta='x'`` picks the canonical generator, which lies outside F_p."""
        if p <= 2:
            raise ValueError("characteristic must be an odd prime")
        f = QuadraticField(p)
        if delta == "x":
            d = f.gen
        elif isinstance(delta, tuple):
            d = f.element(*delta)
        else:
            d = f.scalar(delta)
        return cls(f, d)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def delta_power(self, k: int):
        if k == 0:
            return self.field.one
        if self.delta == 0:
            if k < 0:
                raise DeltaNotInvertible("delta is zero")
            return self.field.zero
        return self.field.power(self.delta, k)

    def delta_in_prime_field(self) -> bool:
        f = self.field
        if isinstance(f, QuadraticField):
            return f.in_prime_field(self.delta)
        return True

    def delta_int(self) -> int | None:
        """Integer representative of delta when it lies in the prime field (or is an integer in QQ)."""
        if isinstance(self.field, Rationals):
            return int(self.delta) if Fraction(self.delta).denominator == 1 else None
        if not self.delta_in_prime_field():
            return None
        return int(self.delta) % self.field.characteristic

    def to_json(self) -> dict:
        f = self.field
        if isinstance(f, Rationals):
            return {"p": 0, "ext": None}
        if isinstance(f, QuadraticField):
            return {"p": f.p, "ext": list(f.poly)}
        return {"p": f.p, "ext": None}

    def delta_str(self) -> str:
        return self.field.format(self.delta)

    def __str__(self) -> str:
        return f"{self.field!r}, delta={self.delta_str()}"


class FieldElement:
    """Operator-overloading wrapper for scalar use (e.g. algebra coefficients)."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value if isinstance(field, Rationals) else int(value)

    def _wrap(self, v) -> "FieldElement":
        return FieldElement(self.field, v)

    def _val(self, other):
        if isinstance(other, FieldElement):
            return other.value
        return self.field.scalar(other)

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._val(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._val(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._val(other), self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._val(other)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0 and self.value == 0:
            raise DeltaNotInvertible("zero has no inverse")
        return self._wrap(self.field.power(self.value, k))

    def __bool__(self):
        return bool(self.value != 0)

    def __eq__(self, other):
        try:
            return self.value == self._val(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return self.field.format(self.value)
