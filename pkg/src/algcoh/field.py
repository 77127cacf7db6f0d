"""Exact coefficient fields: prime fields F_p and the rationals Q.

Matrices over a field are plain numpy arrays.  Over F_p with small p the
dtype is int64 with entries in [0, p-1]; over Q (and over F_p with very
large p) the dtype is ``object`` holding ``Fraction`` / ``int`` values.
Every array leaving this module is in canonical form.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator

import numpy as np

# p*p*n must stay well inside int64 for the fast matmul path
_INT64_PRIME_LIMIT = 46341


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class Field:
    """A prime field ``Field(p)`` or the rationals ``Field(None)``."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            p = int(p)
            if not is_prime(p):
                raise FieldError(f"{p} is not prime")
        self.p = p

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip()
        if text in ("Q", "QQ", "rationals"):
            return cls(None)
        try:
            p = int(text)
        except ValueError:
            raise FieldError(f"unknown field kind {text!r} (expected a prime or Q)") from None
        return cls(p)

    # -- identity -------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def uses_int64(self) -> bool:
        return self.p is not None and self.p < _INT64_PRIME_LIMIT

    @property
    def dtype(self):
        return np.int64 if self.uses_int64 else object

    @property
    def order(self) -> int | None:
        return self.p

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Field", self.p))

    def __repr__(self) -> str:
        return "Field(Q)" if self.p is None else f"Field({self.p})"

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    @property
    def token(self) -> str:
        """Text used in presentation files (``field: <token>``)."""
        return "Q" if self.p is None else str(self.p)

    # -- scalars --------------------------------------------------------
    def scalar(self, x):
        if self.p is None:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, (int, np.integer)):
                return Fraction(int(x))
            if isinstance(x, str):
                return self.parse_scalar(x)
            raise FieldError(f"cannot coerce {x!r} to a rational")
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"{x} has no image in F{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def neg(self, x):
        return self.scalar(-x)

    def parse_scalar(self, token: str):
        token = token.strip()
        try:
            if self.p is None:
                if "/" in token:
                    num, den = token.split("/")
                    den_i = int(den)
                    if den_i <= 0:
                        raise FieldError(f"bad rational {token!r}: denominator must be positive")
                    num_i = int(num)
                    if den_i == 1 or math.gcd(num_i, den_i) != 1:
                        raise FieldError(f"bad rational {token!r}: not in lowest terms")
                    return Fraction(num_i, den_i)
                return Fraction(int(token))
            value = int(token)
        except FieldError:
            raise
        except ValueError:
            raise FieldError(f"bad scalar {token!r}") from None
        if not 0 <= value < self.p:
            raise FieldError(f"scalar {value} outside [0, {self.p - 1}]")
        return value

    def format_scalar(self, x) -> str:
        if self.p is None:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(int(x) % self.p)

    def elements(self) -> Iterator[int]:
        if self.p is None:
            raise FieldError("the rationals cannot be enumerated")
        return iter(range(self.p))

    def vectors(self, n: int) -> Iterator[tuple[int, ...]]:
        """All vectors of F_p^n in lexicographic order."""
        return itertools.product(self.elements(), repeat=n)

    # -- arrays ---------------------------------------------------------
    def reduce(self, arr) -> np.ndarray:
        """Canonical copy of ``arr`` (any nested sequence or ndarray)."""
        a = np.asarray(arr)
        if self.p is None:
            out = np.empty(a.shape, dtype=object)
            flat = out.reshape(-1)
            for i, x in enumerate(a.reshape(-1)):
                flat[i] = self.scalar(x.item() if isinstance(x, np.generic) else x)
            return out
        if self.uses_int64:
            if a.dtype == object:
                out = np.empty(a.shape, dtype=np.int64)
                flat = out.reshape(-1)
                for i, x in enumerate(a.reshape(-1)):
                    flat[i] = self.scalar(x)
                return out
            return np.mod(a.astype(np.int64, copy=False), self.p)
        out = np.empty(a.shape, dtype=object)
        flat = out.reshape(-1)
        for i, x in enumerate(a.reshape(-1)):
            flat[i] = self.scalar(x.item() if isinstance(x, np.generic) else x)
        return out

    array = reduce

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is object:
            out = np.empty(shape, dtype=object)
            out.fill(Fraction(0) if self.p is None else 0)
            return out
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.scalar(1)
        return out

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.uses_int64:
            return np.mod(a @ b, self.p)
        prod = np.dot(a, b)
        if not isinstance(prod, np.ndarray):
            prod = np.asarray(prod, dtype=object)
        return self.reduce(prod)

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(np.kron(a, b))

    def add(self, a, b) -> np.ndarray:
        return self.reduce(np.asarray(a) + np.asarray(b))

    def sub(self, a, b) -> np.ndarray:
        return self.reduce(np.asarray(a) - np.asarray(b))

    def scale(self, c, a) -> np.ndarray:
        return self.reduce(self.scalar(c) * np.asarray(a))

    def is_zero(self, a) -> bool:
        a = np.asarray(a)
        return not np.any(a != 0)
