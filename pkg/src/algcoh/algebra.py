"""Finite-dimensional unital associative algebras given by structure constants.

``mul[i, j, k]`` is the coefficient of ``e_k`` in ``e_i * e_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels
from .field import Field
from .linalg import Subspace, kernel

DEFAULT_ENUM_CAP = 4096


class AlgebraError(ValueError):
    """Malformed input (shapes, mixed algebras, unsupported requests)."""


class ValidationError(AlgebraError):
    def __init__(self, report: "ValidationReport"):
        super().__init__(report.message)
        self.report = report


class EnumerationTooLarge(AlgebraError):
    pass


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    message: str = "ok"
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def raise_if_failed(self) -> None:
        if not self.ok:
            raise ValidationError(self)


class Algebra:
    def __init__(self, field: Field, mul, unit, name: str = "A", validate: bool = True):
        self.field = field
        self.mul = field.reduce(mul)
        self.unit = field.reduce(unit)
        self.name = name
        if self.mul.ndim != 3 or len(set(self.mul.shape)) != 1:
            raise AlgebraError(f"structure tensor must be n x n x n, got {self.mul.shape}")
        self.dim = self.mul.shape[0]
        if self.unit.shape != (self.dim,):
            raise AlgebraError(f"unit must have length {self.dim}, got {self.unit.shape}")
        if validate:
            validate_algebra(self).raise_if_failed()

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, dim={self.dim}, field={self.field})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and np.array_equal(self.mul, other.mul)
            and np.array_equal(self.unit, other.unit)
        )

    __hash__ = object.__hash__

    # -- elements and operators ------------------------------------------
    def element(self, coords) -> "Element":
        return Element(self, self.field.reduce(coords))

    def basis(self, i: int) -> "Element":
        v = self.field.zeros(self.dim)
        v[i] = self.field.scalar(1)
        return Element(self, v)

    @property
    def one(self) -> "Element":
        return Element(self, self.unit)

    @property
    def zero(self) -> "Element":
        return Element(self, self.field.zeros(self.dim))

    def product(self, x, y) -> np.ndarray:
        """Coordinates of ``x * y`` for coordinate vectors ``x``, ``y``."""
        F, n = self.field, self.dim
        left = F.matmul(F.reduce(x).reshape(1, n), self.mul.reshape(n, n * n)).reshape(n, n)
        return F.matmul(F.reduce(y).reshape(1, n), left).reshape(n)

    @cached_property
    def left_ops(self) -> np.ndarray:
        """``left_ops[i]`` is the matrix of ``b -> e_i b``."""
        return np.ascontiguousarray(self.mul.transpose(0, 2, 1))

    @cached_property
    def right_ops(self) -> np.ndarray:
        """``right_ops[j]`` is the matrix of ``b -> b e_j``."""
        return np.ascontiguousarray(self.mul.transpose(1, 2, 0))

    def left_op(self, x) -> np.ndarray:
        F = self.field
        return F.reduce(np.tensordot(F.reduce(x), self.left_ops, axes=(0, 0)))

    def right_op(self, x) -> np.ndarray:
        F = self.field
        return F.reduce(np.tensordot(F.reduce(x), self.right_ops, axes=(0, 0)))

    @cached_property
    def ad_ops(self) -> np.ndarray:
        """``ad_ops[i]`` is the matrix of ``b -> [e_i, b] = e_i b - b e_i``."""
        return self.field.reduce(self.left_ops - self.right_ops)

    @cached_property
    def center(self) -> Subspace:
        return center(self)


class Element:
    """An element of a fixed algebra, compared coordinatewise."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        self.algebra = algebra
        self.coords = algebra.field.reduce(coords)
        if self.coords.shape != (algebra.dim,):
            raise AlgebraError(f"element needs {algebra.dim} coordinates")

    def _same(self, other: "Element") -> None:
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            if not (isinstance(other, Element) and other.algebra == self.algebra):
                raise AlgebraError("elements belong to different algebras")

    def __mul__(self, other):
        if isinstance(other, Element):
            self._same(other)
            return Element(self.algebra, self.algebra.product(self.coords, other.coords))
        return Element(self.algebra, self.algebra.field.scale(other, self.coords))

    def __rmul__(self, scalar):
        return Element(self.algebra, self.algebra.field.scale(scalar, self.coords))

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, self.algebra.field.add(self.coords, other.coords))

    def __sub__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, self.algebra.field.sub(self.coords, other.coords))

    def __neg__(self) -> "Element":
        return Element(self.algebra, self.algebra.field.reduce(-self.coords))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and other.algebra == self.algebra
            and np.array_equal(self.coords, other.coords)
        )

    def __hash__(self):
        return hash(tuple(self.coords.tolist()))

    @property
    def is_zero(self) -> bool:
        return self.algebra.field.is_zero(self.coords)

    @property
    def is_one(self) -> bool:
        return np.array_equal(self.coords, self.algebra.unit)

    @property
    def is_trivial(self) -> bool:
        return self.is_zero or self.is_one

    def is_idempotent(self) -> bool:
        return self * self == self

    def __repr__(self) -> str:
        F = self.algebra.field
        return f"<{self.algebra.name}: ({', '.join(F.format_scalar(x) for x in self.coords)})>"


def multiply(a: Element, b: Element) -> Element:
    return a * b


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def validate_algebra(alg: Algebra) -> ValidationReport:
    """Check associativity on all basis triples and the two-sided unit."""
    F, n = alg.field, alg.dim
    c = alg.mul
    for i in range(n):
        for j in range(n):
            eij = c[i, j]
            for k in range(n):
                # (e_i e_j) e_k  versus  e_i (e_j e_k)
                lhs = F.matmul(eij.reshape(1, n), c[:, k, :]).reshape(n)
                rhs = F.matmul(c[j, k].reshape(1, n), c[i, :, :]).reshape(n)
                if not np.array_equal(lhs, rhs):
                    return ValidationReport(
                        False, f"associativity fails on basis triple ({i},{j},{k})", (i, j, k)
                    )
    u = alg.unit
    shown = "(" + ", ".join(F.format_scalar(x) for x in u) + ")"
    for i in range(n):
        e = F.zeros(n)
        e[i] = F.scalar(1)
        if not np.array_equal(alg.product(u, e), e):
            return ValidationReport(False, f"unit fails: {shown}·e{i} ≠ e{i}", ("left", i))
        if not np.array_equal(alg.product(e, u), e):
            return ValidationReport(False, f"unit fails: e{i}·{shown} ≠ e{i}", ("right", i))
    return ValidationReport(True)


def center(alg: Algebra) -> Subspace:
    """Kernel of the stacked maps ``a -> [a, e_i]``."""
    F, n = alg.field, alg.dim
    if n == 0:
        return Subspace.zero(F, 0)
    # [a, e_j] = sum_i a_i (c[i,j] - c[j,i])
    blocks = [F.reduce((alg.mul[:, j, :] - alg.mul[j, :, :]).T) for j in range(n)]
    return kernel(F, np.vstack(blocks))


def enumerate_idempotents(
    alg: Algebra, cap: int = DEFAULT_ENUM_CAP, candidates=None
) -> list[Element]:
    """Idempotents of ``alg`` in lexicographic coordinate order.

    Over a prime field with ``p**n <= cap`` the search is exhaustive.  When
    ``candidates`` are given, only those are tested (in the given order).
    """
    F = alg.field
    if candidates is not None:
        found = []
        for cand in candidates:
            x = cand if isinstance(cand, Element) else alg.element(cand)
            if x.is_idempotent():
                found.append(x)
        return found
    if F.is_rational:
        raise AlgebraError(
            "idempotent search over Q needs user-supplied candidate idempotents"
        )
    p, n = F.p, alg.dim
    if p ** n > cap:
        raise EnumerationTooLarge(
            f"{p}^{n} = {p ** n} elements exceeds the enumeration cap {cap}; "
            "supply candidate idempotents or raise --max-enum"
        )
    if F.uses_int64:
        hits = _kernels.idempotent_scan(alg.mul, p)
    else:
        hits = [
            k for k, v in enumerate(F.vectors(n))
            if np.array_equal(alg.product(v, v), F.reduce(v))
        ]
    out = []
    for idx in hits:
        idx = int(idx)
        coords = []
        for _ in range(n):
            coords.append(idx % p)
            idx //= p
        out.append(alg.element(coords[::-1]))
    return out


# -- standard constructions ---------------------------------------------------

def matrix_algebra(field: Field, n: int, name: str | None = None) -> Algebra:
    """M_n(F) with basis E_ij in lexicographic order (index i*n + j)."""
    d = n * n
    mul = field.zeros((d, d, d))
    one = field.scalar(1)
    for i in range(n):
        for j in range(n):
            for l in range(n):
                mul[i * n + j, j * n + l, i * n + l] = one
    unit = field.zeros(d)
    for i in range(n):
        unit[i * n + i] = one
    return Algebra(field, mul, unit, name or f"M{n}({field})")


def truncated_polynomials(field: Field, k: int, name: str | None = None) -> Algebra:
    """F[x]/(x^k) with basis 1, x, ..., x^(k-1)."""
    mul = field.zeros((k, k, k))
    for i in range(k):
        for j in range(k):
            if i + j < k:
                mul[i, j, i + j] = field.scalar(1)
    unit = field.zeros(k)
    unit[0] = field.scalar(1)
    return Algebra(field, mul, unit, name or f"{field}[x]/(x^{k})")


def dual_numbers(field: Field, name: str | None = None) -> Algebra:
    return truncated_polynomials(field, 2, name or f"{field}[x]/(x^2)")


def ground_field(field: Field, name: str | None = None) -> Algebra:
    return truncated_polynomials(field, 1, name or str(field))


def direct_product(a: Algebra, b: Algebra, name: str | None = None) -> Algebra:
    """A x B with the concatenated basis (A-part first)."""
    if a.field != b.field:
        raise AlgebraError("direct product of algebras over different fields")
    F = a.field
    n, m = a.dim, b.dim
    mul = F.zeros((n + m, n + m, n + m))
    mul[:n, :n, :n] = a.mul
    mul[n:, n:, n:] = b.mul
    unit = np.concatenate([a.unit, b.unit])
    return Algebra(F, mul, unit, name or f"{a.name}×{b.name}")


def triangular(a: Algebra, module, b: Algebra, name: str | None = None) -> Algebra:
    """Tri(A; M; B) with basis ordered (A-part, M-part, B-part).

    ``module`` is an (A,B)-bimodule presented over the product ``A x B``
    (left action of ``(a, b)`` is that of ``a``, right action that of ``b``).
    """
    from .bimodule import validate_bimodule

    if a.field != b.field:
        raise AlgebraError("triangular algebra over mixed fields")
    F = a.field
    n, m, k = a.dim, module.dim, b.dim
    if module.algebra.dim != n + k:
        raise AlgebraError("module must be presented over A x B")
    rep = validate_bimodule(module)
    if not rep.ok:
        raise AlgebraError(f"invalid (A,B)-bimodule: {rep.message}")
    d = n + m + k
    mul = F.zeros((d, d, d))
    mul[:n, :n, :n] = a.mul
    mul[n + m :, n + m :, n + m :] = b.mul
    # a * m' lands in M via the left action of (a, 0)
    for i in range(n):
        mul[i, n : n + m, n : n + m] = module.left[i].T
    # m * b' via the right action of (0, b')
    for j in range(k):
        mul[n : n + m, n + m + j, n : n + m] = module.right[n + j].T
    unit = np.concatenate([a.unit, F.zeros(m), b.unit])
    return Algebra(F, mul, unit, name or f"Tri({a.name};{module.name};{b.name})")


def build_standard(kind: str, field: Field, *args, **kwargs) -> Algebra:
    builders = {
        "matrix_algebra": lambda n, **kw: matrix_algebra(field, n, **kw),
        "dual_numbers": lambda **kw: dual_numbers(field, **kw),
        "truncated_polynomials": lambda k, **kw: truncated_polynomials(field, k, **kw),
        "ground_field": lambda **kw: ground_field(field, **kw),
        "direct_product": lambda a, b, **kw: direct_product(a, b, **kw),
        "triangular": lambda a, m, b, **kw: triangular(a, m, b, **kw),
    }
    if kind not in builders:
        raise AlgebraError(f"unknown standard algebra {kind!r}")
    return builders[kind](*args, **kwargs)
