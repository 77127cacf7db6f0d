"""Exact dense linear algebra over a :class:`~algcoh.field.Field`.

Vectors are 1-d arrays and matrices 2-d arrays in the field's canonical
form.  Pivoting always takes the first nonzero entry in column order, so
every result here is deterministic.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .field import Field


class LinAlgError(ValueError):
    pass


def _rref_object(field: Field, mat: np.ndarray):
    R = [list(row) for row in field.reduce(mat)]
    rows = len(R)
    cols = mat.shape[1] if mat.ndim == 2 else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        k = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if k is None:
            continue
        R[r], R[k] = R[k], R[r]
        inv = field.inv(R[r][c])
        piv_row = [field.scalar(x * inv) for x in R[r]]
        R[r] = piv_row
        nz = [j for j in range(c, cols) if piv_row[j] != 0]
        for i in range(rows):
            f = R[i][c]
            if i == r or f == 0:
                continue
            row = R[i]
            for j in nz:
                row[j] = field.scalar(row[j] - f * piv_row[j])
        pivots.append(c)
        r += 1
    out = field.zeros((rows, cols))
    for i, row in enumerate(R):
        out[i, :] = row
    return out, pivots


def rref(field: Field, mat) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form: ``(R, pivot_columns, rank)``.

    >>> F = Field(3)
    >>> R, piv, rank = rref(F, [[2]])
    >>> R.tolist(), piv, rank
    ([[1]], [0], 1)
    """
    m = field.reduce(mat)
    if m.ndim != 2:
        raise LinAlgError(f"expected a matrix, got shape {m.shape}")
    if m.size == 0:
        return m, [], 0
    if field.uses_int64:
        R, piv = _kernels.rref_modp(m, field.p)
        return R, [int(c) for c in piv], len(piv)
    R, piv = _rref_object(field, m)
    return R, piv, len(piv)


def rank(field: Field, mat) -> int:
    return rref(field, mat)[2]


def kernel_basis(field: Field, mat) -> np.ndarray:
    """Basis of the right null space ``{v : mat @ v = 0}`` as rows."""
    m = field.reduce(mat)
    cols = m.shape[1]
    R, piv, r = rref(field, m)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = field.zeros((len(free), cols))
    for k, fc in enumerate(free):
        basis[k, fc] = field.scalar(1)
        for i, pc in enumerate(piv):
            basis[k, pc] = field.neg(R[i, fc])
    return basis


def kernel(field: Field, mat) -> "Subspace":
    m = field.reduce(mat)
    return Subspace(field, m.shape[1], kernel_basis(field, m))


def image(field: Field, mat) -> "Subspace":
    """Column space of ``mat``."""
    m = field.reduce(mat)
    return Subspace(field, m.shape[0], m.T)


def solve(field: Field, mat, rhs):
    """Some ``x`` with ``mat @ x == rhs``, or ``None`` when inconsistent.

    Free variables are set to zero.
    """
    m = field.reduce(mat)
    b = field.reduce(rhs)
    if m.ndim != 2 or b.ndim != 1 or b.shape[0] != m.shape[0]:
        raise LinAlgError(f"dimension mismatch: matrix {m.shape}, rhs {b.shape}")
    rows, cols = m.shape
    aug = field.zeros((rows, cols + 1))
    aug[:, :cols] = m
    aug[:, cols] = b
    R, piv, _ = rref(field, aug)
    if cols in piv:
        return None
    x = field.zeros(cols)
    for i, c in enumerate(piv):
        x[c] = R[i, cols]
    return x


def preimage(field: Field, mat, target: "Subspace") -> "Subspace":
    """``{x : mat @ x in target}``."""
    m = field.reduce(mat)
    rows, cols = m.shape
    if target.ambient_dim != rows:
        raise LinAlgError("target subspace lives in the wrong ambient space")
    # mat @ x - B^T y = 0, keep the x-part
    B = target.basis
    system = field.zeros((rows, cols + B.shape[0]))
    system[:, :cols] = m
    if B.shape[0]:
        system[:, cols:] = field.reduce(-B.T)
    ker = kernel_basis(field, system)
    return Subspace(field, cols, ker[:, :cols])


class Subspace:
    """Subspace of ``field ** ambient_dim`` stored by an RREF basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, generators=None):
        self.field = field
        self.ambient_dim = int(ambient_dim)
        if generators is None:
            gens = field.zeros((0, self.ambient_dim))
        else:
            gens = field.reduce(generators)
            if gens.ndim == 1:
                gens = gens.reshape(1, -1) if gens.size else field.zeros((0, self.ambient_dim))
            if gens.shape[0] == 0:
                gens = field.zeros((0, self.ambient_dim))
            if gens.shape[1] != self.ambient_dim:
                raise LinAlgError(
                    f"generators have length {gens.shape[1]}, ambient dim is {self.ambient_dim}"
                )
        R, piv, r = rref(field, gens) if gens.shape[0] else (gens, [], 0)
        self.basis = R[:r]
        self.pivots = tuple(piv)

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, field.eye(n))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"

    def _check(self, other: "Subspace"):
        if other.field != self.field or other.ambient_dim != self.ambient_dim:
            raise LinAlgError("subspaces live in different ambient spaces")

    def residual(self, v) -> np.ndarray:
        """``v`` reduced against the basis pivots (zero iff ``v`` is a member)."""
        F = self.field
        r = F.reduce(v).copy()
        for row, c in zip(self.basis, self.pivots):
            if r[c] != 0:
                r = F.reduce(r - r[c] * row)
        return r

    def contains(self, v) -> bool:
        v = self.field.reduce(v)
        if v.shape != (self.ambient_dim,):
            raise LinAlgError(f"vector of length {v.shape} in ambient dim {self.ambient_dim}")
        return self.field.is_zero(self.residual(v))

    __contains__ = contains

    def coordinates(self, v):
        """Coefficients of ``v`` in the RREF basis, or ``None`` if not a member."""
        v = self.field.reduce(v)
        if not self.contains(v):
            return None
        return self.field.reduce([v[c] for c in self.pivots]) if self.dim else self.field.zeros(0)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient_dim, np.vstack([self.basis, other.basis]))

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        F = self.field
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(F, self.ambient_dim)
        # x U = y W  <=>  [U; -W]^T (x, y) = 0
        stacked = np.vstack([self.basis, F.reduce(-other.basis)])
        rel = kernel_basis(F, stacked.T)
        gens = F.matmul(rel[:, : self.dim], self.basis) if rel.shape[0] else None
        return Subspace(F, self.ambient_dim, gens)

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    __le__ = issubspace

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.pivots))

    def map(self, mat) -> "Subspace":
        """Image of this subspace under ``v -> mat @ v``."""
        F = self.field
        m = F.reduce(mat)
        if self.dim == 0:
            return Subspace.zero(F, m.shape[0])
        return Subspace(F, m.shape[0], F.matmul(self.basis, m.T))

    def complement_representatives(self, sub: "Subspace") -> np.ndarray:
        """Rows of this basis completing an RREF basis of ``sub`` to one of ``self``.

        They represent a basis of the quotient ``self / sub``.
        """
        if not sub.issubspace(self):
            raise LinAlgError("quotient requires sub to be contained in the space")
        reps = []
        current = sub
        for v in self.basis:
            if not current.contains(v):
                reps.append(v)
                current = current + Subspace(self.field, self.ambient_dim, v)
        if reps:
            return np.vstack(reps)
        return self.field.zeros((0, self.ambient_dim))


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    return u + w


def subspace_intersect(u: Subspace, w: Subspace) -> Subspace:
    return u & w


def quotient_dim(sub: Subspace, space: Subspace) -> int:
    if not sub.issubspace(space):
        raise LinAlgError("quotient_dim requires sub to be contained in space")
    return space.dim - sub.dim


def membership(space: Subspace, v) -> bool:
    return space.contains(v)
