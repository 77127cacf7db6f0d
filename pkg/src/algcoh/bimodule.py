"""Unital bimodules over an :class:`~algcoh.algebra.Algebra`.

A bimodule of dimension m is given by matrices ``left[i]`` (m x m, the map
``y -> e_i y``) and ``right[i]`` (the map ``y -> y e_i``), one per basis
element of the acting algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import Algebra, AlgebraError, ValidationReport, direct_product
from .linalg import Subspace, kernel


class Bimodule:
    def __init__(self, algebra: Algebra, left, right, name: str = "M", validate: bool = True):
        F = algebra.field
        self.algebra = algebra
        self.field = F
        self.name = name
        n = algebra.dim
        self.left = F.reduce(left)
        self.right = F.reduce(right)
        if self.left.ndim != 3 or self.left.shape[0] != n:
            raise AlgebraError(f"left action needs {n} square matrices, got shape {self.left.shape}")
        self.dim = self.left.shape[1]
        expected = (n, self.dim, self.dim)
        if self.left.shape != expected or self.right.shape != expected:
            raise AlgebraError(
                f"action shapes {self.left.shape}/{self.right.shape}, expected {expected}"
            )
        if validate:
            validate_bimodule(self).raise_if_failed()

    def __repr__(self) -> str:
        return f"Bimodule({self.name!r}, dim={self.dim}, over={self.algebra.name!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Bimodule)
            and self.algebra == other.algebra
            and np.array_equal(self.left, other.left)
            and np.array_equal(self.right, other.right)
        )

    __hash__ = object.__hash__

    def left_op(self, a) -> np.ndarray:
        F = self.field
        if self.algebra.dim == 0:
            return F.zeros((self.dim, self.dim))
        return F.reduce(np.tensordot(F.reduce(a), self.left, axes=(0, 0)))

    def right_op(self, a) -> np.ndarray:
        F = self.field
        if self.algebra.dim == 0:
            return F.zeros((self.dim, self.dim))
        return F.reduce(np.tensordot(F.reduce(a), self.right, axes=(0, 0)))

    def act_left(self, a, y) -> np.ndarray:
        return self.field.matmul(self.left_op(a), self.field.reduce(y))

    def act_right(self, y, a) -> np.ndarray:
        return self.field.matmul(self.right_op(a), self.field.reduce(y))

    @cached_property
    def ad_ops(self) -> np.ndarray:
        """``ad_ops[i]`` is the matrix of ``y -> [e_i, y] = e_i y - y e_i``."""
        return self.field.reduce(self.left - self.right)

    @cached_property
    def annihilators(self) -> "Annihilators":
        return annihilators(self)


def validate_bimodule(mod: Bimodule) -> ValidationReport:
    F, A = mod.field, mod.algebra
    n, m = A.dim, mod.dim
    L, R = mod.left, mod.right
    c = A.mul
    for i in range(n):
        for j in range(n):
            # L(e_i e_j) = L_i L_j
            lhs = F.reduce(np.tensordot(c[i, j], L, axes=(0, 0))) if n else F.zeros((m, m))
            if not np.array_equal(lhs, F.matmul(L[i], L[j])):
                return ValidationReport(False, f"left action not multiplicative at ({i},{j})", ("left", i, j))
            # R(e_i e_j) = R_j R_i
            lhs = F.reduce(np.tensordot(c[i, j], R, axes=(0, 0))) if n else F.zeros((m, m))
            if not np.array_equal(lhs, F.matmul(R[j], R[i])):
                return ValidationReport(False, f"right action not multiplicative at ({i},{j})", ("right", i, j))
    eye = F.eye(m)
    if not np.array_equal(mod.left_op(A.unit), eye):
        return ValidationReport(False, "unit does not act as identity on the left", ("unit", "left"))
    if not np.array_equal(mod.right_op(A.unit), eye):
        return ValidationReport(False, "unit does not act as identity on the right", ("unit", "right"))
    for i in range(n):
        for j in range(n):
            if not np.array_equal(F.matmul(L[i], R[j]), F.matmul(R[j], L[i])):
                return ValidationReport(False, f"(e{i} m) e{j} ≠ e{i} (m e{j})", ("commute", i, j))
    return ValidationReport(True)


@dataclass(frozen=True)
class Annihilators:
    left: Subspace
    right: Subspace
    both: Subspace


def annihilators(mod: Bimodule) -> Annihilators:
    """Left, right annihilators of ``mod`` in ``A`` and their intersection."""
    F, A = mod.field, mod.algebra
    n, m = A.dim, mod.dim

    def stacked(ops):
        # a -> a y_s for every module basis vector y_s; column i is e_i y_s
        if m == 0:
            return F.zeros((0, n))
        return np.vstack([ops[:, :, s].T for s in range(m)])

    l_ann = kernel(F, stacked(mod.left)) if m else Subspace.full(F, n)
    r_ann = kernel(F, stacked(mod.right)) if m else Subspace.full(F, n)
    return Annihilators(l_ann, r_ann, l_ann & r_ann)


def symmetric_center_action(mod: Bimodule) -> bool:
    """Whether every central element ``z`` satisfies ``z y = y z`` on ``mod``."""
    F = mod.field
    for z in mod.algebra.center.basis:
        if not F.is_zero(F.sub(mod.left_op(z), mod.right_op(z))):
            return False
    return True


def regular_bimodule(alg: Algebra, name: str | None = None) -> Bimodule:
    """A acting on itself; the axioms are those of A, so no separate validation."""
    return Bimodule(alg, alg.left_ops, alg.right_ops, name or alg.name, validate=False)


def zero_bimodule(alg: Algebra, name: str = "0") -> Bimodule:
    F = alg.field
    return Bimodule(alg, F.zeros((alg.dim, 0, 0)), F.zeros((alg.dim, 0, 0)), name)


def dual_bimodule(alg: Algebra, name: str | None = None) -> Bimodule:
    """DA = Hom(A, F) with ``(a f b)(x) = f(b x a)``, in the dual basis."""
    F = alg.field
    left = np.stack([F.reduce(alg.right_ops[i].T) for i in range(alg.dim)]) if alg.dim else alg.right_ops
    right = np.stack([F.reduce(alg.left_ops[i].T) for i in range(alg.dim)]) if alg.dim else alg.left_ops
    return Bimodule(alg, left, right, name or f"D{alg.name}")


def product_bimodule(a: Algebra, b: Algebra, left_a, right_b, name: str = "M",
                     product: Algebra | None = None) -> Bimodule:
    """An (A,B)-bimodule viewed over ``A x B``: ``(a,b) m = a m`` and ``m (a,b) = m b``.

    ``left_a[i]`` gives the action of the A-basis, ``right_b[j]`` that of the B-basis.
    """
    F = a.field
    prod = product if product is not None else direct_product(a, b)
    left_a = F.reduce(left_a)
    right_b = F.reduce(right_b)
    m = left_a.shape[1]
    left = F.zeros((a.dim + b.dim, m, m))
    right = F.zeros((a.dim + b.dim, m, m))
    left[: a.dim] = left_a
    right[a.dim :] = right_b
    return Bimodule(prod, left, right, name)


def lift_to_trivext(mod: Bimodule, ext, name: str | None = None) -> Bimodule:
    """``mod`` viewed over ``ext.total`` via ``(a, m) n = a n`` and ``n (a, m) = n a``."""
    if mod.algebra != ext.base:
        raise AlgebraError("bimodule and extension have different base algebras")
    F = mod.field
    total_dim = ext.total.dim
    left = F.zeros((total_dim, mod.dim, mod.dim))
    right = F.zeros((total_dim, mod.dim, mod.dim))
    left[: mod.algebra.dim] = mod.left
    right[: mod.algebra.dim] = mod.right
    return Bimodule(ext.total, left, right, name or mod.name)


def example_s_n(field, name_s: str = "S", name_n: str = "N"):
    """The triangular algebra S = Tri(F;F;F) and the S-bimodule N = F twisted.

    N is one-dimensional with ``((a, b), m) n = b n`` and ``n ((a, b), m) = n a``.
    Basis of S is (E11, E12, E22).
    """
    from .algebra import ground_field, triangular

    k = ground_field(field)
    one = field.eye(1)
    zero = field.zeros((1, 1))
    mod = product_bimodule(k, k, [one], [one], name="F")
    s_alg = triangular(k, mod, k, name=name_s)
    # E11 -> a=1, E12 -> m, E22 -> b=1
    left = np.stack([zero, zero, one])
    right = np.stack([one, zero, zero])
    return s_alg, Bimodule(s_alg, left, right, name_n)
