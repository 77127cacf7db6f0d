"""Spaces of derivations, inner derivations and bimodule maps.

A linear map ``X: V -> W`` (dim V = s, dim W = t) is a t x s matrix and is
flattened column-major: ``vec[j*t + i] = X[i, j]``, i.e. the images of the
basis vectors one after the other.  With this convention the map
``X -> P X Q`` has matrix ``kron(Q.T, P)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, AlgebraError
from .bimodule import Bimodule, regular_bimodule
from .field import Field
from .linalg import Subspace, image, kernel, solve
from .trivext import TrivialExtension, trivext


def flatten(mat) -> np.ndarray:
    return np.asarray(mat).T.reshape(-1)


def unflatten(vec, source_dim: int, target_dim: int) -> np.ndarray:
    return np.asarray(vec).reshape(source_dim, target_dim).T


@dataclass
class LinearMapSpace:
    """A subspace of Hom(F^source_dim, F^target_dim) in flattened coordinates."""

    source_dim: int
    target_dim: int
    space: Subspace
    tag: str

    @property
    def field(self) -> Field:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def maps(self) -> list[np.ndarray]:
        return [unflatten(v, self.source_dim, self.target_dim) for v in self.space.basis]

    def contains(self, mat) -> bool:
        return self.space.contains(flatten(self.field.reduce(mat)))

    __contains__ = contains

    def export(self) -> str:
        F = self.field
        lines = [
            f"tag: {self.tag}",
            f"source_dim: {self.source_dim}",
            f"target_dim: {self.target_dim}",
            f"field: {F.token}",
            f"dim: {self.dim}",
        ]
        for v in self.space.basis:
            lines.append(" ".join(F.format_scalar(x) for x in v))
        return "\n".join(lines) + "\n"


def _stack(field: Field, blocks, cols: int) -> np.ndarray:
    blocks = [b for b in blocks if b.shape[0]]
    return np.vstack(blocks) if blocks else field.zeros((0, cols))


def _unit_vec(field: Field, n: int, i: int) -> np.ndarray:
    v = field.zeros((1, n))
    v[0, i] = field.scalar(1)
    return v


# -- Der(A, M) and Innder(A, M) ----------------------------------------------

def leibniz_system(alg: Algebra, mod: Bimodule) -> np.ndarray:
    """Rows expressing ``D(e_i e_j) = D(e_i) e_j + e_i D(e_j)`` for D: A -> M."""
    F = alg.field
    n, m = alg.dim, mod.dim
    eye = F.eye(m)
    blocks = []
    for i in range(n):
        ei = _unit_vec(F, n, i)
        for j in range(n):
            ej = _unit_vec(F, n, j)
            cij = alg.mul[i, j].reshape(1, n)
            blocks.append(
                F.reduce(np.kron(cij, eye) - np.kron(ei, mod.right[j]) - np.kron(ej, mod.left[i]))
            )
    return _stack(F, blocks, n * m)


def derivation_space(alg: Algebra, mod: Bimodule | None = None) -> LinearMapSpace:
    """Der(A, M); with ``mod=None`` this is Der(A)."""
    mod = mod if mod is not None else regular_bimodule(alg)
    space = kernel(alg.field, leibniz_system(alg, mod))
    return LinearMapSpace(alg.dim, mod.dim, space, "Der")


def _inner_matrix(alg: Algebra, mod: Bimodule) -> np.ndarray:
    # m0 -> vec([m0, -]); column block j is (R_j - L_j) m0
    F = alg.field
    if alg.dim == 0:
        return F.zeros((0, mod.dim))
    return F.reduce(np.vstack([mod.right[j] - mod.left[j] for j in range(alg.dim)]))


def inner_derivation_space(alg: Algebra, mod: Bimodule | None = None) -> LinearMapSpace:
    mod = mod if mod is not None else regular_bimodule(alg)
    mat = _inner_matrix(alg, mod)
    space = image(alg.field, mat) if mat.shape[0] else Subspace.zero(alg.field, 0)
    return LinearMapSpace(alg.dim, mod.dim, space, "Innder")


def inner_map(alg: Algebra, mod: Bimodule, m0) -> np.ndarray:
    """The map ``a -> [m0, a] = m0 a - a m0`` as a matrix."""
    F = alg.field
    vec = F.matmul(_inner_matrix(alg, mod), F.reduce(m0))
    return unflatten(vec, alg.dim, mod.dim)


def inner_witness(alg: Algebra, mod: Bimodule | None, D):
    """Some ``m0`` with ``D = [m0, -]``, or ``None``."""
    mod = mod if mod is not None else regular_bimodule(alg)
    F = alg.field
    if alg.dim * mod.dim == 0:
        return F.zeros(mod.dim) if F.is_zero(D) else None
    return solve(F, _inner_matrix(alg, mod), flatten(F.reduce(D)))


@dataclass(frozen=True)
class Quotient:
    """``space / sub`` with representatives completing ``sub``'s basis."""

    space: Subspace
    sub: Subspace
    representatives: np.ndarray

    @property
    def dim(self) -> int:
        return self.space.dim - self.sub.dim


def quotient(space: Subspace, sub: Subspace) -> Quotient:
    return Quotient(space, sub, space.complement_representatives(sub))


def h1(alg: Algebra, mod: Bimodule | None = None) -> Quotient:
    """Der(A, M) / Innder(A, M)."""
    der = derivation_space(alg, mod)
    inn = inner_derivation_space(alg, mod)
    return quotient(der.space, inn.space)


def h1_dim(alg: Algebra, mod: Bimodule | None = None) -> tuple[int, list[np.ndarray]]:
    q = h1(alg, mod)
    n = alg.dim
    m = mod.dim if mod is not None else n
    return q.dim, [unflatten(v, n, m) for v in q.representatives]


# -- bimodule homomorphisms and E(M) -----------------------------------------

def _commute_rows(F: Field, X_src_ops, X_tgt_ops, s: int, t: int) -> list[np.ndarray]:
    # X P_i - Q_i X = 0 for X: F^s -> F^t
    eye_s, eye_t = F.eye(s), F.eye(t)
    return [
        F.reduce(np.kron(P.T, eye_t) - np.kron(eye_s, Q)) for P, Q in zip(X_src_ops, X_tgt_ops)
    ]


def hom_system(alg: Algebra, mod: Bimodule) -> np.ndarray:
    """Rows for T: M -> A being a bimodule homomorphism."""
    F = alg.field
    n, m = alg.dim, mod.dim
    rows = _commute_rows(F, mod.left, alg.left_ops, m, n)
    rows += _commute_rows(F, mod.right, alg.right_ops, m, n)
    return _stack(F, rows, m * n)


def hom_to_algebra_space(alg: Algebra, mod: Bimodule) -> LinearMapSpace:
    return LinearMapSpace(mod.dim, alg.dim, kernel(alg.field, hom_system(alg, mod)), "Hom(M,A)")


def alternating_system(alg: Algebra, mod: Bimodule) -> np.ndarray:
    """Rows for ``T(y_j) y_k + y_j T(y_k) = 0`` on module basis pairs."""
    F = alg.field
    n, m = alg.dim, mod.dim
    blocks = []
    for j in range(m):
        for k in range(m):
            row = F.zeros((m, m * n))
            for l in range(n):
                row[:, j * n + l] += mod.left[l][:, k]
                row[:, k * n + l] += mod.right[l][:, j]
            blocks.append(F.reduce(row))
    return _stack(F, blocks, m * n)


def e_space(alg: Algebra, mod: Bimodule) -> LinearMapSpace:
    F = alg.field
    system = _stack(F, [hom_system(alg, mod), alternating_system(alg, mod)], mod.dim * alg.dim)
    return LinearMapSpace(mod.dim, alg.dim, kernel(F, system), "E")


def end_system(alg: Algebra, mod: Bimodule) -> np.ndarray:
    F = alg.field
    m = mod.dim
    rows = _commute_rows(F, mod.left, mod.left, m, m) + _commute_rows(F, mod.right, mod.right, m, m)
    return _stack(F, rows, m * m)


def bimodule_end_space(alg: Algebra, mod: Bimodule) -> LinearMapSpace:
    return LinearMapSpace(mod.dim, mod.dim, kernel(alg.field, end_system(alg, mod)), "End")


def _ad_module_matrix(alg: Algebra, mod: Bimodule) -> np.ndarray:
    # a0 -> vec([a0, -] on M); column i is vec(L_i - R_i)
    F = alg.field
    m2 = mod.dim * mod.dim
    if alg.dim == 0:
        return F.zeros((m2, 0))
    return F.reduce(np.stack([flatten(mod.ad_ops[i]) for i in range(alg.dim)], axis=1).reshape(m2, alg.dim))


def module_commutator(mod: Bimodule, a0) -> np.ndarray:
    """The map ``y -> [a0, y] = a0 y - y a0`` on M."""
    F = mod.field
    return F.sub(mod.left_op(a0), mod.right_op(a0))


def inn_gd(alg: Algebra, mod: Bimodule) -> LinearMapSpace:
    return LinearMapSpace(mod.dim, mod.dim, image(alg.field, _ad_module_matrix(alg, mod)), "InnGd")


def inn_bi(alg: Algebra, mod: Bimodule) -> LinearMapSpace:
    gd = inn_gd(alg, mod)
    end = bimodule_end_space(alg, mod)
    return LinearMapSpace(mod.dim, mod.dim, gd.space & end.space, "InnBi")


def innbi_central(alg: Algebra, mod: Bimodule) -> LinearMapSpace:
    F = alg.field
    Z = alg.center
    m2 = mod.dim * mod.dim
    if Z.dim == 0 or m2 == 0:
        return LinearMapSpace(mod.dim, mod.dim, Subspace.zero(F, m2), "Innbi")
    mat = F.matmul(_ad_module_matrix(alg, mod), Z.basis.T)
    return LinearMapSpace(mod.dim, mod.dim, image(F, mat), "Innbi")


# -- generalized derivations -------------------------------------------------

@dataclass
class GDerSpace:
    """Pairs ``(d, S)`` flattened as ``vec(d) ++ vec(S)``."""

    algebra_dim: int
    module_dim: int
    space: Subspace
    tag: str

    @property
    def field(self) -> Field:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def split(self) -> int:
        return self.algebra_dim ** 2

    def pairs(self) -> list[tuple[np.ndarray, np.ndarray]]:
        return [self.unpack(v) for v in self.space.basis]

    def unpack(self, vec) -> tuple[np.ndarray, np.ndarray]:
        n, m = self.algebra_dim, self.module_dim
        vec = np.asarray(vec)
        return unflatten(vec[: n * n], n, n), unflatten(vec[n * n :], m, m)

    def pack(self, d, S) -> np.ndarray:
        F = self.field
        return np.concatenate([flatten(F.reduce(d)), flatten(F.reduce(S))])

    def contains(self, d, S) -> bool:
        return self.space.contains(self.pack(d, S))

    def d_projection(self) -> Subspace:
        """The span of the d-components (for ``der`` this is Γ̄)."""
        F = self.field
        n2 = self.split
        if self.dim == 0:
            return Subspace.zero(F, n2)
        return Subspace(F, n2, self.space.basis[:, :n2])

    def s_projection(self) -> Subspace:
        F = self.field
        if self.dim == 0:
            return Subspace.zero(F, self.module_dim ** 2)
        return Subspace(F, self.module_dim ** 2, self.space.basis[:, self.split :])

    def embed(self, vec) -> np.ndarray:
        """``(d, S)`` as the block-diagonal map on A⋉M."""
        F = self.field
        n, m = self.algebra_dim, self.module_dim
        d, S = self.unpack(vec)
        out = F.zeros((n + m, n + m))
        out[:n, :n] = d
        out[n:, n:] = S
        return out


def generalized_system(alg: Algebra, mod: Bimodule) -> np.ndarray:
    """Rows for ``S(a y) = a S(y) + d(a) y`` and ``S(y a) = S(y) a + y d(a)``."""
    F = alg.field
    n, m = alg.dim, mod.dim
    m2 = m * m
    eye = F.eye(m)
    vecL = [flatten(mod.left[l]) for l in range(n)]
    vecR = [flatten(mod.right[l]) for l in range(n)]
    blocks = []
    for i in range(n):
        for ops, vecs in ((mod.left, vecL), (mod.right, vecR)):
            row = F.zeros((m2, n * n + m2))
            row[:, n * n :] = F.reduce(np.kron(ops[i].T, eye) - np.kron(eye, ops[i]))
            for l in range(n):
                row[:, i * n + l] = F.reduce(-vecs[l])
            blocks.append(row)
    return _stack(F, blocks, n * n + m2)


def generalized_pairs(alg: Algebra, mod: Bimodule) -> GDerSpace:
    """All pairs satisfying the two identities, without requiring ``d`` to be a derivation."""
    F = alg.field
    return GDerSpace(alg.dim, mod.dim, kernel(F, generalized_system(alg, mod)), "pairs")


def nonderivation_pairs(alg: Algebra, mod: Bimodule) -> list[int]:
    """Basis indices of :func:`generalized_pairs` whose d-component fails Leibniz."""
    der_a = derivation_space(alg)
    raw = generalized_pairs(alg, mod)
    return [k for k, (d, _) in enumerate(raw.pairs()) if not der_a.contains(d)]


def gder_space(alg: Algebra, mod: Bimodule) -> GDerSpace:
    """Pairs ``(d, S)`` with ``d`` in Der(A) and ``S`` a module generalized d-derivation."""
    F = alg.field
    n, m = alg.dim, mod.dim
    leib = leibniz_system(alg, regular_bimodule(alg))
    padded = F.zeros((leib.shape[0], n * n + m * m))
    padded[:, : n * n] = leib
    system = _stack(F, [generalized_system(alg, mod), padded], n * n + m * m)
    return GDerSpace(n, m, kernel(F, system), "GDer")


def restricted_der(ext: TrivialExtension) -> GDerSpace:
    sp = gder_space(ext.base, ext.module)
    sp.tag = "der"
    return sp


def _innder_pair_matrix(alg: Algebra, mod: Bimodule) -> np.ndarray:
    F = alg.field
    n, m = alg.dim, mod.dim
    cols = []
    reg = regular_bimodule(alg)
    for i in range(n):
        cols.append(np.concatenate([flatten(reg.ad_ops[i]), flatten(mod.ad_ops[i])]))
    if not cols:
        return F.zeros((n * n + m * m, 0))
    return F.reduce(np.stack(cols, axis=1))


def restricted_innder(ext: TrivialExtension) -> GDerSpace:
    """Image of ``a0 -> ([a0, -]_A, [a0, -]_M)``."""
    A, M = ext.base, ext.module
    mat = _innder_pair_matrix(A, M)
    space = image(A.field, mat) if mat.shape[1] else Subspace.zero(A.field, mat.shape[0])
    return GDerSpace(A.dim, M.dim, space, "innder")


def restricted_innder_kernel(ext: TrivialExtension) -> Subspace:
    """``{a0 : [a0, -] = 0 on A and on M}``."""
    return kernel(ext.field, _innder_pair_matrix(ext.base, ext.module))


# -- derivations of A⋉M ------------------------------------------------------

@dataclass(frozen=True)
class DerivationDecomposition:
    D_A: np.ndarray
    T: np.ndarray
    D_M: np.ndarray
    S: np.ndarray

    def reassemble(self, field: Field) -> np.ndarray:
        n, m = self.D_A.shape[0], self.S.shape[0]
        out = field.zeros((n + m, n + m))
        out[:n, :n] = self.D_A
        out[:n, n:] = self.T
        out[n:, :n] = self.D_M
        out[n:, n:] = self.S
        return out


class NotADerivation(AlgebraError):
    pass


def leibniz_violation(alg: Algebra, D) -> tuple[int, int] | None:
    """First basis pair where ``D`` fails Leibniz on ``alg``, else ``None``."""
    F = alg.field
    D = F.reduce(D)
    n = alg.dim
    for i in range(n):
        for j in range(n):
            lhs = F.matmul(D, alg.mul[i, j])
            rhs = F.add(F.matmul(alg.right_ops[j], D[:, i]), F.matmul(alg.left_ops[i], D[:, j]))
            if not np.array_equal(lhs, rhs):
                return i, j
    return None


def decompose_derivation(ext: TrivialExtension, D, check: bool = True) -> DerivationDecomposition:
    F = ext.field
    A, M = ext.base, ext.module
    n = A.dim
    D = F.reduce(D)
    bad = leibniz_violation(ext.total, D)
    if bad is not None:
        raise NotADerivation(f"Leibniz fails on basis pair {bad} of {ext.total.name}")
    dec = DerivationDecomposition(D[:n, :n], D[:n, n:], D[n:, :n], D[n:, n:])
    if check:
        problems = []
        if dec.D_A not in derivation_space(A):
            problems.append("D_A not a derivation")
        if dec.D_M not in derivation_space(A, M):
            problems.append("D_M not a derivation")
        if dec.T not in e_space(A, M):
            problems.append("T not in E(M)")
        if not generalized_pairs(A, M).contains(dec.D_A, dec.S):
            problems.append("S not a generalized D_A-derivation")
        if not np.array_equal(dec.reassemble(F), D):
            problems.append("reassembly differs")
        if problems:
            raise AssertionError("; ".join(problems))
    return dec


@dataclass(frozen=True)
class InnerCheck:
    witness: tuple | None
    decomposition: DerivationDecomposition
    t_zero: bool
    s_inner: bool
    d_m_inner: bool
    annihilators_trivial: bool

    @property
    def is_inner(self) -> bool:
        return self.witness is not None

    @property
    def components_inner(self) -> bool:
        return self.t_zero and self.s_inner and self.d_m_inner

    @property
    def consistent(self) -> bool:
        """Forward implication always; converse only with trivial annihilator intersection."""
        if self.is_inner and not self.components_inner:
            return False
        if self.annihilators_trivial and self.components_inner and not self.is_inner:
            return False
        return True


def is_inner(ext: TrivialExtension, D, spaces: dict | None = None) -> InnerCheck:
    """Decide whether ``D = [(a0, m0), -]`` and compare with the component criteria."""
    F = ext.field
    A, M = ext.base, ext.module
    n = A.dim
    spaces = spaces if spaces is not None else {}
    if "InnGd" not in spaces:
        spaces["InnGd"] = inn_gd(A, M)
    if "Innder(A,M)" not in spaces:
        spaces["Innder(A,M)"] = inner_derivation_space(A, M)
    dec = decompose_derivation(ext, D, check=False)
    x0 = inner_witness(ext.total, None, D)
    witness = None if x0 is None else (x0[:n], x0[n:])
    return InnerCheck(
        witness=witness,
        decomposition=dec,
        t_zero=F.is_zero(dec.T),
        s_inner=dec.S in spaces["InnGd"],
        d_m_inner=dec.D_M in spaces["Innder(A,M)"],
        annihilators_trivial=M.annihilators.both.dim == 0,
    )


@dataclass(frozen=True)
class SplitResult:
    phi: np.ndarray
    phi_is_endomorphism: bool
    s_inner: bool
    phi_inner: bool


def split_generalized(alg: Algebra, mod: Bimodule, S, a0) -> SplitResult:
    """``S = Φ + [a0, -]`` for a generalized ``[a0, -]``-derivation ``S``."""
    F = alg.field
    S = F.reduce(S)
    d = alg.left_op(a0)
    d = F.sub(d, alg.right_op(a0))
    if not generalized_pairs(alg, mod).contains(d, S):
        raise AlgebraError("S is not a module generalized [a0,-]-derivation")
    phi = F.sub(S, module_commutator(mod, a0))
    gd = inn_gd(alg, mod)
    return SplitResult(
        phi=phi,
        phi_is_endomorphism=phi in bimodule_end_space(alg, mod),
        s_inner=S in gd,
        phi_inner=phi in gd,
    )


@dataclass(frozen=True)
class RegularCorollaryReport:
    checked: int
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


def check_m_equals_a_corollary(alg: Algebra) -> RegularCorollaryReport:
    """Inner derivations of A⋉A have T = 0, S = D_A, and inner D_A, D_M."""
    reg = regular_bimodule(alg)
    ext = trivext(alg, reg)
    inner_total = inner_derivation_space(ext.total)
    inn_a = inner_derivation_space(alg)
    failures = []
    for k, D in enumerate(inner_total.maps()):
        dec = decompose_derivation(ext, D, check=False)
        F = alg.field
        if not F.is_zero(dec.T):
            failures.append((k, "T != 0"))
        if not np.array_equal(dec.S, dec.D_A):
            failures.append((k, "S != D_A"))
        if dec.D_A not in inn_a:
            failures.append((k, "D_A not inner"))
        if dec.D_M not in inn_a:
            failures.append((k, "D_M not inner"))
    return RegularCorollaryReport(inner_total.dim, tuple(failures))
