"""Trivial extensions A⋉M, their centers, triangular representations and type (⋆)."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import (
    DEFAULT_ENUM_CAP,
    Algebra,
    AlgebraError,
    Element,
    EnumerationTooLarge,
    center,
    enumerate_idempotents,
)
from .bimodule import Bimodule, validate_bimodule, zero_bimodule
from .linalg import Subspace, kernel


@dataclass(eq=False)
class TrivialExtension:
    """``total`` has basis (A-part, M-part); ``split`` is ``dim A``."""

    base: Algebra
    module: Bimodule
    total: Algebra

    @property
    def split(self) -> int:
        return self.base.dim

    @property
    def field(self):
        return self.base.field

    @property
    def name(self) -> str:
        return self.total.name

    def pi_a(self, coords) -> np.ndarray:
        return self.field.reduce(coords)[: self.split]

    def pi_m(self, coords) -> np.ndarray:
        return self.field.reduce(coords)[self.split :]

    def embed(self, a=None, m=None) -> np.ndarray:
        F = self.field
        a = F.zeros(self.base.dim) if a is None else F.reduce(a)
        m = F.zeros(self.module.dim) if m is None else F.reduce(m)
        return np.concatenate([a, m])

    def element(self, a=None, m=None) -> Element:
        return self.total.element(self.embed(a, m))


def trivext(alg: Algebra, mod: Bimodule, name: str | None = None) -> TrivialExtension:
    """A⋉M with product ``(a, m)(b, n) = (ab, an + mb)``."""
    if mod.algebra != alg:
        raise AlgebraError("bimodule is not presented over this algebra")
    rep = validate_bimodule(mod)
    if not rep.ok:
        raise AlgebraError(f"invalid bimodule: {rep.message}")
    F = alg.field
    n, m = alg.dim, mod.dim
    d = n + m
    mul = F.zeros((d, d, d))
    mul[:n, :n, :n] = alg.mul
    for i in range(n):
        mul[i, n:, n:] = mod.left[i].T
        mul[n:, i, n:] = mod.right[i].T
    unit = np.concatenate([alg.unit, F.zeros(m)])
    total = Algebra(F, mul, unit, name or f"{alg.name}⋉{mod.name}")
    return TrivialExtension(alg, mod, total)


@dataclass(frozen=True)
class CenterComparison:
    direct: Subspace
    formula: Subspace
    projection_a: Subspace
    projection_m: Subspace

    @property
    def agree(self) -> bool:
        return self.direct == self.formula

    @property
    def product_decomposition(self) -> bool:
        return self.projection_a.dim + self.projection_m.dim == self.direct.dim


def center_trivext(ext: TrivialExtension) -> CenterComparison:
    """Center of A⋉M computed directly and from the membership conditions.

    The formula side imposes ``a in Z(A)``, ``[b, m] = 0`` for all ``b`` and
    ``[a, y] = 0`` for all ``y`` on a pair ``(a, m)``.
    """
    A, M, F = ext.base, ext.module, ext.field
    n, m = A.dim, M.dim
    direct = center(ext.total)
    blocks = []
    for j in range(n):
        row = F.zeros((n, n + m))
        row[:, :n] = F.reduce((A.mul[:, j, :] - A.mul[j, :, :]).T)
        blocks.append(row)
        row = F.zeros((m, n + m))
        row[:, n:] = M.ad_ops[j]
        blocks.append(row)
    for s in range(m):
        row = F.zeros((m, n + m))
        row[:, :n] = M.ad_ops[:, :, s].T
        blocks.append(row)
    system = np.vstack(blocks) if blocks else F.zeros((0, n + m))
    formula = kernel(F, system)
    proj_a = Subspace(F, n, direct.basis[:, :n]) if direct.dim else Subspace.zero(F, n)
    proj_m = Subspace(F, m, direct.basis[:, n:]) if direct.dim else Subspace.zero(F, m)
    return CenterComparison(direct, formula, proj_a, proj_m)


def _span_of_products(total: Algebra, left: Element, right: Element) -> Subspace:
    F = total.field
    gens = [(left * total.basis(i) * right).coords for i in range(total.dim)]
    return Subspace(F, total.dim, np.vstack(gens) if gens else None)


@dataclass
class TriangularSearch:
    status: str  # "found" | "none" | "undecided"
    idempotent: Element | None = None
    blocks: dict = dc_field(default_factory=dict)
    message: str = ""

    @property
    def found(self) -> bool:
        return self.status == "found"


def _corner_conditions(ext: TrivialExtension, e: Element) -> tuple[bool, bool]:
    A, M, F = ext.base, ext.module, ext.field
    f = A.one - e
    a_ok = all((f * A.basis(i) * e).is_zero for i in range(A.dim))
    m_ok = F.is_zero(F.matmul(M.left_op(f.coords), M.right_op(e.coords)))
    return a_ok, m_ok


def find_triangular_representation(
    ext: TrivialExtension, cap: int = DEFAULT_ENUM_CAP, candidates=None
) -> TriangularSearch:
    """First nontrivial idempotent ``e`` of A with ``(1-e)Ae = 0`` and ``(1-e)Me = 0``.

    Idempotents are scanned in lexicographic coordinate order.  Exceeding
    the enumeration cap gives the status ``"undecided"``, never ``"none"``.
    """
    try:
        idems = enumerate_idempotents(ext.base, cap=cap, candidates=candidates)
    except EnumerationTooLarge as exc:
        return TriangularSearch("undecided", message=f"undecided: enumeration exceeded cap ({exc})")
    except AlgebraError as exc:
        return TriangularSearch("undecided", message=f"undecided: {exc}")
    for e in idems:
        if e.is_trivial:
            continue
        a_ok, m_ok = _corner_conditions(ext, e)
        if a_ok and m_ok:
            return TriangularSearch("found", e, triangular_blocks(ext, e))
    note = "no nontrivial idempotent qualifies"
    if candidates is not None:
        # only the supplied candidates were examined
        return TriangularSearch("undecided", message=f"undecided: {note} among the supplied candidates")
    return TriangularSearch("none", message=note)


def triangular_blocks(ext: TrivialExtension, e: Element) -> dict:
    """Block dimensions of A⋉M cut by the idempotent ``(e, 0)``."""
    T = ext.total
    E = ext.element(e.coords)
    Fc = T.one - E
    ee = _span_of_products(T, E, E)
    ef = _span_of_products(T, E, Fc)
    ff = _span_of_products(T, Fc, Fc)
    fe = _span_of_products(T, Fc, E)
    return {
        "eTe": ee.dim,
        "eTf": ef.dim,
        "fTf": ff.dim,
        "fTe": fe.dim,
        "total": T.dim,
    }


def find_algebra_triangular_representation(alg: Algebra, cap: int = DEFAULT_ENUM_CAP,
                                           candidates=None) -> TriangularSearch:
    """The degenerate case M = 0."""
    return find_triangular_representation(trivext(alg, zero_bimodule(alg)), cap, candidates)


@dataclass(frozen=True)
class TypeStarReport:
    idempotent: Element
    eaf_zero: bool
    emf_is_m: bool
    fm_zero_me_zero: bool
    em_is_m_mf_is_m: bool
    corner_actions: bool

    @property
    def holds(self) -> bool:
        return self.eaf_zero and self.emf_is_m

    @property
    def equivalences_agree(self) -> bool:
        vals = {self.emf_is_m, self.fm_zero_me_zero, self.em_is_m_mf_is_m, self.corner_actions}
        return len(vals) == 1


def is_type_star(ext: TrivialExtension, e) -> TypeStarReport:
    A, M, F = ext.base, ext.module, ext.field
    e = e if isinstance(e, Element) else A.element(e)
    if not e.is_idempotent():
        raise AlgebraError(f"{e} is not idempotent")
    if e.is_trivial:
        raise AlgebraError("type (⋆) needs a nontrivial idempotent")
    f = A.one - e
    eaf = all((e * A.basis(i) * f).is_zero for i in range(A.dim))
    Le, Re = M.left_op(e.coords), M.right_op(e.coords)
    Lf, Rf = M.left_op(f.coords), M.right_op(f.coords)
    eye = F.eye(M.dim)
    cond1 = np.array_equal(F.matmul(Le, Rf), eye)
    cond2 = F.is_zero(Lf) and F.is_zero(Re)
    cond3 = np.array_equal(Le, eye) and np.array_equal(Rf, eye)
    cond4 = True
    for i in range(A.dim):
        a = A.basis(i)
        eae = (e * a * e).coords
        faf = (f * a * f).coords
        if not np.array_equal(M.left[i], F.matmul(M.left_op(eae), Le)):
            cond4 = False
            break
        if not np.array_equal(M.right[i], F.matmul(M.right_op(faf), Rf)):
            cond4 = False
            break
    return TypeStarReport(e, eaf, cond1, cond2, cond3, cond4)


def find_type_star_idempotent(ext: TrivialExtension, cap: int = DEFAULT_ENUM_CAP,
                              candidates=None) -> Element | None:
    """First nontrivial idempotent at which ``ext`` is of type (⋆), if any."""
    for e in enumerate_idempotents(ext.base, cap=cap, candidates=candidates):
        if not e.is_trivial and is_type_star(ext, e).holds:
            return e
    return None
