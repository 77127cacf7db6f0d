"""First cohomology of trivial extensions: decompositions, the exact sequence
``0 -> H¹_A(M) -> h¹(A⋉M) -> H¹(A)``, innerness criteria and triangularization.

Quotients are represented by (space, subspace) pairs; maps between quotients
act on representatives and well-definedness is checked explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .field import Field
from .linalg import Subspace, preimage, solve
from .trivext import TrivialExtension, _corner_conditions, find_triangular_representation
from . import derivations as dv

DIM_KEYS = (
    "Der(A⋉M)",
    "Innder(A⋉M)",
    "H¹(A⋉M)",
    "Der(A,M)",
    "Innder(A,M)",
    "H¹(A,M)",
    "der",
    "innder",
    "h¹",
    "E(M)",
    "End",
    "InnGd",
    "InnBi",
    "Innbi",
    "H¹_A(M)",
    "h¹_A(M)",
    "Der(A)",
    "Innder(A)",
    "H¹(A)",
    "Γ̄",
    "l.Ann∩r.Ann",
)


def _block_embedding(F: Field, N: int, row_off: int, col_off: int, space: dv.LinearMapSpace) -> Subspace:
    gens = []
    for X in space.maps():
        Y = F.zeros((N, N))
        Y[row_off : row_off + X.shape[0], col_off : col_off + X.shape[1]] = X
        gens.append(dv.flatten(Y))
    return Subspace(F, N * N, np.vstack(gens) if gens else None)


def _pair_embedding(F: Field, N: int, sp: dv.GDerSpace) -> Subspace:
    gens = [dv.flatten(sp.embed(v)) for v in sp.space.basis]
    return Subspace(F, N * N, np.vstack(gens) if gens else None)


class ExtensionSpaces:
    """Every space attached to A⋉M, computed on first use."""

    def __init__(self, ext: TrivialExtension):
        self.ext = ext
        self.A = ext.base
        self.M = ext.module
        self.F = ext.field
        self.N = ext.total.dim

    @cached_property
    def der_total(self):
        return dv.derivation_space(self.ext.total)

    @cached_property
    def innder_total(self):
        return dv.inner_derivation_space(self.ext.total)

    @cached_property
    def der_am(self):
        return dv.derivation_space(self.A, self.M)

    @cached_property
    def innder_am(self):
        return dv.inner_derivation_space(self.A, self.M)

    @cached_property
    def der_a(self):
        return dv.derivation_space(self.A)

    @cached_property
    def innder_a(self):
        return dv.inner_derivation_space(self.A)

    @cached_property
    def der(self):
        return dv.restricted_der(self.ext)

    @cached_property
    def innder(self):
        return dv.restricted_innder(self.ext)

    @cached_property
    def e(self):
        return dv.e_space(self.A, self.M)

    @cached_property
    def end(self):
        return dv.bimodule_end_space(self.A, self.M)

    @cached_property
    def inngd(self):
        return dv.inn_gd(self.A, self.M)

    @cached_property
    def innbi_big(self):
        return dv.inn_bi(self.A, self.M)

    @cached_property
    def innbi(self):
        return dv.innbi_central(self.A, self.M)

    @cached_property
    def gamma_bar(self) -> Subspace:
        return self.der.d_projection()

    @cached_property
    def annihilator_meet(self) -> Subspace:
        return self.M.annihilators.both

    def phi_of(self, s_space: Subspace) -> Subspace:
        """``S -> (0, S)`` applied to a subspace of vec(End)."""
        F = self.F
        n2 = self.A.dim ** 2
        total = n2 + self.M.dim ** 2
        if s_space.dim == 0:
            return Subspace.zero(F, total)
        gens = F.zeros((s_space.dim, total))
        gens[:, n2:] = s_space.basis
        return Subspace(F, total, gens)

    def embedded_blocks(self) -> dict[str, Subspace]:
        """Der(A,M), der and E(M) placed inside maps on A⋉M."""
        F, N, n = self.F, self.N, self.A.dim
        return {
            "Der(A,M)": _block_embedding(F, N, n, 0, self.der_am),
            "der": _pair_embedding(F, N, self.der),
            "E(M)": _block_embedding(F, N, 0, n, self.e),
            "Innder(A,M)": _block_embedding(F, N, n, 0, self.innder_am),
            "innder": _pair_embedding(F, N, self.innder),
        }


@dataclass
class CohomologyReport:
    name: str
    field: str
    dims: dict = dc_field(default_factory=dict)
    verdicts: dict = dc_field(default_factory=dict)
    witnesses: dict = dc_field(default_factory=dict)
    notes: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.verdicts.values())

    def merge(self, other: "CohomologyReport") -> "CohomologyReport":
        self.dims.update(other.dims)
        self.verdicts.update(other.verdicts)
        self.witnesses.update(other.witnesses)
        self.notes.extend(other.notes)
        return self


def _spaces(ext: TrivialExtension, spaces: ExtensionSpaces | None) -> ExtensionSpaces:
    return spaces if spaces is not None else ExtensionSpaces(ext)


def full_report(ext: TrivialExtension, spaces: ExtensionSpaces | None = None) -> CohomologyReport:
    """All dimensions plus the three decomposition identities."""
    sp = _spaces(ext, spaces)
    d = {
        "Der(A⋉M)": sp.der_total.dim,
        "Innder(A⋉M)": sp.innder_total.dim,
        "Der(A,M)": sp.der_am.dim,
        "Innder(A,M)": sp.innder_am.dim,
        "der": sp.der.dim,
        "innder": sp.innder.dim,
        "E(M)": sp.e.dim,
        "End": sp.end.dim,
        "InnGd": sp.inngd.dim,
        "InnBi": sp.innbi_big.dim,
        "Innbi": sp.innbi.dim,
        "Der(A)": sp.der_a.dim,
        "Innder(A)": sp.innder_a.dim,
        "Γ̄": sp.gamma_bar.dim,
        "l.Ann∩r.Ann": sp.annihilator_meet.dim,
    }
    d["H¹(A⋉M)"] = d["Der(A⋉M)"] - d["Innder(A⋉M)"]
    d["H¹(A,M)"] = d["Der(A,M)"] - d["Innder(A,M)"]
    d["h¹"] = d["der"] - d["innder"]
    d["H¹_A(M)"] = d["End"] - d["Innbi"]
    d["h¹_A(M)"] = d["End"] - d["InnBi"]
    d["H¹(A)"] = d["Der(A)"] - d["Innder(A)"]
    report = CohomologyReport(ext.name, str(ext.field), {k: d[k] for k in DIM_KEYS})

    v = report.verdicts
    v["inclusions"] = (
        sp.innder_total.space <= sp.der_total.space
        and sp.innder_am.space <= sp.der_am.space
        and sp.innder.space <= sp.der.space
        and sp.innbi.space <= sp.innbi_big.space
        and sp.innbi_big.space <= sp.inngd.space
        and sp.innbi_big.space <= sp.end.space
    )
    v["decomposition_Der"] = d["Der(A⋉M)"] == d["Der(A,M)"] + d["der"] + d["E(M)"]
    v["decomposition_Innder"] = d["Innder(A⋉M)"] == d["Innder(A,M)"] + d["innder"]
    v["decomposition_H1"] = d["H¹(A⋉M)"] == d["H¹(A,M)"] + d["h¹"] + d["E(M)"]
    blocks = sp.embedded_blocks()
    v["decomposition_Der_subspaces"] = (
        blocks["Der(A,M)"] + blocks["der"] + blocks["E(M)"] == sp.der_total.space
    )
    v["decomposition_Innder_subspaces"] = (
        blocks["Innder(A,M)"] + blocks["innder"] == sp.innder_total.space
    )
    return report


@dataclass
class ExactSequenceReport:
    well_defined_phi: bool
    well_defined_pi: bool
    phi_lands_in_der: bool
    phi_injective: bool
    exact_at_h1: bool
    rank_nullity: bool
    dim_image_phi: int
    dim_image_pi: int
    dim_h1: int

    @property
    def ok(self) -> bool:
        return all(
            (self.well_defined_phi, self.well_defined_pi, self.phi_lands_in_der,
             self.phi_injective, self.exact_at_h1, self.rank_nullity)
        )


def _pi_kernel(sp: ExtensionSpaces) -> Subspace:
    """Elements of der whose d-part is an inner derivation of A."""
    F = sp.F
    total = sp.der.space.ambient_dim
    if sp.der.dim == 0:
        return Subspace.zero(F, total)
    B = sp.der.space.basis
    n2 = sp.A.dim ** 2
    coeffs = preimage(F, B[:, :n2].T, sp.innder_a.space)
    if coeffs.dim == 0:
        return Subspace.zero(F, total)
    return Subspace(F, total, F.matmul(coeffs.basis, B))


def exact_sequence_check(ext: TrivialExtension, spaces: ExtensionSpaces | None = None,
                         inner_bimodule: Subspace | None = None) -> ExactSequenceReport:
    """Check ``0 -> End/Innbi -> der/innder -> Der(A)/Innder(A)`` is exact.

    ``inner_bimodule`` replaces Innbi (used for the InnBi variant).
    """
    sp = _spaces(ext, spaces)
    sub = inner_bimodule if inner_bimodule is not None else sp.innbi.space
    phi_end = sp.phi_of(sp.end.space)
    phi_sub = sp.phi_of(sub)
    innder = sp.innder.space
    well_phi = phi_sub <= innder
    pi_innder = sp.innder.d_projection()
    well_pi = pi_innder <= sp.innder_a.space
    lands = phi_end <= sp.der.space
    im_phi = phi_end + innder
    dim_im_phi = im_phi.dim - innder.dim
    injective = dim_im_phi == sp.end.dim - sub.dim and (phi_end & innder) == phi_sub
    exact = _pi_kernel(sp) == im_phi
    dim_im_pi = (sp.gamma_bar + sp.innder_a.space).dim - sp.innder_a.dim
    dim_h1 = sp.der.dim - innder.dim
    return ExactSequenceReport(
        well_defined_phi=well_phi,
        well_defined_pi=well_pi,
        phi_lands_in_der=lands,
        phi_injective=injective,
        exact_at_h1=exact,
        rank_nullity=dim_im_phi + dim_im_pi == dim_h1,
        dim_image_phi=dim_im_phi,
        dim_image_pi=dim_im_pi,
        dim_h1=dim_h1,
    )


@dataclass
class VariantReport:
    hypothesis_met: bool
    innbi_equals_innbi_big: bool | None
    sequence: ExactSequenceReport | None
    h1_a_small: int
    h1_restricted: int

    @property
    def ok(self) -> bool:
        if not self.hypothesis_met:
            return True
        return bool(self.innbi_equals_innbi_big) and self.sequence.ok


def h1_restricted_variant_check(ext: TrivialExtension, spaces: ExtensionSpaces | None = None) -> VariantReport:
    """The exact sequence with End/InnBi in place of End/Innbi."""
    sp = _spaces(ext, spaces)
    small = sp.end.dim - sp.innbi_big.dim
    h1r = sp.der.dim - sp.innder.dim
    if sp.annihilator_meet.dim != 0:
        return VariantReport(False, None, None, small, h1r)
    equal = sp.innbi.space == sp.innbi_big.space
    seq = exact_sequence_check(ext, sp, inner_bimodule=sp.innbi_big.space)
    return VariantReport(True, equal, seq, small, h1r)


@dataclass
class AllInnerReport:
    gamma_inner: bool
    h1_am_zero: bool
    end_central_inner: bool
    e_zero: bool
    h1_total_zero: bool

    @property
    def conjunction(self) -> bool:
        return self.gamma_inner and self.h1_am_zero and self.end_central_inner and self.e_zero

    @property
    def consistent(self) -> bool:
        return self.conjunction == self.h1_total_zero


def all_inner_report(ext: TrivialExtension, spaces: ExtensionSpaces | None = None) -> AllInnerReport:
    sp = _spaces(ext, spaces)
    return AllInnerReport(
        gamma_inner=sp.gamma_bar <= sp.innder_a.space,
        h1_am_zero=sp.der_am.dim == sp.innder_am.dim,
        end_central_inner=sp.end.space == sp.innbi.space,
        e_zero=sp.e.dim == 0,
        h1_total_zero=sp.der_total.dim == sp.innder_total.dim,
    )


@dataclass
class TriangularizingResult:
    hypothesis_met: bool
    side: str | None  # "right" (c in r.Ann) or "left" (c in l.Ann)
    c: np.ndarray | None
    idempotent: np.ndarray | None
    idempotent_ok: bool
    representation_ok: bool
    message: str = ""

    @property
    def found(self) -> bool:
        return self.c is not None


def _solve_c(sp: ExtensionSpaces, side: str):
    F, A, M = sp.F, sp.A, sp.M
    m2 = M.dim ** 2
    if A.dim == 0 or m2 == 0:
        return None
    ann_ops = M.right if side == "right" else M.left
    cols = []
    for i in range(A.dim):
        cols.append(np.concatenate([dv.flatten(ann_ops[i]), dv.flatten(M.ad_ops[i])]))
    mat = F.reduce(np.stack(cols, axis=1))
    rhs = np.concatenate([F.zeros(m2), dv.flatten(F.eye(M.dim))])
    return solve(F, mat, rhs)


def find_triangularizing_c(ext: TrivialExtension, spaces: ExtensionSpaces | None = None) -> TriangularizingResult:
    """Solve ``c y - y c = y`` for all ``y`` with ``c`` in r.Ann(M) (then l.Ann(M)).

    For the right-annihilator solution ``e = c``; for the left one ``e = 1 + c``.
    """
    sp = _spaces(ext, spaces)
    A = sp.A
    hyp = sp.annihilator_meet.dim == 0
    for side in ("right", "left"):
        c = _solve_c(sp, side)
        if c is None:
            continue
        c_el = A.element(c)
        e = c_el if side == "right" else A.one + c_el
        idem_ok = (c_el * c_el == c_el) if side == "right" else e.is_idempotent()
        rep_ok = False
        if idem_ok and not e.is_trivial:
            rep_ok = all(_corner_conditions(ext, e))
        return TriangularizingResult(hyp, side, c, e.coords, idem_ok, rep_ok)
    msg = "system c y - y c = y with c in an annihilator is inconsistent"
    return TriangularizingResult(hyp, None, None, None, False, False, msg)


@dataclass
class CentralMultiplierReport:
    applicable: bool
    left_solvable: tuple = ()
    right_solvable: tuple = ()
    c_solvable: bool | None = None
    c: np.ndarray | None = None
    message: str = ""

    @property
    def ok(self) -> bool:
        if not self.applicable:
            return True
        return all(self.left_solvable) and all(self.right_solvable) and bool(self.c_solvable)


def lemma_central_multiplier_check(ext: TrivialExtension, spaces: ExtensionSpaces | None = None) -> CentralMultiplierReport:
    """For central ``a`` find central ``l``, ``r`` with ``a y = [l, y]`` and ``y a = [r, y]``."""
    sp = _spaces(ext, spaces)
    if sp.end.space != sp.innbi.space:
        return CentralMultiplierReport(False, message="skipped: some bimodule endomorphism is not central inner")
    F, A, M = sp.F, sp.A, sp.M
    Z = A.center
    if Z.dim == 0 or M.dim == 0:
        return CentralMultiplierReport(True, (), (), M.dim == 0, None, "trivial case")
    ad = [dv.module_commutator(M, z) for z in Z.basis]
    mat = F.reduce(np.stack([dv.flatten(x) for x in ad], axis=1))

    def central(target) -> np.ndarray | None:
        t = solve(F, mat, dv.flatten(target))
        return None if t is None else F.matmul(t.reshape(1, -1), Z.basis).reshape(-1)

    left = tuple(central(M.left_op(z)) is not None for z in Z.basis)
    right = tuple(central(M.right_op(z)) is not None for z in Z.basis)
    c = central(F.eye(M.dim))
    return CentralMultiplierReport(True, left, right, c is not None, c)


def inner_converse_scan(ext: TrivialExtension, spaces: ExtensionSpaces | None = None) -> dict:
    """Derivations with T = 0, S inner and D_M inner that are not inner.

    Returns the dimension of such derivations modulo Innder(A⋉M); a nonzero
    value with trivial annihilator intersection would contradict the
    characterization of inner derivations and is reported as such.
    """
    sp = _spaces(ext, spaces)
    F, N, n = sp.F, sp.N, sp.A.dim
    m = sp.M.dim
    full_a = dv.LinearMapSpace(n, n, Subspace.full(F, n * n), "all")
    allowed = (
        _block_embedding(F, N, 0, 0, full_a)
        + _block_embedding(F, N, n, 0, sp.innder_am)
        + _block_embedding(F, N, n, n, sp.inngd)
    )
    candidates = sp.der_total.space & allowed
    excess = candidates.dim - sp.innder_total.dim
    return {
        "excess": excess,
        "annihilators_trivial": sp.annihilator_meet.dim == 0,
        "contradiction": excess > 0 and sp.annihilator_meet.dim == 0,
        "example": (
            dv.unflatten(candidates.complement_representatives(sp.innder_total.space)[0], N, N)
            if excess > 0 else None
        ),
        "module_dim": m,
    }


def triangularization_question_scan(ext: TrivialExtension, spaces: ExtensionSpaces | None = None,
                                    cap: int = 4096) -> dict:
    """Diagnostic: an extension with H¹ = 0 but no triangular representation."""
    sp = _spaces(ext, spaces)
    h1_zero = sp.der_total.dim == sp.innder_total.dim
    search = find_triangular_representation(ext, cap=cap)
    return {
        "h1_zero": h1_zero,
        "triangular": search.status,
        "finding": h1_zero and search.status == "none",
    }
