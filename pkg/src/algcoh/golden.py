"""Golden assertions over the built-in fixtures, run by ``algcoh check-paper``.

Every check returns ``(passed, detail)``; the runner prints one line per
check in a fixed order so the output is byte-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import derivations as dv
from . import fixtures
from .algebra import dual_numbers
from .bimodule import regular_bimodule, symmetric_center_action
from .cohomology import (
    ExtensionSpaces,
    all_inner_report,
    exact_sequence_check,
    find_triangularizing_c,
    full_report,
)
from .field import Field
from .linalg import Subspace
from .trivext import center_trivext, find_triangular_representation, is_type_star, trivext


@dataclass(frozen=True)
class GoldenCheck:
    name: str
    run: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class GoldenResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _eq(label: str, got, want) -> tuple[bool, str]:
    return got == want, f"{label} = {got}" + ("" if got == want else f", expected {want}")


def sn_derivation(field: Field) -> np.ndarray:
    """``D(x, n) = ([E11, x], [E22, n])`` on S⋉N in the basis (E11, E12, E22, n)."""
    D = field.zeros((4, 4))
    D[1, 1] = field.scalar(1)
    D[3, 3] = field.scalar(1)
    return D


def sn_derivation_no_s(field: Field) -> np.ndarray:
    """``D(x, n) = ([E11, x], 0)``: not inner in any characteristic."""
    D = field.zeros((4, 4))
    D[1, 1] = field.scalar(1)
    return D


def m2_t_derivation(field: Field) -> np.ndarray:
    """``D(a, b) = (b, 0)`` on M2(F)⋉M2(F)."""
    D = field.zeros((8, 8))
    D[:4, 4:] = field.eye(4)
    return D


def _tri_h1(p: int):
    def run():
        alg = fixtures.build("tri_zero", p).base
        h, _ = dv.h1_dim(alg)
        return _eq(f"dim H¹(Tri(F{p}))", h, 0)
    return run


def _dual_der(p: int, want: int):
    def run():
        alg = dual_numbers(Field(p))
        return _eq(f"dim Der(F{p}[x]/(x^2))", dv.derivation_space(alg).dim, want)
    return run


def _tri_der_innder():
    alg = fixtures.build("tri_zero", 2).base
    got = (dv.derivation_space(alg).dim, dv.inner_derivation_space(alg).dim)
    return _eq("(dim Der, dim Innder) of Tri(F2)", got, (2, 2))


def _sn_checks(p: int) -> list[GoldenCheck]:
    cache: dict = {}

    def setup():
        if "r" not in cache:
            ext = fixtures.build("example_SN", p)
            sp = ExtensionSpaces(ext)
            cache.update(ext=ext, sp=sp, r=full_report(ext, sp))
        return cache["ext"], cache["sp"], cache["r"]

    def dim_check(key, label, want):
        def run():
            return _eq(label, setup()[2].dims[key], want)
        return run

    def h1_positive():
        h = setup()[2].dims["h¹"]
        return h >= 1, f"h¹(S⋉N) = {h}"

    def d_is_derivation():
        ext = setup()[0]
        bad = dv.leibniz_violation(ext.total, sn_derivation(ext.field))
        return bad is None, "" if bad is None else f"Leibniz fails on basis pair {bad}"

    def d_innerness():
        # [E11, n] = -n, so the map equals [(E11, 0), -] exactly when 2 = 0
        ext = setup()[0]
        w = dv.inner_witness(ext.total, None, sn_derivation(ext.field))
        if p == 2:
            return w is not None, f"witness {None if w is None else [int(x) for x in w]}"
        return w is None, "" if w is None else f"unexpected witness {w}"

    def d_no_s_not_inner():
        ext = setup()[0]
        D = sn_derivation_no_s(ext.field)
        bad = dv.leibniz_violation(ext.total, D)
        w = dv.inner_witness(ext.total, None, D)
        return bad is None and w is None, f"derivation {bad is None}, witness {w}"

    def annihilator():
        ext, sp, _ = setup()
        F = ext.field
        want = Subspace(F, 3, F.array(np.array([[0, 1, 0]], dtype=object)))
        return sp.annihilator_meet == want, f"l.Ann∩r.Ann basis {sp.annihilator_meet.basis.tolist()}"

    def innbi_strict():
        _, sp, _ = setup()
        ok = sp.innbi_big.space == sp.end.space and sp.innbi.dim < sp.innbi_big.dim
        return ok, f"Innbi {sp.innbi.dim}, InnBi {sp.innbi_big.dim}, End {sp.end.dim}"

    def gder_are_endomorphisms():
        _, sp, _ = setup()
        s_part = sp.der.s_projection()
        return s_part <= sp.end.space, f"S-components span {s_part.dim}, End {sp.end.dim}"

    def no_triangular():
        res = find_triangular_representation(setup()[0])
        return res.status == "none", f"triangular representation: {res.status}"

    def type_star():
        ext = setup()[0]
        rep = is_type_star(ext, ext.base.basis(2))
        return rep.holds and rep.equivalences_agree, f"type (⋆) at E22: {rep.holds}"

    tag = f"example_SN[F{p}]"
    return [
        GoldenCheck(f"{tag}: H¹(S) = 0", dim_check("H¹(A)", "H¹(S)", 0)),
        GoldenCheck(f"{tag}: E(N) = 0", dim_check("E(M)", "E(N)", 0)),
        GoldenCheck(f"{tag}: H¹(S,N) = 0", dim_check("H¹(A,M)", "H¹(S,N)", 0)),
        GoldenCheck(f"{tag}: h¹_S(N) = 0", dim_check("h¹_A(M)", "h¹_S(N)", 0)),
        GoldenCheck(f"{tag}: h¹(S⋉N) ≥ 1", h1_positive),
        GoldenCheck(f"{tag}: h¹(S⋉N) = 1", dim_check("h¹", "h¹(S⋉N)", 1)),
        GoldenCheck(f"{tag}: ([E11,-],[E22,-]) is a derivation", d_is_derivation),
        GoldenCheck(
            f"{tag}: ([E11,-],[E22,-]) " + ("= [(E11,0),-] in characteristic 2" if p == 2 else "is not inner"),
            d_innerness,
        ),
        GoldenCheck(f"{tag}: ([E11,-],0) is a non-inner derivation", d_no_s_not_inner),
        GoldenCheck(f"{tag}: l.Ann(N)∩r.Ann(N) = span(E12)", annihilator),
        GoldenCheck(f"{tag}: Innbi(N) ⊊ InnBi(N) = End(N)", innbi_strict),
        GoldenCheck(f"{tag}: generalized derivations of N are bimodule maps", gder_are_endomorphisms),
        GoldenCheck(f"{tag}: no triangular representation", no_triangular),
        GoldenCheck(f"{tag}: type (⋆) at E22", type_star),
    ]


def _m2_t_f2():
    F = Field(2)
    ext = fixtures.build("m2_self", F)
    D = m2_t_derivation(F)
    dec = dv.decompose_derivation(ext, D)
    ok = np.array_equal(dec.T, F.eye(4))
    return ok, "T = identity" if ok else "T differs from identity"


def _m2_t_f3():
    F = Field(3)
    ext = fixtures.build("m2_self", F)
    inside = F.eye(4) in dv.e_space(ext.base, ext.module)
    return not inside, f"identity in E(M2(F3)): {inside}"


def _dual_decomposition():
    r = full_report(fixtures.build("dual_numbers", 2))
    got = (r.dims["Der(A,M)"], r.dims["der"], r.dims["E(M)"], r.dims["H¹(A⋉M)"])
    return _eq("(Der(F,F), der, E, H¹) for F2⋉F2", got, (0, 1, 1, 2))


def _dual_sequence_iso():
    ext = fixtures.build("dual_numbers", 2)
    sp = ExtensionSpaces(ext)
    seq = exact_sequence_check(ext, sp)
    r = full_report(ext, sp)
    ok = seq.ok and r.dims["H¹(A)"] == 0 and seq.dim_image_phi == seq.dim_h1 == r.dims["H¹_A(M)"] == 1
    return ok, f"H¹_A(M) {r.dims['H¹_A(M)']}, h¹ {seq.dim_h1}"


def _tri_c():
    ext = fixtures.build("tri_fff", 2)
    res = find_triangularizing_c(ext)
    ok = res.found and res.hypothesis_met and res.idempotent_ok and res.representation_ok
    c = None if res.c is None else [int(x) for x in res.c]
    return ok and c == [1, 0], f"c = {c} ({res.side})"


def _tri_all_inner():
    rep = all_inner_report(fixtures.build("tri_fff", 2))
    return rep.conjunction and rep.h1_total_zero, f"conjunction {rep.conjunction}, H¹ = 0: {rep.h1_total_zero}"


def _dual_module():
    ext = fixtures.build("dual_bimodule_tri", 2)
    sp = ExtensionSpaces(ext)
    sym = symmetric_center_action(ext.module)
    ok = sym and sp.innbi.dim == 0
    return ok, f"symmetric center action {sym}, Innbi {sp.innbi.dim}"


def _end_regular_tri():
    alg = fixtures.build("tri_zero", 2).base
    return _eq("dim End(Tri(F2))", dv.bimodule_end_space(alg, regular_bimodule(alg)).dim, 1)


def _over_registry(label: str, test: Callable, family: str | None = None, fields=(2, 3)):
    def run():
        bad = []
        for p in fields:
            for name in fixtures.names(family):
                ext = fixtures.build(name, p)
                if not test(ext):
                    bad.append(f"{name}[F{p}]")
        return not bad, ("failing: " + ", ".join(bad)) if bad else f"{label} on all fixtures"
    return run


def _decomp(ext):
    v = full_report(ext).verdicts
    return v["decomposition_Der"] and v["decomposition_Innder"] and v["decomposition_H1"]


def _innbi_iff_symmetric(ext):
    return (dv.innbi_central(ext.base, ext.module).dim == 0) == symmetric_center_action(ext.module)


def _type_star_e_zero(ext):
    return dv.e_space(ext.base, ext.module).dim == 0


def golden_checks() -> list[GoldenCheck]:
    checks = [GoldenCheck(f"H¹(Tri(F{p})) = 0", _tri_h1(p)) for p in (2, 3, 5)]
    checks += [
        GoldenCheck("dim Der(F2[x]/(x^2)) = 2", _dual_der(2, 2)),
        GoldenCheck("dim Der(F3[x]/(x^2)) = 1", _dual_der(3, 1)),
        GoldenCheck("Der(Tri(F2)) = Innder(Tri(F2)), dim 2", _tri_der_innder),
        GoldenCheck("dim End(Tri(F2)) = 1", _end_regular_tri),
    ]
    for p in (2, 3):
        checks += _sn_checks(p)
    checks += [
        GoldenCheck("M2(F2)⋉M2(F2): (b ↦ b) block gives a derivation with T = identity", _m2_t_f2),
        GoldenCheck("M2(F3)⋉M2(F3): identity is not in E(M)", _m2_t_f3),
        GoldenCheck("F2⋉F2: Der = 0 + 1 + 1, H¹ = 2", _dual_decomposition),
        GoldenCheck("F2⋉F2: H¹(A) = 0 so H¹_A(M) ≅ h¹", _dual_sequence_iso),
        GoldenCheck("(F2×F2)⋉F2: triangularizing c = (1,0)", _tri_c),
        GoldenCheck("(F2×F2)⋉F2: all derivations inner", _tri_all_inner),
        GoldenCheck("Tri(F2)⋉DTri(F2): symmetric center action and Innbi = 0", _dual_module),
        GoldenCheck("decomposition identities", _over_registry("hold", _decomp)),
        GoldenCheck("exact sequence", _over_registry("exact", lambda e: exact_sequence_check(e).ok)),
        GoldenCheck("all-inner criterion", _over_registry("consistent", lambda e: all_inner_report(e).consistent)),
        GoldenCheck("center of trivial extension", _over_registry(
            "agrees", lambda e: center_trivext(e).agree and center_trivext(e).product_decomposition)),
        GoldenCheck("Innbi = 0 iff symmetric center action", _over_registry("agrees", _innbi_iff_symmetric)),
        GoldenCheck("type (⋆) implies E(M) = 0",
                    _over_registry("holds", _type_star_e_zero, family=fixtures.TYPE_STAR)),
    ]
    return checks


def run_golden(checks: list[GoldenCheck] | None = None) -> list[GoldenResult]:
    out = []
    for check in checks if checks is not None else golden_checks():
        try:
            passed, detail = check.run()
        except Exception as exc:  # a crash is a failed assertion, reported by name
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(GoldenResult(check.name, bool(passed), detail))
    return out
