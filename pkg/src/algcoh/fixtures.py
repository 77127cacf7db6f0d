"""Named built-in extensions, generated per field.

Each fixture is a function of the field returning a TrivialExtension.
Registration builds every fixture over F2 and validates it, so a broken
builder fails at import time rather than in the middle of a report.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import (
    Algebra,
    AlgebraError,
    direct_product,
    dual_numbers,
    ground_field,
    matrix_algebra,
    triangular,
    truncated_polynomials,
    validate_algebra,
)
from .bimodule import (
    Bimodule,
    dual_bimodule,
    example_s_n,
    lift_to_trivext,
    product_bimodule,
    regular_bimodule,
    validate_bimodule,
    zero_bimodule,
)
from .field import Field
from .trivext import TrivialExtension, trivext

COMMUTATIVE = "commutative"
TRIANGULAR = "triangular"
TYPE_STAR = "type-star"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    families: tuple[str, ...]
    builder: Callable[[Field], TrivialExtension]

    def build(self, field: Field | int | str | None = 2) -> TrivialExtension:
        return self.builder(_as_field(field))


def _as_field(field) -> Field:
    if isinstance(field, Field):
        return field
    if field is None or (isinstance(field, str) and field.upper() == "Q"):
        return Field(None)
    return Field(int(field))


REGISTRY: dict[str, Fixture] = {}


def register(name: str, description: str, families=()):
    def deco(fn):
        fx = Fixture(name, description, tuple(families), fn)
        ext = fx.build(2)
        for report in (validate_algebra(ext.base), validate_bimodule(ext.module), validate_algebra(ext.total)):
            report.raise_if_failed()
        REGISTRY[name] = fx
        return fn

    return deco


def get(name: str) -> Fixture:
    try:
        return REGISTRY[name]
    except KeyError:
        known = ", ".join(sorted(REGISTRY))
        raise AlgebraError(f"unknown fixture {name!r} (known: {known})") from None


def build(name: str, field=2) -> TrivialExtension:
    return get(name).build(field)


def names(family: str | None = None) -> list[str]:
    return [n for n, fx in REGISTRY.items() if family is None or family in fx.families]


def tri_view(field: Field, module_dim: int = 1) -> TrivialExtension:
    """(F x F) ⋉ F^k with (a,b) m = a m and m (a,b) = m b, i.e. Tri(F;F^k;F)."""
    k = ground_field(field)
    eye = field.eye(module_dim)
    prod = direct_product(k, k, name=f"{field}×{field}")
    mod = product_bimodule(k, k, [eye], [eye], name=f"{field}^{module_dim}" if module_dim > 1 else str(field),
                           product=prod)
    return trivext(prod, mod)


def tri_fff_algebra(field: Field) -> Algebra:
    k = ground_field(field)
    mod = product_bimodule(k, k, [field.eye(1)], [field.eye(1)], name=str(field))
    return triangular(k, mod, k, name=f"Tri({field})")


@register("dual_numbers", "F ⋉ F, the dual numbers F[x]/(x^2)", [COMMUTATIVE])
def _dual_numbers(field: Field) -> TrivialExtension:
    k = ground_field(field)
    return trivext(k, regular_bimodule(k))


@register("dualnum_self", "F[x]/(x^2) ⋉ F[x]/(x^2) with the regular bimodule", [COMMUTATIVE])
def _dualnum_self(field: Field) -> TrivialExtension:
    a = dual_numbers(field, name="D")
    return trivext(a, regular_bimodule(a))


@register("prod_regular", "(F x F) ⋉ (F x F) with the regular bimodule", [COMMUTATIVE])
def _prod_regular(field: Field) -> TrivialExtension:
    k = ground_field(field)
    a = direct_product(k, k, name=f"{field}×{field}")
    return trivext(a, regular_bimodule(a))


@register("tri_fff", "(F x F) ⋉ F, the triangular algebra Tri(F;F;F) as an extension",
          [TRIANGULAR, TYPE_STAR])
def _tri_fff(field: Field) -> TrivialExtension:
    return tri_view(field, 1)


@register("tri_ff2f", "(F x F) ⋉ F^2, the triangular algebra Tri(F;F^2;F) as an extension",
          [TRIANGULAR, TYPE_STAR])
def _tri_ff2f(field: Field) -> TrivialExtension:
    return tri_view(field, 2)


@register("tri_self", "Tri(F;F;F) ⋉ Tri(F;F;F) with the regular bimodule", [TRIANGULAR])
def _tri_self(field: Field) -> TrivialExtension:
    a = tri_fff_algebra(field)
    return trivext(a, regular_bimodule(a))


@register("tri_zero", "Tri(F;F;F) ⋉ 0", [TRIANGULAR])
def _tri_zero(field: Field) -> TrivialExtension:
    a = tri_fff_algebra(field)
    return trivext(a, zero_bimodule(a))


@register("m2_self", "M2(F) ⋉ M2(F) with the regular bimodule", [])
def _m2_self(field: Field) -> TrivialExtension:
    a = matrix_algebra(field, 2, name=f"M2({field})")
    return trivext(a, regular_bimodule(a))


@register("example_SN", "S ⋉ N with S = Tri(F;F;F) and N = F, ((a,b),m) n = b n, n ((a,b),m) = n a",
          [TRIANGULAR, TYPE_STAR, COUNTEREXAMPLE])
def _example_sn(field: Field) -> TrivialExtension:
    s_alg, n_mod = example_s_n(field)
    return trivext(s_alg, n_mod)


@register("dual_bimodule_tri", "Tri(F;F;F) ⋉ D(Tri(F;F;F)) with the dual bimodule", [TRIANGULAR])
def _dual_bimodule_tri(field: Field) -> TrivialExtension:
    a = tri_fff_algebra(field)
    return trivext(a, dual_bimodule(a))


@register("trunc3_dual", "F[x]/(x^3) ⋉ D(F[x]/(x^3))", [COMMUTATIVE])
def _trunc3_dual(field: Field) -> TrivialExtension:
    a = truncated_polynomials(field, 3, name="P3")
    return trivext(a, dual_bimodule(a))


@register("iterated_SN", "(S ⋉ N) ⋉ N with N lifted along the projection S ⋉ N -> S",
          [COUNTEREXAMPLE])
def _iterated_sn(field: Field) -> TrivialExtension:
    inner = _example_sn(field)
    return trivext(inner.total, lift_to_trivext(inner.module, inner))


def builtin_algebras(field: Field | int | str = 2) -> dict[str, Algebra]:
    """Small unital algebras (dim 1 to 3) used for exhaustive comparisons."""
    F = _as_field(field)
    k = ground_field(F)
    d = dual_numbers(F, name="D")
    kk = direct_product(k, k, name="F×F")
    square_zero = trivext(k, Bimodule(k, F.eye(2)[None], F.eye(2)[None], "F^2")).total
    return {
        "field": k,
        "dual_numbers": d,
        "product_2": kk,
        "truncated_3": truncated_polynomials(F, 3, name="P3"),
        "product_3": direct_product(kk, k, name="F×F×F"),
        "field_x_dual": direct_product(k, d, name="F×D"),
        "triangular": tri_fff_algebra(F),
        "square_zero_3": square_zero,
    }


def small_candidates(alg: Algebra, entries=(0, 1, -1)):
    """Vectors with coordinates in ``entries``; used as idempotent candidates over Q."""
    F = alg.field
    for combo in itertools.product(entries, repeat=alg.dim):
        yield F.array(np.array(combo, dtype=object))
