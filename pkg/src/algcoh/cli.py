"""``algcoh`` command-line interface.

Exit status: 0 when every check passes, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures
from .algebra import DEFAULT_ENUM_CAP, AlgebraError, Algebra, validate_algebra
from .bimodule import Bimodule, regular_bimodule, validate_bimodule
from .field import Field, FieldError
from .golden import run_golden
from .io import ParseError, detect_kind, format_extension, parse_algebra, parse_bimodule
from .report import center_report, derivations_report, extension_report
from .trivext import trivext

SUBCOMMANDS = (
    "validate",
    "center",
    "derivations",
    "cohomology",
    "triangular",
    "fixture",
    "check-paper",
    "list-fixtures",
    "export",
)


class InputError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="algcoh", description=__doc__.splitlines()[0])
    p.add_argument("subcommand", choices=SUBCOMMANDS)
    p.add_argument("paths", nargs="*", help="presentation files, or a fixture name")
    p.add_argument("--field", help="p (a prime) or Q; overrides the field of the inputs")
    p.add_argument("--max-enum", type=int, default=DEFAULT_ENUM_CAP,
                   help="cap on enumerated idempotents (default %(default)s)")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--out", help="write output to this path instead of stdout")
    return p


def _field(token: str | None) -> Field | None:
    if token is None:
        return None
    try:
        return Field.parse(token)
    except FieldError as exc:
        raise InputError(f"--field: {exc}") from None


def load_inputs(paths: list[str], field: Field | None) -> tuple[list[Algebra], list[Bimodule]]:
    """Parse algebra files first, then bimodule files referring to them by name."""
    texts = []
    for raw in paths:
        path = Path(raw)
        if not path.is_file():
            raise InputError(f"{raw}: no such file")
        text = path.read_text(encoding="utf-8")
        texts.append((str(path), text, detect_kind(text)))
    algebras: dict[str, Algebra] = {}
    alg_list, mod_list = [], []
    for src, text, kind in texts:
        if kind == "algebra":
            alg = parse_algebra(text, src, field)
            algebras[alg.name] = alg
            alg_list.append(alg)
    for src, text, kind in texts:
        if kind == "bimodule":
            mod_list.append(parse_bimodule(text, algebras, src, field))
    return alg_list, mod_list


def _require_valid(algs, mods) -> None:
    for alg in algs:
        rep = validate_algebra(alg)
        if not rep.ok:
            raise InputError(f"algebra {alg.name}: {rep.message}")
    for mod in mods:
        rep = validate_bimodule(mod)
        if not rep.ok:
            raise InputError(f"bimodule {mod.name}: {rep.message}")


def _extension_inputs(args, field):
    algs, mods = load_inputs(args.paths, field)
    if not algs:
        raise InputError("an algebra presentation is required")
    _require_valid(algs, mods)
    alg = algs[0]
    mod = mods[0] if mods else regular_bimodule(alg)
    if mod.algebra is not alg and mod.algebra.name != alg.name:
        raise InputError(f"bimodule {mod.name} is over {mod.algebra.name}, not {alg.name}")
    return alg, mod, trivext(alg, mod)


def _fixture(args, field):
    if len(args.paths) != 1:
        raise InputError("fixture needs exactly one fixture name")
    try:
        return fixtures.build(args.paths[0], field if field is not None else Field(2))
    except AlgebraError as exc:
        raise InputError(str(exc)) from None


def run(args) -> tuple[str, int]:
    field = _field(args.field)
    cmd = args.subcommand
    if cmd == "check-paper":
        results = run_golden()
        lines = [r.line() for r in results]
        failed = sum(not r.passed for r in results)
        lines.append(f"{len(results) - failed}/{len(results)} golden assertions passed")
        return "\n".join(lines) + "\n", 1 if failed else 0
    if cmd == "list-fixtures":
        lines = [f"{name}: {fx.description}" + (f" [{', '.join(fx.families)}]" if fx.families else "")
                 for name, fx in fixtures.REGISTRY.items()]
        return "\n".join(lines) + "\n", 0
    if cmd == "validate":
        if not args.paths:
            raise InputError("validate needs at least one file")
        algs, mods = load_inputs(args.paths, field)
        lines, status = [], 0
        for obj, rep in [(a, validate_algebra(a)) for a in algs] + [(m, validate_bimodule(m)) for m in mods]:
            kind = "algebra" if isinstance(obj, Algebra) else "bimodule"
            if rep.ok:
                lines.append(f"valid {kind} {obj.name} (dim {obj.dim}) over {obj.field}")
            else:
                lines.append(f"invalid {kind} {obj.name}: {rep.message}")
                status = 1
        return "\n".join(lines) + "\n", status
    if cmd == "fixture":
        ext = _fixture(args, field)
        rep = extension_report(ext, args.max_enum, title=f"fixture {args.paths[0]}: {ext.name} over {ext.field}")
        return rep.render(args.format), 0 if rep.ok else 1
    if cmd == "export":
        if len(args.paths) == 1 and args.paths[0] in fixtures.REGISTRY:
            ext = _fixture(args, field)
        else:
            ext = _extension_inputs(args, field)[2]
        return format_extension(ext), 0
    if cmd == "center":
        algs, mods = load_inputs(args.paths, field)
        if not algs:
            raise InputError("an algebra presentation is required")
        _require_valid(algs, mods)
        alg = algs[0]
        mod = mods[0] if mods else None
        rep = center_report(alg, mod, trivext(alg, mod) if mod is not None else None)
        return rep.render(args.format), 0 if rep.ok else 1
    alg, mod, ext = _extension_inputs(args, field)
    if cmd == "derivations":
        rep = derivations_report(alg, mod)
    elif cmd == "cohomology":
        rep = extension_report(ext, args.max_enum, triangular=False, center=False)
    else:  # triangular
        rep = extension_report(ext, args.max_enum, cohomology=False, center=False)
    return rep.render(args.format), 0 if rep.ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.max_enum < 1:
        print("algcoh: error: --max-enum must be positive", file=sys.stderr)
        return 2
    try:
        text, status = run(args)
    except (InputError, ParseError, FieldError, AlgebraError) as exc:
        print(f"algcoh: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
