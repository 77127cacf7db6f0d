"""Plain-text presentation files for algebras, bimodules and map spaces."""

from __future__ import annotations

from pathlib import Path

from .algebra import Algebra
from .bimodule import Bimodule
from .field import Field, FieldError


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<text>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _scalars(field: Field, tokens: list[str], no: int, source: str):
    try:
        return [field.parse_scalar(t) for t in tokens]
    except FieldError as exc:
        raise ParseError(str(exc), no, source) from None


def _header(lines, keys, source):
    values = {}
    for key in keys:
        try:
            no, line = next(lines)
        except StopIteration:
            raise ParseError(f"missing `{key}:` line", None, source) from None
        k, sep, v = line.partition(":")
        k = k.strip()
        if not sep:
            raise ParseError(f"expected `{key}: ...`, got {line!r}", no, source)
        if k != key:
            if k in keys:
                raise ParseError(f"expected `{key}:` before `{k}:`", no, source)
            raise ParseError(f"unknown key {k!r}", no, source)
        values[key] = (no, v.strip())
    return values


def _parse_field(no_val, source, override: Field | None):
    no, val = no_val
    try:
        field = Field.parse(val)
    except FieldError as exc:
        raise ParseError(str(exc), no, source) from None
    return override if override is not None else field


def _parse_dim(no_val, source) -> int:
    no, val = no_val
    try:
        d = int(val)
    except ValueError:
        raise ParseError(f"dim must be a non-negative integer, got {val!r}", no, source) from None
    if d < 0:
        raise ParseError(f"dim must be non-negative, got {d}", no, source)
    return d


def detect_kind(text: str) -> str:
    for _, line in _lines(text):
        key = line.partition(":")[0].strip()
        if key == "algebra":
            return "bimodule"
        if key == "unit" or key.startswith("mul"):
            return "algebra"
    return "algebra"


def parse_algebra(text: str, source: str = "<text>", field: Field | None = None) -> Algebra:
    lines = _lines(text)
    head = _header(lines, ("field", "name", "dim"), source)
    F = _parse_field(head["field"], source, field)
    name = head["name"][1]
    n = _parse_dim(head["dim"], source)
    unit = None
    mul = F.zeros((n, n, n))
    seen: dict[tuple[int, int], int] = {}
    for no, line in lines:
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"cannot parse line {line!r}", no, source)
        parts = key.split()
        tokens = rest.split()
        if parts == ["unit"]:
            if unit is not None:
                raise ParseError("duplicate unit line", no, source)
            if len(tokens) != n:
                raise ParseError(f"unit has {len(tokens)} scalars, expected {n}", no, source)
            unit = _scalars(F, tokens, no, source)
        elif parts and parts[0] == "mul":
            if len(parts) != 3:
                raise ParseError(f"malformed mul key {key!r}", no, source)
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"malformed mul indices {key!r}", no, source) from None
            if not (0 <= i < n and 0 <= j < n):
                raise ParseError(f"mul index ({i},{j}) out of range for dim {n}", no, source)
            if (i, j) in seen:
                raise ParseError(f"duplicate mul entry ({i},{j}) (first on line {seen[(i, j)]})", no, source)
            if len(tokens) != n:
                raise ParseError(f"mul {i} {j} has {len(tokens)} scalars, expected {n}", no, source)
            seen[(i, j)] = no
            mul[i, j] = _scalars(F, tokens, no, source)
        else:
            raise ParseError(f"unknown key {key.strip()!r}", no, source)
    if unit is None:
        raise ParseError("missing unit line", None, source)
    for i in range(n):
        for j in range(n):
            if (i, j) not in seen:
                raise ParseError(f"missing mul entry `mul {i} {j}:`", None, source)
    return Algebra(F, mul, unit, name, validate=False)


def parse_bimodule(text: str, algebras: dict[str, Algebra], source: str = "<text>",
                   field: Field | None = None) -> Bimodule:
    lines = list(_lines(text))
    it = iter(lines)
    head = _header(it, ("field", "name", "algebra", "dim"), source)
    F = _parse_field(head["field"], source, field)
    name = head["name"][1]
    alg_no, alg_name = head["algebra"]
    if alg_name not in algebras:
        raise ParseError(f"algebra {alg_name!r} is not loaded", alg_no, source)
    alg = algebras[alg_name]
    if alg.field != F:
        raise ParseError(f"field {F} differs from algebra field {alg.field}", head["field"][0], source)
    m = _parse_dim(head["dim"], source)
    n = alg.dim
    left = F.zeros((n, m, m))
    right = F.zeros((n, m, m))
    seen: dict[tuple[str, int], int] = {}
    rest = list(it)
    pos = 0
    while pos < len(rest):
        no, line = rest[pos]
        key, sep, tail = line.partition(":")
        parts = key.split()
        if not sep or len(parts) != 2 or parts[0] not in ("left", "right") or tail.strip():
            if parts and parts[0] not in ("left", "right"):
                raise ParseError(f"unknown key {key.strip()!r}", no, source)
            raise ParseError(f"expected `left <i>:` or `right <i>:`, got {line!r}", no, source)
        side = parts[0]
        try:
            i = int(parts[1])
        except ValueError:
            raise ParseError(f"bad action index {parts[1]!r}", no, source) from None
        if not 0 <= i < n:
            raise ParseError(f"action index {i} out of range for algebra dim {n}", no, source)
        if (side, i) in seen:
            raise ParseError(f"duplicate `{side} {i}:` block", no, source)
        seen[(side, i)] = no
        block = []
        for r in range(m):
            pos += 1
            if pos >= len(rest):
                raise ParseError(f"`{side} {i}:` block ends after {r} of {m} rows", no, source)
            rno, rline = rest[pos]
            toks = rline.split()
            if len(toks) != m:
                raise ParseError(f"row has {len(toks)} scalars, expected {m}", rno, source)
            block.append(_scalars(F, toks, rno, source))
        target = left if side == "left" else right
        if m:
            target[i] = block
        pos += 1
    for side in ("left", "right"):
        for i in range(n):
            if (side, i) not in seen:
                raise ParseError(f"missing `{side} {i}:` block", None, source)
    return Bimodule(alg, left, right, name, validate=False)


def parse_presentation(path, algebras: dict[str, Algebra] | None = None, field: Field | None = None):
    """Parse an algebra or bimodule file (validation is left to the caller)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if detect_kind(text) == "bimodule":
        return parse_bimodule(text, algebras or {}, str(path), field)
    return parse_algebra(text, str(path), field)


def format_algebra(alg: Algebra, header: str | None = None) -> str:
    F = alg.field
    out = []
    if header:
        out += [f"# {line}" for line in header.splitlines()]
    out += [f"field: {F.token}", f"name: {alg.name}", f"dim: {alg.dim}"]
    out.append("unit: " + " ".join(F.format_scalar(x) for x in alg.unit))
    for i in range(alg.dim):
        for j in range(alg.dim):
            out.append(f"mul {i} {j}: " + " ".join(F.format_scalar(x) for x in alg.mul[i, j]))
    return "\n".join(out) + "\n"


def format_bimodule(mod: Bimodule) -> str:
    F = mod.field
    out = [f"field: {F.token}", f"name: {mod.name}", f"algebra: {mod.algebra.name}", f"dim: {mod.dim}"]
    for side, ops in (("left", mod.left), ("right", mod.right)):
        for i in range(mod.algebra.dim):
            out.append(f"{side} {i}:")
            for row in ops[i]:
                out.append(" ".join(F.format_scalar(x) for x in row))
    return "\n".join(out) + "\n"


def format_extension(ext) -> str:
    n, m = ext.base.dim, ext.module.dim
    header = (
        f"trivial extension {ext.base.name}⋉{ext.module.name}\n"
        f"basis split: 0..{n - 1} = {ext.base.name}-part, {n}..{n + m - 1} = {ext.module.name}-part"
    )
    return format_algebra(ext.total, header)


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


__all__ = [
    "ParseError",
    "parse_algebra",
    "parse_bimodule",
    "parse_presentation",
    "format_algebra",
    "format_bimodule",
    "format_extension",
    "detect_kind",
]
