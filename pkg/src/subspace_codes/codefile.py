"""Plain-text code files.

A file is a block of ``# key=value`` header lines followed by one codeword
per line.  A codeword is its RREF generator, rows as digit strings joined by
``;`` (``-`` stands for the zero space)::

    # subspace-code v1
    # q=2
    # n=6
    # k=3
    # d=4
    # skeleton=111000,100110,010101,001011
    # fiber=111000 dim=6 bound=6 size=64
    100011;010010;001001
"""

from __future__ import annotations

import warnings
from typing import Iterable

from .ferrers_forms import as_binary_vector, vector_str
from .finite_field import Field, field_from_order
from .gf_matrix import GFMatrix
from .multilevel import Fiber, SubspaceCode, dedup
from .subspace_core import Subspace

FORMAT_LINE = "# subspace-code v1"
DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
ZERO_SPACE = "-"


class CodeFileError(ValueError):
    pass


class CodeFileWarning(UserWarning):
    pass


def _row_str(row: Iterable[int]) -> str:
    return "".join(DIGITS[x] for x in row)


def codeword_str(c: Subspace) -> str:
    if c.dim == 0:
        return ZERO_SPACE
    return ";".join(_row_str(r) for r in c.rows)


def emit(code: SubspaceCode) -> str:
    if code.field.q > len(DIGITS):
        raise CodeFileError(f"q={code.field.q} has no single-digit encoding")
    k = code.k
    lines = [
        FORMAT_LINE,
        f"# q={code.field.q}",
        f"# n={code.n}",
        f"# k={'mixed' if k is None else k}",
        f"# d={'unknown' if code.distance is None else code.distance}",
        f"# size={len(code)}",
    ]
    if code.skeleton is not None:
        lines.append("# skeleton=" + ",".join(vector_str(v) for v in code.skeleton))
    for f in code.fibers:
        lines.append(
            f"# fiber={vector_str(f.v)} dim={f.dimension} bound={f.bound} size={f.size}"
            f"{'' if f.attains_bound else ' deficit'}"
        )
    for key, value in code.notes.items():
        lines.append(f"# note.{key}={value}")
    lines.extend(codeword_str(c) for c in code.codewords)
    return "\n".join(lines) + "\n"


def _parse_fiber(value: str) -> Fiber:
    parts = value.split()
    fields = dict(p.split("=", 1) for p in parts[1:] if "=" in p)
    try:
        v = as_binary_vector(parts[0])
        dim, bound, size = int(fields["dim"]), int(fields["bound"]), int(fields["size"])
    except (KeyError, ValueError, IndexError) as exc:
        raise CodeFileError(f"malformed fiber line: {value!r}") from exc
    return Fiber(v, dim, bound, "deficit" not in parts, size)


def _parse_codeword(text: str, field: Field, n: int, lineno: int) -> Subspace:
    if text == ZERO_SPACE:
        return Subspace(GFMatrix(field, [], n), [], trusted=True)
    rows = []
    for part in text.split(";"):
        if len(part) != n:
            raise CodeFileError(f"line {lineno}: row {part!r} has length {len(part)}, expected {n}")
        row = []
        for ch in part:
            value = DIGITS.find(ch)
            if value < 0 or value >= field.q:
                raise CodeFileError(f"line {lineno}: digit {ch!r} is not an element of GF({field.q})")
            row.append(value)
        rows.append(row)
    given = GFMatrix(field, rows, n)
    canonical = Subspace(given)
    if canonical.generator != given:
        warnings.warn(f"line {lineno}: rows are not in RREF; re-canonicalized", CodeFileWarning, stacklevel=3)
    return canonical


def parse(text: str) -> SubspaceCode:
    header: dict[str, str] = {}
    fibers = []
    notes = {}
    body: list[tuple[int, str]] = []
    lines = text.splitlines()
    if not lines or lines[0].strip() != FORMAT_LINE:
        raise CodeFileError(f"missing format line {FORMAT_LINE!r}")
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            entry = line[1:].strip()
            if "=" not in entry:
                continue
            key, value = entry.split("=", 1)
            if key == "fiber":
                fibers.append(_parse_fiber(value))
            elif key.startswith("note."):
                notes[key[5:]] = value
            else:
                header[key] = value
            continue
        body.append((lineno, line))
    for key in ("q", "n", "k", "d"):
        if key not in header:
            raise CodeFileError(f"header is missing {key}=")
    try:
        field = field_from_order(int(header["q"]))
        n = int(header["n"])
    except ValueError as exc:
        raise CodeFileError(f"bad header: {exc}") from exc
    codewords = [_parse_codeword(text, field, n, lineno) for lineno, text in body]
    unique, removed = dedup(codewords)
    if removed:
        warnings.warn(f"dropped {removed} duplicate codewords", CodeFileWarning, stacklevel=2)
    if header["k"] != "mixed":
        k = int(header["k"])
        for c in unique:
            if c.dim != k:
                raise CodeFileError(f"codeword of dimension {c.dim} in a code declared k={k}")
    if "size" in header and int(header["size"]) != len(codewords):
        raise CodeFileError(f"header declares size={header['size']} but the file has {len(codewords)} codewords")
    distance = None if header["d"] == "unknown" else int(header["d"])
    skeleton = None
    if "skeleton" in header:
        skeleton = tuple(as_binary_vector(v) for v in header["skeleton"].split(","))
    return SubspaceCode(field, n, unique, distance, skeleton, tuple(fibers), notes)


def write_code(code: SubspaceCode, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(emit(code))


def read_code(path: str) -> SubspaceCode:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
