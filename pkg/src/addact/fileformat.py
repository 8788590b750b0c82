"""Line-oriented presentation files.

A file holds one or more documents separated by a line ``---``::

    name: A_2
    vars: x, y
    relations:
      x*y
      x^4 - y^2
    U: x, y, x^2, x^3
    complement: x^4
    expect_equation: z0^3*z5 - ...

``relations`` takes either an inline comma-separated list or one expression
per indented line.  ``#`` starts a comment.  Keys starting with ``expect_``
are kept verbatim for golden checks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .artin import DEFAULT_CAP, LocalAlgebra, Presentation, build_algebra
from .errors import FormatError
from .exactpoly import Poly, parse_poly

KEYS = ("name", "vars", "relations", "U", "complement")


@dataclass
class PresentationFile:
    vars: tuple
    relations: tuple
    U: tuple | None = None
    complement: str | None = None
    name: str | None = None
    expect: dict = field(default_factory=dict)

    def presentation(self, cap: int = DEFAULT_CAP) -> Presentation:
        return Presentation.parse(self.vars, self.relations, cap=cap)

    def algebra(self, cap: int = DEFAULT_CAP) -> LocalAlgebra:
        return build_algebra(self.presentation(cap))

    def poly(self, text: str) -> Poly:
        return parse_poly(text, self.vars)

    def hpair(self, A: LocalAlgebra | None = None, cap: int = DEFAULT_CAP):
        from .hpair import make_hpair
        if self.U is None:
            raise FormatError("the file has no U: line")
        A = A or self.algebra(cap)
        return make_hpair(A, [self.poly(u) for u in self.U],
                          None if self.complement is None else self.poly(self.complement))


def _split_list(value: str) -> list:
    return [item.strip() for item in value.split(",") if item.strip()]


def _parse_document(lines: list, start: int) -> PresentationFile:
    fields: dict = {}
    current = None
    for offset, raw in enumerate(lines):
        lineno = start + offset
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line[0].isspace():
            if current != "relations":
                raise FormatError(f"line {lineno}: unexpected indented line")
            fields["relations"].append(line.strip())
            continue
        if ":" not in line:
            raise FormatError(f"line {lineno}: expected 'key: value'")
        key, value = (s.strip() for s in line.split(":", 1))
        if key not in KEYS and not key.startswith("expect_"):
            raise FormatError(f"line {lineno}: unknown key {key!r}")
        if key in fields:
            raise FormatError(f"line {lineno}: duplicate key {key!r}")
        current = key
        if key == "relations":
            fields[key] = _split_list(value)
        else:
            fields[key] = value

    if "vars" not in fields:
        raise FormatError(f"document at line {start}: missing 'vars:'")
    gens = tuple(_split_list(fields["vars"]))
    if not gens:
        raise FormatError(f"document at line {start}: empty variable list")
    if not fields.get("relations"):
        raise FormatError(f"document at line {start}: missing 'relations:'")
    return PresentationFile(
        vars=gens,
        relations=tuple(fields["relations"]),
        U=tuple(_split_list(fields["U"])) if "U" in fields else None,
        complement=fields.get("complement") or None,
        name=fields.get("name"),
        expect={k: v for k, v in fields.items() if k.startswith("expect_")},
    )


def parse_text(text: str) -> list:
    docs, chunk, start = [], [], 1
    for i, line in enumerate(text.splitlines(), 1):
        if line.strip() == "---":
            if any(s.split("#", 1)[0].strip() for s in chunk):
                docs.append(_parse_document(chunk, start))
            chunk, start = [], i + 1
        else:
            chunk.append(line)
    if any(s.split("#", 1)[0].strip() for s in chunk):
        docs.append(_parse_document(chunk, start))
    if not docs:
        raise FormatError("no documents in input")
    return docs


def load(path) -> list:
    return parse_text(Path(path).read_text(encoding="utf-8"))


def dump(doc: PresentationFile) -> str:
    out = []
    if doc.name:
        out.append(f"name: {doc.name}")
    out.append("vars: " + ", ".join(doc.vars))
    out.append("relations:")
    out.extend(f"  {r}" for r in doc.relations)
    if doc.U is not None:
        out.append("U: " + ", ".join(doc.U))
    if doc.complement:
        out.append(f"complement: {doc.complement}")
    out.extend(f"{k}: {v}" for k, v in doc.expect.items())
    return "\n".join(out) + "\n"
