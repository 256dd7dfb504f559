"""
Reading and writing the line-oriented ``.lat`` lattice format, ``.msr``
measure files, and Graphviz DOT export.

A ``.lat`` file::

    [elements] 0 a b c 1
    [covers]   0 a ; 0 b ; 0 c ; a 1 ; b 1 ; c 1
    [unary ']  0:1 a:b b:c c:a 1:0        # optional
    [binary ->] (a,b):b (a,0):b ...        # optional, must be total
    [binary *]  ...                        # optional, must be total

A section runs from its header to the next header; ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import BinaryOpTable, UnaryAlgebra
from .errors import FormatError, LatticeError
from .lattice import FiniteLattice
from .measures import GeneralizedMeasure
from .terms import Structure

_HEADER = re.compile(r"\[\s*(elements|covers|unary\s*'|binary\s*->|binary\s*\*)\s*\]")
_ENTRY = re.compile(r"\(\s*([^,\s()]+)\s*,\s*([^,\s()]+)\s*\)\s*:\s*([^\s()]+)")


@dataclass(frozen=True)
class LatFile:
    lattice: FiniteLattice
    unary: UnaryAlgebra | None = None
    arrow: BinaryOpTable | None = None
    prod: BinaryOpTable | None = None

    def structure(self) -> Structure:
        return Structure(
            self.lattice,
            None if self.unary is None else self.unary.comp,
            None if self.arrow is None else self.arrow.op,
            None if self.prod is None else self.prod.op,
        )

    def require_unary(self) -> UnaryAlgebra:
        if self.unary is None:
            raise FormatError("file has no [unary '] section")
        return self.unary


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def _sections(text: str) -> dict[str, str]:
    text = _strip_comments(text)
    headers = list(_HEADER.finditer(text))
    if not headers:
        raise FormatError("no [elements] section")
    if text[: headers[0].start()].strip():
        raise FormatError("text before the first section header")
    out = {}
    for i, m in enumerate(headers):
        key = re.sub(r"\s+", "", m.group(1)).replace("unary'", "unary").replace("binary->", "arrow")
        key = key.replace("binary*", "prod")
        if key in out:
            raise FormatError(f"duplicate section [{m.group(1)}]")
        end = headers[i + 1].start() if i + 1 < len(headers) else len(text)
        out[key] = text[m.end():end]
    return out


def _binary(lattice, body, tag):
    n = len(lattice)
    table = [[None] * n for _ in range(n)]
    pos = 0
    for m in _ENTRY.finditer(body):
        if body[pos:m.start()].strip():
            raise FormatError(f"cannot parse binary entry near {body[pos:m.start()].strip()!r}")
        x, y, v = (lattice.index(g) for g in m.groups())
        table[x][y] = v
        pos = m.end()
    if body[pos:].strip():
        raise FormatError(f"cannot parse binary entry near {body[pos:].strip()!r}")
    for x in range(n):
        for y in range(n):
            if table[x][y] is None:
                raise FormatError(
                    f"binary table is not total: ({lattice.names[x]},{lattice.names[y]}) missing"
                )
    return BinaryOpTable(lattice, tuple(map(tuple, table)), tag)


def parse_lat(text: str) -> LatFile:
    sec = _sections(text)
    if "elements" not in sec:
        raise FormatError("no [elements] section")
    names = sec["elements"].split()
    covers = []
    for chunk in re.split(r"[;\n]", sec.get("covers", "")):
        parts = chunk.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise FormatError(f"cover must be two labels, got {chunk.strip()!r}")
        covers.append((parts[0], parts[1]))
    lattice = FiniteLattice.from_covers(names, covers)
    unary = None
    if "unary" in sec:
        mapping = {}
        for item in sec["unary"].split():
            if item.count(":") != 1:
                raise FormatError(f"unary entry must be label:label, got {item!r}")
            src, dst = item.split(":")
            if src in mapping:
                raise FormatError(f"unary entry for {src!r} given twice")
            mapping[src] = dst
        unary = UnaryAlgebra.from_labels(lattice, mapping)
    arrow = _binary(lattice, sec["arrow"], "implication") if "arrow" in sec else None
    prod = _binary(lattice, sec["prod"], "product") if "prod" in sec else None
    return LatFile(lattice, unary, arrow, prod)


def load_lat(path) -> LatFile:
    with open(path, encoding="utf-8") as fh:
        return parse_lat(fh.read())


def _binary_line(header, lattice, table):
    N = lattice.names
    n = len(lattice)
    entries = " ".join(f"({N[x]},{N[y]}):{N[table[x][y]]}" for x in range(n) for y in range(n))
    return f"[{header}] {entries}"


def binary_section(table: BinaryOpTable) -> str:
    header = "binary *" if table.tag == "product" else "binary ->"
    return _binary_line(header, table.lattice, table.op)


def format_lat(lattice: FiniteLattice, unary=None, arrow=None, prod=None) -> str:
    N = lattice.names
    lines = [
        "[elements] " + " ".join(N),
        "[covers] " + " ; ".join(f"{a} {b}" for a, b in lattice.cover_labels()),
    ]
    if unary is not None:
        comp = unary.comp if isinstance(unary, UnaryAlgebra) else unary
        lines.append("[unary '] " + " ".join(f"{N[i]}:{N[c]}" for i, c in enumerate(comp)))
    if arrow is not None:
        lines.append(_binary_line("binary ->", lattice, getattr(arrow, "op", arrow)))
    if prod is not None:
        lines.append(_binary_line("binary *", lattice, getattr(prod, "op", prod)))
    return "\n".join(lines) + "\n"


def parse_msr(text: str, lattice: FiniteLattice) -> GeneralizedMeasure:
    mapping = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        label, sep, value = line.partition(":")
        if not sep:
            raise FormatError(f"measure line must be 'label: p/q', got {line!r}")
        label = label.strip()
        if label in mapping:
            raise FormatError(f"measure value for {label!r} given twice")
        try:
            mapping[label] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad rational {value.strip()!r}") from None
    try:
        return GeneralizedMeasure.from_labels(lattice, mapping)
    except LatticeError as exc:
        raise FormatError(str(exc)) from None


def load_msr(path, lattice: FiniteLattice) -> GeneralizedMeasure:
    with open(path, encoding="utf-8") as fh:
        return parse_msr(fh.read(), lattice)


def format_msr(lattice: FiniteLattice, s: GeneralizedMeasure) -> str:
    return "".join(f"{lattice.names[i]}: {v}\n" for i, v in enumerate(s.values))


def to_dot(lattice: FiniteLattice, name: str = "lattice") -> str:
    """Hasse diagram, one edge per cover, drawn bottom-up."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for label in lattice.names:
        lines.append(f'  "{label}" [label="{label}"];')
    for lo, hi in lattice.cover_labels():
        lines.append(f'  "{lo}" -> "{hi}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
