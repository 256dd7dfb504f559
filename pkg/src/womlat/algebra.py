"""
Lattices with a unary operation ``'`` (and binary tables), together with
the structural predicates used throughout: weak and dual weak
orthomodularity, the (weak) double negation law, complementation,
orthocomplementation, de Morgan laws and antitonicity.

Every predicate scans its assignment space in lexicographic id order and
reports the first violating assignment, so witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import LatticeError, NoBottom, NoTop, Unbounded
from .lattice import FiniteLattice


@dataclass(frozen=True, eq=False)
class UnaryAlgebra:
    lattice: FiniteLattice
    comp: tuple[int, ...]

    def __post_init__(self):
        comp = tuple(self.comp)
        n = len(self.lattice)
        if len(comp) != n or any(not 0 <= c < n for c in comp):
            raise LatticeError("unary table must map every element into the lattice")
        object.__setattr__(self, "comp", comp)

    @classmethod
    def from_labels(cls, lattice: FiniteLattice, mapping) -> UnaryAlgebra:
        """``mapping`` sends every label to the label of its image."""
        comp = [None] * len(lattice)
        for src, dst in dict(mapping).items():
            comp[lattice.index(src)] = lattice.index(dst)
        if None in comp:
            missing = [lattice.names[i] for i, c in enumerate(comp) if c is None]
            raise LatticeError(f"unary table is not total, missing {missing}")
        return cls(lattice, tuple(comp))

    def __len__(self):
        return len(self.lattice)

    def __eq__(self, other):
        return (
            isinstance(other, UnaryAlgebra)
            and self.comp == other.comp
            and self.lattice.names == other.lattice.names
            and self.lattice.leq_table == other.lattice.leq_table
        )

    def __hash__(self):
        return hash((self.lattice.names, self.lattice.leq_table, self.comp))

    def label_map(self) -> dict[str, str]:
        names = self.lattice.names
        return {names[i]: names[c] for i, c in enumerate(self.comp)}

    def __repr__(self):
        pairs = " ".join(f"{k}:{v}" for k, v in self.label_map().items())
        return f"UnaryAlgebra({list(self.lattice.names)}, ' = {pairs})"


@dataclass(frozen=True, eq=False)
class BinaryOpTable:
    lattice: FiniteLattice
    op: tuple[tuple[int, ...], ...]
    tag: str = "other"

    def __post_init__(self):
        n = len(self.lattice)
        op = tuple(tuple(row) for row in self.op)
        if len(op) != n or any(len(row) != n or any(not 0 <= v < n for v in row) for row in op):
            raise LatticeError("binary table must be total on L x L")
        object.__setattr__(self, "op", op)

    @classmethod
    def from_function(cls, lattice, fn, tag="other") -> BinaryOpTable:
        n = len(lattice)
        return cls(lattice, tuple(tuple(fn(x, y) for y in range(n)) for x in range(n)), tag)

    def __call__(self, x: int, y: int) -> int:
        return self.op[x][y]

    def __eq__(self, other):
        return isinstance(other, BinaryOpTable) and self.op == other.op

    def __hash__(self):
        return hash(self.op)

    def __repr__(self):
        return f"BinaryOpTable({self.tag}, {self.op})"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exhaustive check.

    ``witness`` maps variable names to element labels and is present exactly
    when ``holds`` is false. ``parts`` holds sub-reports of composite checks;
    ``info`` carries auxiliary flags and counts.
    """

    name: str
    holds: bool
    witness: dict | None = None
    detail: str = ""
    parts: tuple = ()
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("witness must be present exactly when the check fails")

    def __bool__(self):
        return self.holds

    def part(self, name: str) -> CheckReport:
        for p in self.parts:
            if p.name == name:
                return p
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "witness": self.witness,
            "detail": self.detail,
            "parts": [p.to_dict() for p in self.parts],
            "info": {k: _jsonable(v) for k, v in self.info.items()},
        }

    def lines(self, indent: str = "") -> list[str]:
        status = "holds" if self.holds else "FAILS"
        out = [f"{indent}{self.name}: {status}"]
        if self.witness:
            out[0] += "  [" + ",".join(f"{k}={v}" for k, v in self.witness.items()) + "]"
        if not self.holds and self.detail:
            out[0] += f"  {self.detail}"
        for key, value in self.info.items():
            out.append(f"{indent}  {key} = {_jsonable(value)}")
        for p in self.parts:
            out.extend(p.lines(indent + "  "))
        return out


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


def passed(name: str, detail: str = "", info=None) -> CheckReport:
    return CheckReport(name, True, None, detail, (), dict(info or {}))


def failed(name: str, witness: dict, detail: str = "", info=None) -> CheckReport:
    return CheckReport(name, False, dict(witness), detail, (), dict(info or {}))


def combine(name: str, parts, info=None) -> CheckReport:
    """Conjunction of sub-reports; witness and detail come from the first failure."""
    parts = tuple(parts)
    for p in parts:
        if not p.holds:
            detail = f"{p.name}: {p.detail}" if p.detail else p.name
            return CheckReport(name, False, dict(p.witness), detail, parts, dict(info or {}))
    return CheckReport(name, True, None, "", parts, dict(info or {}))


def scan(n: int, arity: int, bad):
    """First tuple in ``range(n)**arity`` (lex order) on which ``bad`` is true."""
    for args in product(range(n), repeat=arity):
        if bad(*args):
            return args
    return None


def law(name, lattice, variables, bad, describe):
    """Report for a universally quantified law; ``describe`` renders a violation."""
    hit = scan(len(lattice), len(variables), bad)
    if hit is None:
        return passed(name)
    names = lattice.names
    return failed(name, {v: names[a] for v, a in zip(variables, hit)}, describe(*hit))


def require_top(lattice: FiniteLattice) -> int:
    if lattice.top is None:
        raise NoTop("lattice has no greatest element")
    return lattice.top


def require_bottom(lattice: FiniteLattice) -> int:
    if lattice.bottom is None:
        raise NoBottom("lattice has no smallest element")
    return lattice.bottom


def require_bounds(lattice: FiniteLattice) -> tuple[int, int]:
    if lattice.bottom is None or lattice.top is None:
        raise Unbounded("lattice is not bounded")
    return lattice.bottom, lattice.top


# ---------------------------------------------------------------------------
# Predicates


def is_weakly_orthomodular(a: UnaryAlgebra) -> CheckReport:
    """(x/\\y) \\/ (x /\\ (x/\\y)') = x for all x, y."""
    L, c = a.lattice, a.comp
    J, M, N = L.join_table, L.meet_table, L.names

    def bad(x, y):
        return J[M[x][y]][M[x][c[M[x][y]]]] != x

    def describe(x, y):
        got = J[M[x][y]][M[x][c[M[x][y]]]]
        return f"(x/\\y) \\/ (x/\\(x/\\y)') = {N[got]} != {N[x]} = x"

    return law("wom", L, "xy", bad, describe)


def is_dually_weakly_orthomodular(a: UnaryAlgebra) -> CheckReport:
    """(x\\/y) /\\ (x \\/ (x\\/y)') = x for all x, y."""
    L, c = a.lattice, a.comp
    J, M, N = L.join_table, L.meet_table, L.names

    def bad(x, y):
        return M[J[x][y]][J[x][c[J[x][y]]]] != x

    def describe(x, y):
        got = M[J[x][y]][J[x][c[J[x][y]]]]
        return f"(x\\/y) /\\ (x\\/(x\\/y)') = {N[got]} != {N[x]} = x"

    return law("dwom", L, "xy", bad, describe)


def satisfies_double_negation(a: UnaryAlgebra) -> CheckReport:
    c, N = a.comp, a.lattice.names
    return law(
        "dnl",
        a.lattice,
        "x",
        lambda x: c[c[x]] != x,
        lambda x: f"(x')' = {N[c[x]]}' = {N[c[c[x]]]} != {N[x]}",
    )


def satisfies_weak_double_negation(a: UnaryAlgebra) -> CheckReport:
    c, N = a.comp, a.lattice.names
    return law(
        "wdnl",
        a.lattice,
        "x",
        lambda x: c[c[c[x]]] != c[x],
        lambda x: f"((x')')' = {N[c[c[c[x]]]]} != {N[c[x]]} = x'",
    )


def is_involution(a: UnaryAlgebra) -> CheckReport:
    report = satisfies_double_negation(a)
    return CheckReport("involution", report.holds, report.witness, report.detail)


def is_complementation(a: UnaryAlgebra) -> CheckReport:
    """x \\/ x' = 1 and x /\\ x' = 0; raises Unbounded on unbounded lattices."""
    L, c = a.lattice, a.comp
    bot, top = require_bounds(L)
    J, M, N = L.join_table, L.meet_table, L.names
    return combine(
        "complementation",
        [
            law("join-complement", L, "x", lambda x: J[x][c[x]] != top,
                lambda x: f"x \\/ x' = {N[J[x][c[x]]]} != {N[top]}"),
            law("meet-complement", L, "x", lambda x: M[x][c[x]] != bot,
                lambda x: f"x /\\ x' = {N[M[x][c[x]]]} != {N[bot]}"),
        ],
    )


def is_antitone(a: UnaryAlgebra) -> CheckReport:
    """x <= y implies y' <= x'."""
    L, c = a.lattice, a.comp
    leq, N = L.leq_table, L.names
    return law(
        "antitone",
        L,
        "xy",
        lambda x, y: leq[x][y] and not leq[c[y]][c[x]],
        lambda x, y: f"{N[x]}≤{N[y]} but {N[y]}'={N[c[y]]} ⋢ {N[c[x]]}={N[x]}'",
    )


def satisfies_de_morgan(a: UnaryAlgebra) -> CheckReport:
    L, c = a.lattice, a.comp
    J, M, N = L.join_table, L.meet_table, L.names
    return combine(
        "demorgan",
        [
            law("demorgan-join", L, "xy", lambda x, y: c[J[x][y]] != M[c[x]][c[y]],
                lambda x, y: f"(x\\/y)' = {N[c[J[x][y]]]} != {N[M[c[x]][c[y]]]} = x'/\\y'"),
            law("demorgan-meet", L, "xy", lambda x, y: c[M[x][y]] != J[c[x]][c[y]],
                lambda x, y: f"(x/\\y)' = {N[c[M[x][y]]]} != {N[J[c[x]][c[y]]]} = x'\\/y'"),
        ],
    )


def is_orthocomplementation(a: UnaryAlgebra) -> CheckReport:
    # Antitonicity follows from the other clauses; it is checked before de
    # Morgan so that the reported witness is the order-reversal failure.
    return combine(
        "ortho",
        [
            is_complementation(a),
            satisfies_double_negation(a),
            is_antitone(a),
            satisfies_de_morgan(a),
        ],
    )


def is_orthomodular(a: UnaryAlgebra) -> CheckReport:
    return combine("om", [is_orthocomplementation(a), is_weakly_orthomodular(a)])


def check_lemma_bounds(a: UnaryAlgebra) -> CheckReport:
    """Boundedness consequences of (dual) weak orthomodularity.

    WOM gives a top with x \\/ x' = 1 and, with a bottom, 0' = 1; dWOM gives
    a bottom with x /\\ x' = 0 and, with a top, 1' = 0. Clauses whose
    hypothesis fails are skipped, so the report holds vacuously then.
    """
    L, c = a.lattice, a.comp
    J, M, N = L.join_table, L.meet_table, L.names
    wom = is_weakly_orthomodular(a).holds
    dwom = is_dually_weakly_orthomodular(a).holds
    parts = []
    if wom:
        top = L.top
        if top is None:
            parts.append(failed("top-exists", {}, "WOM algebra without a greatest element"))
        else:
            parts.append(passed("top-exists"))
            parts.append(law("x\\/x'=1", L, "x", lambda x: J[x][c[x]] != top,
                             lambda x: f"x \\/ x' = {N[J[x][c[x]]]} != {N[top]}"))
            if L.bottom is not None:
                b = L.bottom
                parts.append(passed("0'=1") if c[b] == top else
                             failed("0'=1", {"x": N[b]}, f"0' = {N[c[b]]} != {N[top]}"))
    if dwom:
        bot = L.bottom
        if bot is None:
            parts.append(failed("bottom-exists", {}, "dWOM algebra without a smallest element"))
        else:
            parts.append(passed("bottom-exists"))
            parts.append(law("x/\\x'=0", L, "x", lambda x: M[x][c[x]] != bot,
                             lambda x: f"x /\\ x' = {N[M[x][c[x]]]} != {N[bot]}"))
            if L.top is not None:
                t = L.top
                parts.append(passed("1'=0") if c[t] == bot else
                             failed("1'=0", {"x": N[t]}, f"1' = {N[c[t]]} != {N[bot]}"))
    return combine("lemma-bounds", parts, {"wom": wom, "dwom": dwom})


PREDICATES = {
    "wom": is_weakly_orthomodular,
    "dwom": is_dually_weakly_orthomodular,
    "dnl": satisfies_double_negation,
    "wdnl": satisfies_weak_double_negation,
    "complementation": is_complementation,
    "orthocomplementation": is_orthocomplementation,
    "orthomodular": is_orthomodular,
    "demorgan": satisfies_de_morgan,
    "antitone": is_antitone,
    "involution": is_involution,
    "lemma-bounds": check_lemma_bounds,
}
