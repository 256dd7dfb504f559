"""
D-implications, W-implications and the Sasaki implication.

D-implications correspond one-to-one to dually weakly orthomodular unary
operations (via ``x -> y = (x \\/ y)' \\/ y`` and ``x' = x -> 0``) and to
families of compatible dually weakly orthomodular operations on principal
filters. W-implications correspond to weakly orthomodular operations with
the double negation law (via ``x -> y = x' \\/ (x /\\ y)``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import (
    BinaryOpTable,
    CheckReport,
    UnaryAlgebra,
    combine,
    failed,
    is_dually_weakly_orthomodular,
    is_weakly_orthomodular,
    law,
    passed,
    require_bottom,
    require_bounds,
    require_top,
    satisfies_double_negation,
)
from .errors import CapExceeded, LatticeError, PreconditionViolated
from .lattice import FiniteLattice, interval_sublattice
from .search import WORK_CAP, enumerate_unary, iter_unary

FAMILY_CAP = 4


def op_table(arrow) -> tuple:
    if isinstance(arrow, BinaryOpTable):
        return arrow.op
    return tuple(tuple(row) for row in arrow)


def _require(report: CheckReport, what: str):
    if not report.holds:
        raise PreconditionViolated(f"{what} does not hold ({report.detail})", report)


# ---------------------------------------------------------------------------
# D-implication


def is_d_implication(lattice: FiniteLattice, arrow) -> CheckReport:
    """Check the three D-implication identities; no constants are needed."""
    A = op_table(arrow)
    L = lattice
    J, M, N = L.join_table, L.meet_table, L.names
    return combine(
        "d-implication",
        [
            law("(x\\/y)->x = y->x", L, "xy",
                lambda x, y: A[J[x][y]][x] != A[y][x],
                lambda x, y: f"{N[A[J[x][y]][x]]} != {N[A[y][x]]}"),
            law("x\\/y\\/((x\\/z)->y) = z->(x\\/y)", L, "xyz",
                lambda x, y, z: J[J[x][y]][A[J[x][z]][y]] != A[z][J[x][y]],
                lambda x, y, z: f"{N[J[J[x][y]][A[J[x][z]][y]]]} != {N[A[z][J[x][y]]]}"),
            law("(x\\/y)/\\(x->y) = y", L, "xy",
                lambda x, y: M[J[x][y]][A[x][y]] != y,
                lambda x, y: f"{N[M[J[x][y]][A[x][y]]]} != {N[y]}"),
        ],
    )


def d_arrow(a: UnaryAlgebra) -> BinaryOpTable:
    """``(x \\/ y)' \\/ y`` without checking hypotheses."""
    J, c = a.lattice.join_table, a.comp
    return BinaryOpTable.from_function(a.lattice, lambda x, y: J[c[J[x][y]]][y], "implication")


def d_implication_from_complement(a: UnaryAlgebra) -> BinaryOpTable:
    require_bottom(a.lattice)
    _require(is_dually_weakly_orthomodular(a), "dual weak orthomodularity")
    return d_arrow(a)


def complement_from_d_implication(lattice: FiniteLattice, arrow) -> UnaryAlgebra:
    bot = require_bottom(lattice)
    _require(is_d_implication(lattice, arrow), "D-implication axioms")
    A = op_table(arrow)
    return UnaryAlgebra(lattice, tuple(A[x][bot] for x in range(len(lattice))))


def verify_d_bijection(lattice: FiniteLattice, cap: int = WORK_CAP) -> CheckReport:
    """Round-trip every dWOM unary table through its D-implication and back."""
    require_bottom(lattice)
    N = lattice.names
    tables = 0
    arrows = set()
    for a in iter_unary(lattice, {"dwom": True}, cap):
        tables += 1
        tag = {"'": " ".join(f"{k}:{v}" for k, v in a.label_map().items())}
        arrow = d_implication_from_complement(a)
        axioms = is_d_implication(lattice, arrow)
        if not axioms.holds:
            return failed("d-bijection", tag, "derived arrow violates " + axioms.detail)
        back = complement_from_d_implication(lattice, arrow)
        if back.comp != a.comp:
            return failed("d-bijection", tag, "x -> 0 does not recover the unary table")
        if d_implication_from_complement(back) != arrow:
            return failed("d-bijection", tag, "re-derived arrow differs")
        arrows.add(arrow.op)
    info = {"elements": len(N), "dwom_tables": tables, "d_implications": len(arrows)}
    if len(arrows) != tables:
        return failed("d-bijection", {}, "two unary tables yield the same arrow", info)
    return passed("d-bijection", info=info)


# ---------------------------------------------------------------------------
# Compatible families


@dataclass(frozen=True)
class CompatibleFamily:
    """``ops[x][z]`` is ``z^x`` for ``z`` in ``[x)`` and None elsewhere."""

    lattice: FiniteLattice
    ops: tuple

    def __post_init__(self):
        L = self.lattice
        ops = tuple(tuple(row) for row in self.ops)
        if len(ops) != len(L):
            raise LatticeError("family needs one operation per element")
        for x, row in enumerate(ops):
            for z in range(len(L)):
                if (row[z] is None) == L.leq_table[x][z]:
                    raise LatticeError("family operation must be defined exactly on [x)")
        object.__setattr__(self, "ops", ops)

    def __eq__(self, other):
        return isinstance(other, CompatibleFamily) and self.ops == other.ops

    def __hash__(self):
        return hash(self.ops)

    def local_algebra(self, x: int) -> UnaryAlgebra:
        """``([x), ^x)`` as a UnaryAlgebra on the interval sublattice."""
        sub = interval_sublattice(self.lattice, x)
        where = {p: i for i, p in enumerate(sub.parent_ids)}
        row = self.ops[x]
        images = []
        for p in sub.parent_ids:
            if row[p] not in where:
                raise LatticeError(f"{self.lattice.names[p]}^{self.lattice.names[x]} leaves [x)")
            images.append(where[row[p]])
        return UnaryAlgebra(sub, tuple(images))


def family_from_d_implication(lattice: FiniteLattice, arrow) -> CompatibleFamily:
    _require(is_d_implication(lattice, arrow), "D-implication axioms")
    A, leq = op_table(arrow), lattice.leq_table
    n = len(lattice)
    ops = tuple(tuple(A[z][x] if leq[x][z] else None for z in range(n)) for x in range(n))
    return CompatibleFamily(lattice, ops)


def d_implication_from_family(lattice: FiniteLattice, fam: CompatibleFamily) -> BinaryOpTable:
    _require(is_compatible_family(lattice, fam), "family compatibility")
    J, ops = lattice.join_table, fam.ops
    return BinaryOpTable.from_function(lattice, lambda x, y: ops[y][J[x][y]], "implication")


def is_compatible_family(lattice: FiniteLattice, fam: CompatibleFamily) -> CheckReport:
    L, ops = lattice, fam.ops
    J, leq, N = L.join_table, L.leq_table, L.names
    n = len(L)
    for x in range(n):
        for z in range(n):
            if leq[x][z] and not leq[x][ops[x][z]]:
                return failed("compatible-family", {"x": N[x], "z": N[z]},
                              f"{N[z]}^{N[x]} = {N[ops[x][z]]} is outside [{N[x]})")
    parts = []
    for x in range(n):
        local = is_dually_weakly_orthomodular(fam.local_algebra(x))
        if local.holds:
            parts.append(passed(f"dwom[{N[x]})"))
        else:
            witness = {"filter": N[x], **local.witness}
            parts.append(failed(f"dwom[{N[x]})", witness, local.detail))

    def bad(x, y, z):
        return leq[x][y] and leq[y][z] and J[ops[x][z]][y] != ops[y][z]

    def describe(x, y, z):
        return f"z^x \\/ y = {N[J[ops[x][z]][y]]} != {N[ops[y][z]]} = z^y"

    parts.append(law("compatibility", L, "xyz", bad, describe))
    return combine("compatible-family", parts)


def _local_dwom_choices(lattice: FiniteLattice, x: int) -> list[tuple]:
    """All dWOM operations on ``[x)`` as full-length rows with None off the filter."""
    sub = interval_sublattice(lattice, x)
    n = len(lattice)
    rows = []
    for a in enumerate_unary(sub, {"dwom": True}):
        row = [None] * n
        for i, p in enumerate(sub.parent_ids):
            row[p] = sub.parent_ids[a.comp[i]]
        rows.append(tuple(row))
    return rows


def enumerate_compatible_families(lattice: FiniteLattice, max_n: int = FAMILY_CAP):
    n = len(lattice)
    if n > max_n:
        raise CapExceeded(f"family enumeration limited to {max_n} elements")
    choices = [_local_dwom_choices(lattice, x) for x in range(n)]
    out = []
    for ops in product(*choices):
        fam = CompatibleFamily(lattice, ops)
        if is_compatible_family(lattice, fam).holds:
            out.append(fam)
    return out


def verify_family_bijection(lattice: FiniteLattice, max_n: int = FAMILY_CAP) -> CheckReport:
    """Families and D-implications: both round-trips, and the two enumerations agree."""
    require_bottom(lattice)
    families = enumerate_compatible_families(lattice, max_n)
    from_families = set()
    for fam in families:
        arrow = d_implication_from_family(lattice, fam)
        if not is_d_implication(lattice, arrow).holds:
            return failed("family-bijection", {}, "arrow from a family violates the axioms")
        if family_from_d_implication(lattice, arrow) != fam:
            return failed("family-bijection", {}, "family -> arrow -> family is not the identity")
        from_families.add(arrow.op)
    from_comps = set()
    for a in iter_unary(lattice, {"dwom": True}):
        arrow = d_implication_from_complement(a)
        fam = family_from_d_implication(lattice, arrow)
        if not is_compatible_family(lattice, fam).holds:
            return failed("family-bijection", {}, "family of a D-implication is not compatible")
        if d_implication_from_family(lattice, fam) != arrow:
            return failed("family-bijection", {}, "arrow -> family -> arrow is not the identity")
        from_comps.add(arrow.op)
    info = {
        "families": len(families),
        "family_arrows": len(from_families),
        "dwom_arrows": len(from_comps),
    }
    if len(from_families) != len(families):
        return failed("family-bijection", {}, "distinct families give the same arrow", info)
    if from_families != from_comps:
        return failed("family-bijection", {}, "the two enumerations disagree", info)
    return passed("family-bijection", info=info)


# ---------------------------------------------------------------------------
# Sasaki implication


def sasaki_implication(a: UnaryAlgebra) -> BinaryOpTable:
    """``(x' /\\ y') \\/ y``."""
    J, M, c = a.lattice.join_table, a.lattice.meet_table, a.comp
    return BinaryOpTable.from_function(a.lattice, lambda x, y: J[M[c[x]][c[y]]][y], "implication")


def verify_sasaki_theorem(a: UnaryAlgebra) -> CheckReport:
    """For an involutive ``'``: WOM iff ``0' = 1`` and ``(x->0)->(x/\\y) = x`` (Sasaki arrow)."""
    L = a.lattice
    bot, top = require_bounds(L)
    _require(satisfies_double_negation(a), "the double negation law")
    N, M = L.names, L.meet_table
    A = sasaki_implication(a).op
    wom = is_weakly_orthomodular(a)
    zero = a.comp[bot] == top
    ident = law("(x->0)->(x/\\y) = x", L, "xy",
                lambda x, y: A[A[x][bot]][M[x][y]] != x,
                lambda x, y: f"(x->0)->(x/\\y) = {N[A[A[x][bot]][M[x][y]]]} != {N[x]}")
    rhs = zero and ident.holds
    info = {"wom": wom.holds, "zero_prime_is_one": zero, "sasaki_identity": ident.holds}
    if wom.holds == rhs:
        return passed("sasaki", info=info)
    if not wom.holds:
        return failed("sasaki", wom.witness, "identities hold but WOM fails: " + wom.detail, info)
    if not zero:
        return failed("sasaki", {"x": N[bot]}, "WOM holds but 0' != 1", info)
    return failed("sasaki", ident.witness, "WOM holds but " + ident.detail, info)


# ---------------------------------------------------------------------------
# W-implication


def is_w_implication(lattice: FiniteLattice, arrow) -> CheckReport:
    bot = require_bottom(lattice)
    A = op_table(arrow)
    L = lattice
    J, M, N = L.join_table, L.meet_table, L.names
    return combine(
        "w-implication",
        [
            law("(x->0)->0 = x", L, "x",
                lambda x: A[A[x][bot]][bot] != x,
                lambda x: f"{N[A[A[x][bot]][bot]]} != {N[x]}"),
            law("((x/\\y)->0)->x = x", L, "xy",
                lambda x, y: A[A[M[x][y]][bot]][x] != x,
                lambda x, y: f"{N[A[A[M[x][y]][bot]][x]]} != {N[x]}"),
            law("(x/\\y)\\/(x->0) = x->y", L, "xy",
                lambda x, y: J[M[x][y]][A[x][bot]] != A[x][y],
                lambda x, y: f"{N[J[M[x][y]][A[x][bot]]]} != {N[A[x][y]]}"),
        ],
    )


def w_arrow(a: UnaryAlgebra) -> BinaryOpTable:
    """``x' \\/ (x /\\ y)`` without checking hypotheses."""
    J, M, c = a.lattice.join_table, a.lattice.meet_table, a.comp
    return BinaryOpTable.from_function(a.lattice, lambda x, y: J[c[x]][M[x][y]], "implication")


def w_implication_from_complement(a: UnaryAlgebra) -> BinaryOpTable:
    _require(is_weakly_orthomodular(a), "weak orthomodularity")
    _require(satisfies_double_negation(a), "the double negation law")
    return w_arrow(a)


def complement_from_w_implication(lattice: FiniteLattice, arrow) -> UnaryAlgebra:
    bot = require_bottom(lattice)
    _require(is_w_implication(lattice, arrow), "W-implication axioms")
    A = op_table(arrow)
    return UnaryAlgebra(lattice, tuple(A[x][bot] for x in range(len(lattice))))


def verify_w_bijection(lattice: FiniteLattice, cap: int = WORK_CAP) -> CheckReport:
    require_bottom(lattice)
    tables = 0
    arrows = set()
    for a in iter_unary(lattice, {"wom": True, "dnl": True}, cap):
        tables += 1
        tag = {"'": " ".join(f"{k}:{v}" for k, v in a.label_map().items())}
        arrow = w_implication_from_complement(a)
        axioms = is_w_implication(lattice, arrow)
        if not axioms.holds:
            return failed("w-bijection", tag, "derived arrow violates " + axioms.detail)
        back = complement_from_w_implication(lattice, arrow)
        if back.comp != a.comp:
            return failed("w-bijection", tag, "x -> 0 does not recover the unary table")
        if w_implication_from_complement(back) != arrow:
            return failed("w-bijection", tag, "re-derived arrow differs")
        arrows.add(arrow.op)
    info = {"elements": len(lattice), "wom_dnl_tables": tables, "w_implications": len(arrows)}
    if len(arrows) != tables:
        return failed("w-bijection", {}, "two unary tables yield the same arrow", info)
    return passed("w-bijection", info=info)


# ---------------------------------------------------------------------------
# Elementary properties


def d_implication_properties(a: UnaryAlgebra) -> CheckReport:
    L, c = a.lattice, a.comp
    _require(is_dually_weakly_orthomodular(a), "dual weak orthomodularity")
    bot = require_bottom(L)
    A = d_arrow(a).op
    N, leq = L.names, L.leq_table
    parts = [law("x->0 = x'", L, "x", lambda x: A[x][bot] != c[x],
                 lambda x: f"{N[A[x][bot]]} != {N[c[x]]}")]
    if L.top is not None:
        top = L.top
        parts += [
            law("x->1 = 1", L, "x", lambda x: A[x][top] != top,
                lambda x: f"x->1 = {N[A[x][top]]}"),
            law("1->x = x", L, "x", lambda x: A[top][x] != x,
                lambda x: f"1->x = {N[A[top][x]]}"),
            law("x->y = 1 => x <= y", L, "xy",
                lambda x, y: A[x][y] == top and not leq[x][y],
                lambda x, y: f"{N[x]}->{N[y]} = 1 but {N[x]} ⋢ {N[y]}"),
        ]
    return combine("d-properties", parts)


def w_implication_properties(a: UnaryAlgebra) -> CheckReport:
    L, c = a.lattice, a.comp
    _require(is_weakly_orthomodular(a), "weak orthomodularity")
    top = require_top(L)
    A = w_arrow(a).op
    J, M, N, leq = L.join_table, L.meet_table, L.names, L.leq_table
    parts = [
        law("x->x = 1", L, "x", lambda x: A[x][x] != top, lambda x: f"x->x = {N[A[x][x]]}"),
        law("x->1 = 1", L, "x", lambda x: A[x][top] != top, lambda x: f"x->1 = {N[A[x][top]]}"),
        law("x\\/(x->y) = 1", L, "xy", lambda x, y: J[x][A[x][y]] != top,
            lambda x, y: f"x\\/(x->y) = {N[J[x][A[x][y]]]}"),
        law("x->(x/\\y) = x->y", L, "xy", lambda x, y: A[x][M[x][y]] != A[x][y],
            lambda x, y: f"{N[A[x][M[x][y]]]} != {N[A[x][y]]}"),
        law("x <= y => x->y = 1", L, "xy", lambda x, y: leq[x][y] and A[x][y] != top,
            lambda x, y: f"{N[x]} ≤ {N[y]} but x->y = {N[A[x][y]]}"),
    ]
    if L.bottom is not None:
        bot = L.bottom
        parts.append(law("x->0 = x'", L, "x", lambda x: A[x][bot] != c[x],
                         lambda x: f"{N[A[x][bot]]} != {N[c[x]]}"))
    return combine("w-properties", parts)
