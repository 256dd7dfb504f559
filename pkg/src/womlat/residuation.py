"""
The product ``x * y = (x \\/ y') /\\ y`` paired with the W-implication, and
left residuated l-groupoids built from (and decomposed back into) lattices
with a weakly and dually weakly orthomodular involutive ``'``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import (
    BinaryOpTable,
    CheckReport,
    UnaryAlgebra,
    combine,
    is_dually_weakly_orthomodular,
    is_weakly_orthomodular,
    law,
    require_bounds,
    satisfies_double_negation,
    satisfies_weak_double_negation,
)
from .errors import InvariantFailed, PreconditionViolated
from .implication import _require, op_table, w_arrow
from .lattice import FiniteLattice


def sasaki_product(a: UnaryAlgebra) -> BinaryOpTable:
    """``(x \\/ y') /\\ y``, the Sasaki projection of x onto y."""
    J, M, c = a.lattice.join_table, a.lattice.meet_table, a.comp
    return BinaryOpTable.from_function(a.lattice, lambda x, y: M[J[x][c[y]]][y], "product")


@dataclass(frozen=True, eq=False)
class LGroupoid:
    lattice: FiniteLattice
    prod: BinaryOpTable
    arrow: BinaryOpTable

    @cached_property
    def associative(self) -> bool:
        """Informational only; nothing in the construction promises it."""
        P = self.prod.op
        n = len(self.lattice)
        return all(
            P[P[x][y]][z] == P[x][P[y][z]] for x in range(n) for y in range(n) for z in range(n)
        )


def check_half_adjunction(a: UnaryAlgebra) -> CheckReport:
    """On a dWOM algebra: ``a <= b -> c`` implies ``a * b <= c``."""
    _require(is_dually_weakly_orthomodular(a), "dual weak orthomodularity")
    L = a.lattice
    P, A = sasaki_product(a).op, w_arrow(a).op
    leq, N = L.leq_table, L.names
    return law(
        "half-adjunction",
        L,
        "abc",
        lambda x, y, z: leq[x][A[y][z]] and not leq[P[x][y]][z],
        lambda x, y, z: f"a ≤ b->c = {N[A[y][z]]} but a*b = {N[P[x][y]]} ⋢ c",
    )


def check_weak_dnl_residuation(a: UnaryAlgebra) -> CheckReport:
    """``(x->y)*x = x/\\y`` and ``a*b'' <= c`` iff ``a <= b''->c``."""
    _require(is_weakly_orthomodular(a), "weak orthomodularity")
    _require(is_dually_weakly_orthomodular(a), "dual weak orthomodularity")
    _require(satisfies_weak_double_negation(a), "((x')')' = x'")
    L, c = a.lattice, a.comp
    P, A = sasaki_product(a).op, w_arrow(a).op
    M, leq, N = L.meet_table, L.leq_table, L.names
    return combine(
        "weak-dnl-residuation",
        [
            law("(x->y)*x = x/\\y", L, "xy",
                lambda x, y: P[A[x][y]][x] != M[x][y],
                lambda x, y: f"{N[P[A[x][y]][x]]} != {N[M[x][y]]}"),
            law("a*b'' <= c <=> a <= b''->c", L, "abc",
                lambda x, y, z: leq[P[x][c[c[y]]]][z] != leq[x][A[c[c[y]]][z]],
                lambda x, y, z: f"a*b'' = {N[P[x][c[c[y]]]]}, b''->c = {N[A[c[c[y]]][z]]}"),
        ],
    )


def is_left_residuated_lgroupoid(lattice: FiniteLattice, prod, arrow) -> CheckReport:
    """Unit laws for ``*`` and ``x*y <= z`` iff ``x <= y->z``, direction reported."""
    require_bounds(lattice)
    L = lattice
    P, A = op_table(prod), op_table(arrow)
    leq, N, top = L.leq_table, L.names, L.top
    return combine(
        "left-residuated-l-groupoid",
        [
            law("x*1 = x", L, "x", lambda x: P[x][top] != x, lambda x: f"x*1 = {N[P[x][top]]}"),
            law("1*x = x", L, "x", lambda x: P[top][x] != x, lambda x: f"1*x = {N[P[top][x]]}"),
            law("x*y <= z => x <= y->z", L, "xyz",
                lambda x, y, z: leq[P[x][y]][z] and not leq[x][A[y][z]],
                lambda x, y, z: f"x*y = {N[P[x][y]]} ≤ z but x ⋢ y->z = {N[A[y][z]]}"),
            law("x <= y->z => x*y <= z", L, "xyz",
                lambda x, y, z: leq[x][A[y][z]] and not leq[P[x][y]][z],
                lambda x, y, z: f"x ≤ y->z = {N[A[y][z]]} but x*y = {N[P[x][y]]} ⋢ z"),
        ],
    )


def _theorem_extras(a: UnaryAlgebra, prod, arrow) -> CheckReport:
    L, c = a.lattice, a.comp
    P, A = op_table(prod), op_table(arrow)
    M, leq, N = L.meet_table, L.leq_table, L.names
    return combine(
        "lgroupoid-extras",
        [
            law("(x->y)*x = x/\\y", L, "xy",
                lambda x, y: P[A[x][y]][x] != M[x][y],
                lambda x, y: f"{N[P[A[x][y]][x]]} != {N[M[x][y]]}"),
            law("a*b = a <=> a <= b", L, "ab",
                lambda x, y: (P[x][y] == x) != leq[x][y],
                lambda x, y: f"a*b = {N[P[x][y]]}"),
            law("a->b = b <=> a' <= b", L, "ab",
                lambda x, y: (A[x][y] == y) != leq[c[x]][y],
                lambda x, y: f"a->b = {N[A[x][y]]}, a' = {N[c[x]]}"),
        ],
    )


def build_lgroupoid(a: UnaryAlgebra) -> LGroupoid:
    """Left residuated l-groupoid of a WOM + dWOM + DNL algebra, fully re-verified."""
    _require(is_weakly_orthomodular(a), "weak orthomodularity")
    _require(is_dually_weakly_orthomodular(a), "dual weak orthomodularity")
    _require(satisfies_double_negation(a), "the double negation law")
    require_bounds(a.lattice)
    prod, arrow = sasaki_product(a), w_arrow(a)
    for report in (
        is_left_residuated_lgroupoid(a.lattice, prod, arrow),
        _theorem_extras(a, prod, arrow),
    ):
        if not report.holds:
            raise InvariantFailed(f"{report.name}: {report.detail}", report)
    return LGroupoid(a.lattice, prod, arrow)


def verify_converse(g: LGroupoid) -> CheckReport:
    """Classify an l-groupoid: do the three identities hold, and is ``x -> 0`` WOM+dWOM+DNL?"""
    L = g.lattice
    base = is_left_residuated_lgroupoid(L, g.prod, g.arrow)
    if not base.holds:
        raise PreconditionViolated("not a left residuated l-groupoid: " + base.detail, base)
    bot, _ = require_bounds(L)
    P, A = g.prod.op, g.arrow.op
    J, M, N = L.join_table, L.meet_table, L.names
    identities = combine(
        "identities",
        [
            law("(x->0)->0 = x", L, "x", lambda x: A[A[x][bot]][bot] != x,
                lambda x: f"{N[A[A[x][bot]][bot]]} != {N[x]}"),
            law("x*y = (x\\/(y->0))/\\y", L, "xy",
                lambda x, y: P[x][y] != M[J[x][A[y][bot]]][y],
                lambda x, y: f"{N[P[x][y]]} != {N[M[J[x][A[y][bot]]][y]]}"),
            law("x->y = (x->0)\\/(x/\\y)", L, "xy",
                lambda x, y: A[x][y] != J[A[x][bot]][M[x][y]],
                lambda x, y: f"{N[A[x][y]]} != {N[J[A[x][bot]][M[x][y]]]}"),
        ],
    )
    comp = UnaryAlgebra(L, tuple(A[x][bot] for x in range(len(L))))
    info = {
        "identities": identities.holds,
        "derived_comp": comp.label_map(),
        "associative": g.associative,
    }
    if not identities.holds:
        return CheckReport("converse", False, identities.witness, identities.detail,
                           (identities,), info)
    classification = combine(
        "classification",
        [is_weakly_orthomodular(comp), is_dually_weakly_orthomodular(comp),
         satisfies_double_negation(comp)],
    )
    info.update({p.name: p.holds for p in classification.parts})
    return combine("converse", [identities, classification], info)


def derived_complement(g: LGroupoid) -> UnaryAlgebra:
    bot = g.lattice.bottom
    return UnaryAlgebra(g.lattice, tuple(g.arrow.op[x][bot] for x in range(len(g.lattice))))


def verify_residuation(a: UnaryAlgebra) -> CheckReport:
    """Build the l-groupoid and report adjointness, unit laws and the extra identities."""
    g = build_lgroupoid(a)
    return combine(
        "residuation",
        [
            is_left_residuated_lgroupoid(g.lattice, g.prod, g.arrow),
            _theorem_extras(a, g.prod, g.arrow),
        ],
        {"associative": g.associative},
    )
