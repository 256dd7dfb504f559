"""
Generalized measures ``s: L -> [0, 1]`` with exact rational values, the
classes S1 and S2, and the measure-theoretic characterization of (dual)
weak orthomodularity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    CheckReport,
    UnaryAlgebra,
    combine,
    failed,
    is_complementation,
    is_dually_weakly_orthomodular,
    is_weakly_orthomodular,
    law,
    passed,
    require_top,
)
from .errors import LatticeError, PreconditionViolated
from .lattice import FiniteLattice

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GeneralizedMeasure:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(Fraction(v) for v in self.values)
        for v in values:
            if not 0 <= v <= 1:
                raise LatticeError(f"measure value {v} outside [0, 1]")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_labels(cls, lattice: FiniteLattice, mapping) -> GeneralizedMeasure:
        values = [None] * len(lattice)
        for label, v in dict(mapping).items():
            values[lattice.index(label)] = Fraction(v)
        if None in values:
            missing = [lattice.names[i] for i, v in enumerate(values) if v is None]
            raise LatticeError(f"measure is not total, missing {missing}")
        return cls(tuple(values))

    @classmethod
    def constant(cls, lattice: FiniteLattice, value) -> GeneralizedMeasure:
        return cls((Fraction(value),) * len(lattice))

    def __call__(self, x: int) -> Fraction:
        return self.values[x]

    def __len__(self):
        return len(self.values)

    def preimage(self, value) -> frozenset[int]:
        value = Fraction(value)
        return frozenset(i for i, v in enumerate(self.values) if v == value)

    def label_map(self, lattice: FiniteLattice) -> dict[str, Fraction]:
        return {lattice.names[i]: v for i, v in enumerate(self.values)}


def random_measure(lattice: FiniteLattice, rng: random.Random, denominator: int = 12):
    return GeneralizedMeasure(
        tuple(Fraction(rng.randint(0, denominator), denominator) for _ in range(len(lattice)))
    )


def in_S1(a: UnaryAlgebra, s: GeneralizedMeasure) -> CheckReport:
    """``s(x \\/ (y /\\ x')) = s(y)`` whenever ``x <= y``."""
    L, c = a.lattice, a.comp
    J, M, leq = L.join_table, L.meet_table, L.leq_table
    v = s.values
    return law(
        "S1", L, "xy",
        lambda x, y: leq[x][y] and v[J[x][M[y][c[x]]]] != v[y],
        lambda x, y: f"s(x\\/(y/\\x')) = {v[J[x][M[y][c[x]]]]} != {v[y]} = s(y)",
    )


def in_S2(a: UnaryAlgebra, s: GeneralizedMeasure) -> CheckReport:
    """``s(y /\\ (x \\/ y')) = s(x)`` whenever ``x <= y``."""
    L, c = a.lattice, a.comp
    J, M, leq = L.join_table, L.meet_table, L.leq_table
    v = s.values
    return law(
        "S2", L, "xy",
        lambda x, y: leq[x][y] and v[M[y][J[x][c[y]]]] != v[x],
        lambda x, y: f"s(y/\\(x\\/y')) = {v[M[y][J[x][c[y]]]]} != {v[x]} = s(x)",
    )


def witness_measure_filter(a: UnaryAlgebra, x: int) -> GeneralizedMeasure:
    """1 on ``[x)``, 1/2 elsewhere."""
    up = a.lattice.principal_filter(x)
    return GeneralizedMeasure(tuple(Fraction(1) if y in up else HALF for y in range(len(a))))


def witness_measure_ideal(a: UnaryAlgebra, x: int) -> GeneralizedMeasure:
    """0 on ``(x]``, 1/2 elsewhere."""
    down = a.lattice.principal_ideal(x)
    return GeneralizedMeasure(tuple(Fraction(0) if y in down else HALF for y in range(len(a))))


def _s1_side(a: UnaryAlgebra) -> dict:
    """Decide whether every non-bottom x has some s in S1 with s^-1(1) = [x)."""
    L, c = a.lattice, a.comp
    J, M, leq, N = L.join_table, L.meet_table, L.leq_table, L.names
    n = len(L)
    eligible = [x for x in range(n) if x != L.bottom]
    failures = []
    for x in eligible:
        s = witness_measure_filter(a, x)
        if not (in_S1(a, s).holds and s.preimage(1) == L.principal_filter(x)):
            failures.append(x)
    # A violating pair p <= q with p \/ (q /\ p') != q rules out x = q: any
    # s in S1 gives s(p \/ (q /\ p')) = s(q) = 1 although p \/ (q /\ p') < q.
    certificate = None
    for p in range(n):
        for q in range(n):
            if leq[p][q]:
                r = J[p][M[q][c[p]]]
                if r != q:
                    assert leq[r][q] and q != L.bottom, "malformed certificate"
                    certificate = {"a": N[p], "b": N[q], "a\\/(b/\\a')": N[r]}
                    break
        if certificate:
            break
    return {"witness_failures": [N[x] for x in failures], "certificate": certificate,
            "exists": not failures and certificate is None,
            "decided": bool(failures) == (certificate is not None)}


def _s2_side(a: UnaryAlgebra) -> dict:
    """Decide whether every non-top x has some s in S2 with s^-1(0) = (x]."""
    L, c = a.lattice, a.comp
    J, M, leq, N = L.join_table, L.meet_table, L.leq_table, L.names
    n = len(L)
    eligible = [x for x in range(n) if x != L.top]
    failures = []
    for x in eligible:
        s = witness_measure_ideal(a, x)
        if not (in_S2(a, s).holds and s.preimage(0) == L.principal_ideal(x)):
            failures.append(x)
    # p <= q with q /\ (p \/ q') != p rules out x = p: any s in S2 gives
    # s(q /\ (p \/ q')) = s(p) = 0 although q /\ (p \/ q') > p.
    certificate = None
    for p in range(n):
        for q in range(n):
            if leq[p][q]:
                r = M[q][J[p][c[q]]]
                if r != p:
                    assert leq[p][r] and p != L.top, "malformed certificate"
                    certificate = {"a": N[p], "b": N[q], "b/\\(a\\/b')": N[r]}
                    break
        if certificate:
            break
    return {"witness_failures": [N[x] for x in failures], "certificate": certificate,
            "exists": not failures and certificate is None,
            "decided": bool(failures) == (certificate is not None)}


def verify_measure_theorem(a: UnaryAlgebra) -> CheckReport:
    """Both measure criteria decided exactly and compared with WOM / dWOM."""
    wom = is_weakly_orthomodular(a)
    dwom = is_dually_weakly_orthomodular(a)
    s1, s2 = _s1_side(a), _s2_side(a)
    info = {
        "wom": wom.holds,
        "s1_exists": s1["exists"],
        "s1_certificate": s1["certificate"],
        "dwom": dwom.holds,
        "s2_exists": s2["exists"],
        "s2_certificate": s2["certificate"],
    }
    parts = []
    for name, prop, side in (("S1-vs-wom", wom, s1), ("S2-vs-dwom", dwom, s2)):
        if side["decided"] and side["exists"] == prop.holds:
            parts.append(passed(name))
        else:
            witness = prop.witness or {}
            parts.append(failed(name, witness,
                                f"measure side {side} disagrees with predicate {prop.holds}"))
    return combine("measures", parts, info)


def check_conditions(a: UnaryAlgebra, s: GeneralizedMeasure) -> CheckReport:
    """Conditions (i)-(iv); sums in (ii) are exact and never clamped."""
    L, c = a.lattice, a.comp
    top = require_top(L)
    J, M, leq, N = L.join_table, L.meet_table, L.leq_table, L.names
    v = s.values
    one = Fraction(1)
    cond_i = (passed("i") if v[top] == one
              else failed("i", {"x": N[top]}, f"s(1) = {v[top]}"))
    cond_ii = law(
        "ii", L, "xy",
        lambda x, y: leq[x][y] and v[J[x][c[y]]] != v[x] + v[c[y]],
        lambda x, y: f"s(x\\/y') = {v[J[x][c[y]]]} != {v[x] + v[c[y]]} = s(x)+s(y')",
    )
    cond_iii = law(
        "iii", L, "xy",
        lambda x, y: leq[x][y] and v[J[J[x][c[y]]][M[c[x]][y]]] != one,
        lambda x, y: f"s((x\\/y')\\/(x'/\\y)) = {v[J[J[x][c[y]]][M[c[x]][y]]]}",
    )
    cond_iv = law(
        "iv", L, "xy",
        lambda x, y: leq[x][y] and v[J[x][c[M[y][J[x][c[y]]]]]] != one,
        lambda x, y: f"s(x\\/(y/\\(x\\/y'))') = {v[J[x][c[M[y][J[x][c[y]]]]]]}",
    )
    return combine("conditions", [cond_i, cond_ii, cond_iii, cond_iv])


def verify_conditions_proposition(a: UnaryAlgebra, s: GeneralizedMeasure) -> CheckReport:
    """For a complementation: (i)+(ii)+(iii) give S1 and (i)+(ii)+(iv) give S2."""
    comp = is_complementation(a)
    if not comp.holds:
        raise PreconditionViolated("not a complementation: " + comp.detail, comp)
    conds = check_conditions(a, s)
    flags = {p.name: p.holds for p in conds.parts}
    base = flags["i"] and flags["ii"]
    s1, s2 = in_S1(a, s), in_S2(a, s)
    info = {**{f"cond_{k}": v for k, v in flags.items()}, "in_S1": s1.holds, "in_S2": s2.holds,
            "s1_hypotheses": base and flags["iii"], "s2_hypotheses": base and flags["iv"]}
    parts = []
    if base:
        v, c = s.values, a.comp
        parts.append(law("s(x') = 1 - s(x)", a.lattice, "x",
                         lambda x: v[c[x]] != 1 - v[x],
                         lambda x: f"s(x') = {v[c[x]]}, s(x) = {v[x]}"))
    if base and flags["iii"]:
        parts.append(s1 if s1.holds else failed("=> S1", s1.witness, s1.detail))
    if base and flags["iv"]:
        parts.append(s2 if s2.holds else failed("=> S2", s2.witness, s2.detail))
    return combine("conditions-proposition", parts, info)
