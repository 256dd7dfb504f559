"""
Finite lattices given by their Hasse diagram.

Elements are identified by label; internally they are dense integer ids in
input order. All tables are precomputed at construction, so a
:class:`FiniteLattice` is immutable and cheap to query.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product

from .errors import (
    CapExceeded,
    DuplicateLabel,
    LatticeError,
    NotALattice,
    NotAntisymmetric,
    UnknownLabel,
)

# Largest lattice accepted by canonical_form (full permutation minimization).
CANONICAL_CAP = 7


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    names: tuple[str, ...]
    leq_table: tuple[tuple[bool, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    meet_table: tuple[tuple[int, ...], ...]
    bottom: int | None
    top: int | None
    parent_ids: tuple[int, ...] | None = None
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.names)})

    @classmethod
    def from_covers(cls, names, covers) -> FiniteLattice:
        """Build a lattice from labels and cover pairs ``(lower, upper)``."""
        names = tuple(str(n) for n in names)
        index = _index_labels(names)
        n = len(names)
        succ = [set() for _ in range(n)]
        for lo, hi in covers:
            for lab in (lo, hi):
                if lab not in index:
                    raise UnknownLabel(f"unknown label {lab!r} in covers")
            succ[index[lo]].add(index[hi])
        cycle = _find_cycle(succ)
        if cycle is not None:
            raise NotAntisymmetric([names[i] for i in cycle])
        leq = [[i == j for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in succ[i]:
                leq[i][j] = True
        for k in range(n):
            for i in range(n):
                if leq[i][k]:
                    row_k = leq[k]
                    row_i = leq[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        return cls.from_order(names, leq)

    @classmethod
    def from_order(cls, names, leq, parent_ids=None) -> FiniteLattice:
        """Build a lattice from a full (reflexive, transitive) order matrix."""
        names = tuple(str(n) for n in names)
        _index_labels(names)
        n = len(names)
        leq = tuple(tuple(bool(v) for v in row) for row in leq)
        for i in range(n):
            if not leq[i][i]:
                raise LatticeError(f"order is not reflexive at {names[i]}")
            for j in range(i + 1, n):
                if leq[i][j] and leq[j][i]:
                    raise NotAntisymmetric([names[i], names[j]])
        for i, j, k in product(range(n), repeat=3):
            if leq[i][j] and leq[j][k] and not leq[i][k]:
                raise LatticeError(f"order is not transitive at {names[i]},{names[j]},{names[k]}")
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                ub = [k for k in range(n) if leq[i][k] and leq[j][k]]
                least = [k for k in ub if all(leq[k][u] for u in ub)]
                if not least:
                    raise NotALattice((names[i], names[j]), "join")
                lb = [k for k in range(n) if leq[k][i] and leq[k][j]]
                greatest = [k for k in lb if all(leq[l][k] for l in lb)]
                if not greatest:
                    raise NotALattice((names[i], names[j]), "meet")
                join[i][j] = join[j][i] = least[0]
                meet[i][j] = meet[j][i] = greatest[0]
        bottoms = [k for k in range(n) if all(leq[k][j] for j in range(n))]
        tops = [k for k in range(n) if all(leq[j][k] for j in range(n))]
        return cls(
            names=names,
            leq_table=leq,
            join_table=tuple(map(tuple, join)),
            meet_table=tuple(map(tuple, meet)),
            bottom=bottoms[0] if bottoms else None,
            top=tops[0] if tops else None,
            parent_ids=None if parent_ids is None else tuple(parent_ids),
        )

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"FiniteLattice({list(self.names)}, covers={self.cover_labels()})"

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownLabel(f"unknown element {label!r}") from None

    def label(self, i: int) -> str:
        return self.names[i]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self.leq_table[a][b]

    def principal_filter(self, x: int) -> frozenset[int]:
        return frozenset(y for y in range(len(self)) if self.leq_table[x][y])

    def principal_ideal(self, x: int) -> frozenset[int]:
        return frozenset(y for y in range(len(self)) if self.leq_table[y][x])

    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
        n = len(self)
        leq = self.leq_table
        out = []
        for x in range(n):
            for y in range(n):
                if x == y or not leq[x][y]:
                    continue
                if not any(z != x and z != y and leq[x][z] and leq[z][y] for z in range(n)):
                    out.append((x, y))
        return out

    def cover_labels(self) -> list[tuple[str, str]]:
        return [(self.names[x], self.names[y]) for x, y in self.covers()]

    def relabel(self, names) -> FiniteLattice:
        """Same lattice with new labels (same ids)."""
        return FiniteLattice.from_order(names, self.leq_table, self.parent_ids)


def _index_labels(names):
    if not names:
        raise LatticeError("a lattice needs at least one element")
    index = {}
    for i, name in enumerate(names):
        if name in index:
            raise DuplicateLabel(f"duplicate label {name!r}")
        index[name] = i
    return index


def _find_cycle(succ):
    """Return a list of ids forming a directed cycle, or None."""
    n = len(succ)
    state = [0] * n  # 0 new, 1 on stack, 2 done
    stack = []

    def visit(v):
        state[v] = 1
        stack.append(v)
        for w in sorted(succ[v]):
            if state[w] == 1:
                return stack[stack.index(w):]
            if state[w] == 0:
                found = visit(w)
                if found is not None:
                    return found
        stack.pop()
        state[v] = 2
        return None

    for v in range(n):
        if state[v] == 0:
            found = visit(v)
            if found is not None:
                return found
    return None


def join(lat: FiniteLattice, a: int, b: int) -> int:
    return lat.join_table[a][b]


def meet(lat: FiniteLattice, a: int, b: int) -> int:
    return lat.meet_table[a][b]


def leq(lat: FiniteLattice, a: int, b: int) -> bool:
    return lat.leq_table[a][b]


def principal_filter(lat: FiniteLattice, x: int) -> frozenset[int]:
    return lat.principal_filter(x)


def principal_ideal(lat: FiniteLattice, x: int) -> frozenset[int]:
    return lat.principal_ideal(x)


def interval_sublattice(lat: FiniteLattice, x: int) -> FiniteLattice:
    """The sublattice on ``[x)``; ``parent_ids`` maps its ids back to ``lat``."""
    ids = sorted(lat.principal_filter(x))
    if lat.parent_ids is not None:
        parent = tuple(lat.parent_ids[i] for i in ids)
    else:
        parent = tuple(ids)
    order = [[lat.leq_table[i][j] for j in ids] for i in ids]
    return FiniteLattice.from_order([lat.names[i] for i in ids], order, parent)


def _canonical(lat: FiniteLattice, cap: int = CANONICAL_CAP):
    n = len(lat)
    if n > cap:
        raise CapExceeded(f"canonical form limited to {cap} elements, got {n}")
    leq = lat.leq_table
    inv = [(sum(leq[j][i] for j in range(n)), sum(leq[i][j] for j in range(n))) for i in range(n)]
    classes = sorted(set(inv))
    blocks = [[i for i in range(n) if inv[i] == c] for c in classes]
    best = None
    best_perm = None
    for choice in product(*(permutations(b) for b in blocks)):
        perm = [i for block in choice for i in block]  # new position -> old id
        rows = tuple(
            sum(1 << k for k in range(n) if leq[perm[p]][perm[k]]) for p in range(n)
        )
        if best is None or rows < best:
            best, best_perm = rows, perm
    return (n, tuple(sorted(inv)), best), best_perm


def canonical_form(lat: FiniteLattice, cap: int = CANONICAL_CAP) -> tuple:
    """Key equal for two lattices exactly when they are order-isomorphic."""
    return _canonical(lat, cap)[0]


def canonical_lattice(lat: FiniteLattice, cap: int = CANONICAL_CAP) -> FiniteLattice:
    """Isomorphic copy in canonical element order, labelled 0, a, b, ..., 1."""
    _, perm = _canonical(lat, cap)
    n = len(lat)
    order = [[lat.leq_table[perm[p]][perm[q]] for q in range(n)] for p in range(n)]
    return FiniteLattice.from_order(standard_labels(n), order)


def standard_labels(n: int) -> list[str]:
    if n == 1:
        return ["0"]
    return ["0"] + [chr(ord("a") + i) for i in range(n - 2)] + ["1"]
