"""
Exhaustive enumeration: unary tables on a fixed lattice, filtered by
property constraints, and small lattices up to isomorphism.
"""

from __future__ import annotations

from itertools import product

from . import algebra as alg
from .algebra import UnaryAlgebra
from .errors import CapExceeded, LatticeError, NotALattice
from .lattice import CANONICAL_CAP, FiniteLattice, canonical_form, canonical_lattice

WORK_CAP = 10**7

# Cheapest checks first; the filter short-circuits on the first mismatch.
CONSTRAINT_ORDER = (
    "complementation",
    "involution",
    "dnl",
    "wdnl",
    "antitone",
    "demorgan",
    "orthocomplementation",
    "wom",
    "dwom",
    "orthomodular",
)

ALIASES = {
    "comp": "complementation",
    "ortho": "orthocomplementation",
    "om": "orthomodular",
}


def normalize_constraints(want) -> dict[str, bool]:
    if want is None:
        return {}
    if isinstance(want, str):
        want = parse_constraints(want)
    out = {}
    for name, value in dict(want).items():
        key = ALIASES.get(name, name)
        if key not in CONSTRAINT_ORDER:
            raise LatticeError(f"unknown property {name!r}")
        out[key] = bool(value)
    return out


def parse_constraints(text: str) -> dict[str, bool]:
    """``"wom,+dwom,-dnl"`` -> ``{"wom": True, "dwom": True, "dnl": False}``."""
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        value = not item.startswith("-")
        out[item.lstrip("+-")] = value
    return normalize_constraints(out)


def satisfies(a: UnaryAlgebra, want) -> bool:
    return _matches(a, normalize_constraints(want))


def _matches(a, want):
    for name in CONSTRAINT_ORDER:
        if name in want and alg.PREDICATES[name](a).holds != want[name]:
            return False
    return True


def _candidates(lattice: FiniteLattice, want) -> list[list[int]]:
    """Allowed images of each element; required properties that force
    ``x \\/ x' = 1`` or ``x /\\ x' = 0`` prune the table space up front."""
    n = len(lattice)
    J, M = lattice.join_table, lattice.meet_table
    need_top = want.get("wom") or want.get("complementation") or want.get("orthocomplementation") \
        or want.get("orthomodular")
    need_bottom = want.get("dwom") or want.get("complementation") or want.get("orthocomplementation") \
        or want.get("orthomodular")
    out = []
    for x in range(n):
        row = range(n)
        if need_top:
            row = [y for y in row if J[x][y] == lattice.top]
        if need_bottom:
            row = [y for y in row if M[x][y] == lattice.bottom]
        out.append(list(row))
    return out


def iter_unary(lattice: FiniteLattice, want=None, cap: int = WORK_CAP):
    """Lazily yield the unary tables on ``lattice`` meeting ``want``, lexicographically."""
    want = normalize_constraints(want)
    n = len(lattice)
    if n**n > cap:
        raise CapExceeded(f"{n}^{n} candidate tables exceed the work cap {cap}")
    for comp in product(*_candidates(lattice, want)):
        a = UnaryAlgebra(lattice, comp)
        if _matches(a, want):
            yield a


def enumerate_unary(lattice: FiniteLattice, want=None, cap: int = WORK_CAP) -> list[UnaryAlgebra]:
    """All unary tables on ``lattice`` meeting ``want``, in lexicographic table order."""
    return list(iter_unary(lattice, want, cap))


def _naturally_labelled_posets(k: int):
    """Strict down-sets for posets on 0..k-1 where i < j in the order implies i < j."""
    posets = [()]
    for j in range(k):
        grown = []
        for down in posets:
            for bits in product((False, True), repeat=j):
                chosen = {i for i in range(j) if bits[i]}
                if all(down[i] <= chosen for i in chosen):
                    grown.append(down + (frozenset(chosen),))
        posets = grown
    return posets


def enumerate_lattices(n: int) -> list[FiniteLattice]:
    """All lattices with ``n`` elements up to isomorphism, sorted by canonical key."""
    if n < 1:
        return []
    if n > CANONICAL_CAP:
        raise CapExceeded(f"lattice enumeration limited to {CANONICAL_CAP} elements")
    if n == 1:
        return [FiniteLattice.from_order(["0"], [[True]])]
    k = n - 2
    found = {}
    for down in _naturally_labelled_posets(k):
        # ids: 0 bottom, 1..k middle, n-1 top
        leq = [[False] * n for _ in range(n)]
        for i in range(n):
            leq[0][i] = True
            leq[i][n - 1] = True
            leq[i][i] = True
        for j, below in enumerate(down):
            for i in below:
                leq[i + 1][j + 1] = True
        try:
            lat = FiniteLattice.from_order([str(i) for i in range(n)], leq)
        except NotALattice:
            continue
        key = canonical_form(lat)
        if key not in found:
            found[key] = canonical_lattice(lat)
    return [found[key] for key in sorted(found)]


def find_example(constraints, max_n: int = 5, pool=None):
    """First algebra meeting ``constraints``.

    Without ``pool`` the search runs over all lattices of size 1..max_n (by
    canonical key) and all unary tables (lexicographic). With ``pool`` only
    the given algebras of size at most ``max_n`` are scanned, in order.
    Returns ``(lattice, algebra)`` or None.
    """
    want = normalize_constraints(constraints)
    if pool is not None:
        for a in pool:
            if len(a) <= max_n and _matches(a, want):
                return a.lattice, a
        return None
    if max_n > CANONICAL_CAP:
        raise CapExceeded(f"search limited to {CANONICAL_CAP} elements")
    for n in range(1, max_n + 1):
        for lattice in enumerate_lattices(n):
            for a in iter_unary(lattice, want):
                return lattice, a
    return None


def all_lattices(max_n: int) -> list[FiniteLattice]:
    return [lat for n in range(1, max_n + 1) for lat in enumerate_lattices(n)]
