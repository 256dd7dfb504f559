"""Named example algebras: M3 with two unary tables, the 10-element lattice, chains, Boolean algebras."""

from __future__ import annotations

from .algebra import UnaryAlgebra
from .errors import UnknownFixture
from .lattice import FiniteLattice

M3_ELEMENTS = ["0", "a", "b", "c", "1"]
M3_COVERS = [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")]

FIG2_ELEMENTS = ["0", "a", "b", "c", "d", "e", "f", "g", "h", "1"]
FIG2_COVERS = [
    ("0", "a"), ("0", "b"), ("0", "c"), ("0", "d"),
    ("a", "e"), ("a", "f"),
    ("b", "e"), ("b", "g"),
    ("c", "e"), ("c", "h"),
    ("d", "f"), ("d", "g"), ("d", "h"),
    ("e", "1"), ("f", "1"), ("g", "1"), ("h", "1"),
]
FIG2_COMP = {"0": "1", "a": "g", "b": "h", "c": "f", "d": "e",
             "e": "d", "f": "c", "g": "a", "h": "b", "1": "0"}


def m3() -> FiniteLattice:
    return FiniteLattice.from_covers(M3_ELEMENTS, M3_COVERS)


def chain(n: int) -> FiniteLattice:
    if n < 1:
        raise ValueError("a chain needs at least one element")
    names = ["0"] if n == 1 else ["0"] + [f"m{i}" for i in range(1, n - 1)] + ["1"]
    return FiniteLattice.from_covers(names, list(zip(names, names[1:])))


def _swap_endpoints(lat: FiniteLattice) -> UnaryAlgebra:
    comp = list(range(len(lat)))
    comp[lat.bottom], comp[lat.top] = lat.top, lat.bottom
    return UnaryAlgebra(lat, tuple(comp))


def boolean(atoms: str) -> UnaryAlgebra:
    """Subsets of ``atoms`` with set complement; labels 0, a, ab, ..., 1."""
    k = len(atoms)
    masks = sorted(range(2**k), key=lambda m: (bin(m).count("1"), [-(m >> i & 1) for i in range(k)]))
    full = 2**k - 1

    def name(m):
        if m == 0:
            return "0"
        if m == full:
            return "1"
        return "".join(atoms[i] for i in range(k) if m >> i & 1)

    names = [name(m) for m in masks]
    covers = [(name(m), name(m | 1 << i)) for m in masks for i in range(k) if not m >> i & 1]
    lat = FiniteLattice.from_covers(names, covers)
    return UnaryAlgebra.from_labels(lat, {name(m): name(full ^ m) for m in masks})


def _build(name):
    if name == "M3":
        return m3()
    if name == "M3A":
        return UnaryAlgebra.from_labels(m3(), {"0": "1", "a": "b", "b": "c", "c": "a", "1": "0"})
    if name == "M3B":
        return UnaryAlgebra.from_labels(m3(), {"0": "1", "a": "b", "b": "c", "c": "b", "1": "0"})
    if name == "FIG2":
        return UnaryAlgebra.from_labels(FiniteLattice.from_covers(FIG2_ELEMENTS, FIG2_COVERS), FIG2_COMP)
    if name in ("C2", "C3", "C4"):
        return _swap_endpoints(chain(int(name[1])))
    if name == "B4":
        return boolean("ab")
    if name == "B8":
        return boolean("abc")
    raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(NAMES)}")


NAMES = ("M3", "M3A", "M3B", "FIG2", "C2", "C3", "C4", "B4", "B8")


def fixture(name: str):
    """UnaryAlgebra for the named example (a bare FiniteLattice for ``M3``)."""
    return _build(name)
