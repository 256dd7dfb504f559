"""Finite-model workbench for weakly and dually weakly orthomodular lattices."""

from .algebra import BinaryOpTable, CheckReport, UnaryAlgebra
from .errors import LatticeError
from .fixtures import fixture
from .lattice import FiniteLattice
from .measures import GeneralizedMeasure
from .terms import Structure, evaluate, holds, parse

__all__ = [
    "BinaryOpTable",
    "CheckReport",
    "FiniteLattice",
    "GeneralizedMeasure",
    "LatticeError",
    "Structure",
    "UnaryAlgebra",
    "evaluate",
    "fixture",
    "holds",
    "parse",
]
