"""Exact enumeration of constrained lattice walks through factored generating functions."""
from .laurent import LaurentPoly, X, Y, Z, ONE, ZERO
from .series import TSeries
from .monoid import (
    Step, StepSet, Path, GesselPair, SQUARE,
    AvoidHalfLine, LowerY, UpperY, UpperHalfPlane,
    classify, h_heads, path_factorize,
)
from .factorize import Factorization, unique_factorization
from .oracle import CountTable, enumerate_walks, factor_census

__all__ = [
    "LaurentPoly", "X", "Y", "Z", "ONE", "ZERO", "TSeries",
    "Step", "StepSet", "Path", "GesselPair", "SQUARE",
    "AvoidHalfLine", "LowerY", "UpperY", "UpperHalfPlane",
    "classify", "h_heads", "path_factorize",
    "Factorization", "unique_factorization",
    "CountTable", "enumerate_walks", "factor_census",
]
