from .matrix import RatMatrix, SparseRatMatrix
from .series import TruncatedSeries, DimTable
from .lie import LyndonWord, BracketTree, FreeLieElement
from .nilpotent import BasisElement, GradedNilpotentLie, LieElementQ, PBWMonomialTable
from .koszul import SymBasis, KoszulSlice, HomologyDims
from .orbit import Functional, Subspace, PolarizationReport
from .weyl import WeylElement, InducedModuleBasis, InducedAction, WeylMapReport

__all__ = [
    "RatMatrix",
    "SparseRatMatrix",
    "TruncatedSeries",
    "DimTable",
    "LyndonWord",
    "BracketTree",
    "FreeLieElement",
    "BasisElement",
    "GradedNilpotentLie",
    "LieElementQ",
    "PBWMonomialTable",
    "SymBasis",
    "KoszulSlice",
    "HomologyDims",
    "Functional",
    "Subspace",
    "PolarizationReport",
    "WeylElement",
    "InducedModuleBasis",
    "InducedAction",
    "WeylMapReport",
]
