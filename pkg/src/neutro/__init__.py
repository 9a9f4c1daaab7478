"""Neutrosophic truth values, literal logic, indeterminate numbers and an expression language.

Submodules:

* :mod:`neutro.tif` - (t, i, f) triples and their operator families
* :mod:`neutro.literal` - literal logic over T, I, F and refined literals
* :mod:`neutro.indeterminacy` - numbers a + bI and refined a + sum bk Ik
* :mod:`neutro.quadruple` - quadruple numbers a + bT + cI + dF
* :mod:`neutro.hyper` - hypercomplex, dual, quaternion and octonion families
* :mod:`neutro.graph` - indeterminate adjacency matrices and (t, i, f) paths
* :mod:`neutro.expr` - parser, evaluator and command line
"""

from .errors import (
    AlphabetError,
    FamilyMismatch,
    IndeterminateLawError,
    IntervalOperandError,
    MissingEdgeError,
    NeutroError,
    SuborderViolation,
    UndefinedError,
)
from .indeterminacy import NeutroNumber, RefinedNeutroNumber
from .literal import Lit, PrevalenceOrder
from .quadruple import QuadNumber, RefinedQuadNumber
from .tif import TifTriple

__version__ = "0.1.0"

__all__ = [
    "AlphabetError",
    "FamilyMismatch",
    "IndeterminateLawError",
    "IntervalOperandError",
    "Lit",
    "MissingEdgeError",
    "NeutroError",
    "NeutroNumber",
    "PrevalenceOrder",
    "QuadNumber",
    "RefinedNeutroNumber",
    "RefinedQuadNumber",
    "SuborderViolation",
    "TifTriple",
    "UndefinedError",
]
