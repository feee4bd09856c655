"""Weyl-group combinatorics of algebraic zip data.

The package builds finite Weyl groups with their root systems, computes
minimal coset representatives and Howlett decompositions, and implements
the combinatorics of zip data: the piece parametrization, the closure
partial order, canonical representatives of the twisted equivalence
relation, the length-preserving duality between the two parameter sets,
abstract zip data on finite permutation groups, the non-connected
extension, and zip data built from isogeny-style input.
"""

from .abstract import AbstractZipDatum, FiniteGroup
from .coxeter import CoxeterAutomorphism, CoxeterGroup, Element, build_group
from .cosets import (
    HowlettDecomposition,
    howlett_decompose,
    kilmoyer_subset,
    min_double_coset_reps,
    min_left_coset_reps,
    min_right_coset_reps,
    refined_length_count,
)
from .extended import ExtendedElement, ExtendedZipDatum
from .isogeny import FrobeniusReport, IsogenyDatum, frobenius_report, zip_datum_from_isogeny
from .zipdata import ClosurePoset, Piece, ZipDatum

__version__ = "0.1.0"

__all__ = [
    "AbstractZipDatum",
    "ClosurePoset",
    "CoxeterAutomorphism",
    "CoxeterGroup",
    "Element",
    "ExtendedElement",
    "ExtendedZipDatum",
    "FiniteGroup",
    "FrobeniusReport",
    "HowlettDecomposition",
    "IsogenyDatum",
    "Piece",
    "ZipDatum",
    "build_group",
    "frobenius_report",
    "howlett_decompose",
    "kilmoyer_subset",
    "min_double_coset_reps",
    "min_left_coset_reps",
    "min_right_coset_reps",
    "refined_length_count",
    "zip_datum_from_isogeny",
]
