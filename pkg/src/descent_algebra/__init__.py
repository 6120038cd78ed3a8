"""Exact arithmetic for coset-class descent algebras of symmetric groups."""

__version__ = "0.1.0"

from .class_algebra import (
    ClassLabel,
    ClassVector,
    Equivalence,
    class_basis,
    class_label,
    class_product,
    parabolic_class_product,
    well_definedness_report,
)
from .burnside import BurnsideElement, mackey_product, theta
from .cosets import (
    CosetRepSet,
    double_coset_reps,
    double_coset_reps_parabolic,
    min_coset_reps,
    min_coset_reps_parabolic,
)
from .solomon import (
    GroupAlgebraElement,
    convolve,
    solomon_decompose,
    structure_constant,
    structure_constant_parabolic,
    x_of,
    x_parabolic,
)
from .transfer import TransferContext, induce, restrict, restrict_alt
from .weyl import Partition, Permutation, Root, SimpleSubset

__all__ = [
    "BurnsideElement",
    "ClassLabel",
    "ClassVector",
    "CosetRepSet",
    "Equivalence",
    "GroupAlgebraElement",
    "Partition",
    "Permutation",
    "Root",
    "SimpleSubset",
    "TransferContext",
    "class_basis",
    "class_label",
    "class_product",
    "convolve",
    "double_coset_reps",
    "double_coset_reps_parabolic",
    "induce",
    "mackey_product",
    "min_coset_reps",
    "min_coset_reps_parabolic",
    "parabolic_class_product",
    "restrict",
    "restrict_alt",
    "solomon_decompose",
    "structure_constant",
    "structure_constant_parabolic",
    "theta",
    "well_definedness_report",
    "x_of",
    "x_parabolic",
]
