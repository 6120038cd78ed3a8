"""
Conversions between core values and JSON-friendly primitives.

Subsets travel as sorted index arrays (or as the shell-friendly strings
``a1,a3`` / ``full`` / ``empty``), permutations as one-line image arrays, and
partitions as weakly decreasing integer arrays.  Every emitted form can be
parsed back into the originating value, which the tests exercise.
"""

from __future__ import annotations

from typing import Any

from .class_algebra import ClassLabel, ClassVector, Equivalence, class_label
from .errors import InvalidSubset
from .weyl import Permutation, SimpleSubset


def parse_subset(text: str, rank: int) -> SimpleSubset:
    """Parse ``full``, ``empty``, or a comma list like ``a1,a3`` (or ``1,3``)."""
    cleaned = text.strip().lower()
    if cleaned in ("full", "pi"):
        return SimpleSubset.full(rank)
    if cleaned in ("empty", "none", ""):
        return SimpleSubset.empty(rank)
    indices = []
    for token in cleaned.split(","):
        token = token.strip()
        body = token[1:] if token.startswith("a") else token
        if not body.isdigit():
            raise InvalidSubset(f"cannot parse simple-root name {token!r}")
        indices.append(int(body))
    return SimpleSubset.from_indices(indices, rank)


def subset_display(subset: SimpleSubset) -> str:
    if subset.is_full:
        return "full"
    if not subset.mask:
        return "empty"
    return ",".join(f"a{k}" for k in subset.indices)


def subset_indices(subset: SimpleSubset) -> list[int]:
    return list(subset.indices)


def permutation_images(p: Permutation) -> list[int]:
    return list(p.images)


def label_dict(label: ClassLabel) -> dict[str, Any]:
    return {
        "partition": list(label.partition.parts),
        "representative": subset_indices(label.representative),
    }


def label_display(label: ClassLabel) -> str:
    parts = "+".join(map(str, label.partition.parts))
    return f"{parts}@{subset_display(label.representative)}"


def vector_rows(vector) -> list[dict[str, Any]]:
    """Rows for a ClassVector or BurnsideElement, in basis order."""
    return [
        {
            "partition": list(label.partition.parts),
            "representative": subset_indices(label.representative),
            "coefficient": value,
        }
        for label, value in vector.sorted_terms()
    ]


def vector_display(vector) -> str:
    terms = [
        f"{value}*[{label_display(label)}]" for label, value in vector.sorted_terms()
    ]
    return " + ".join(terms) if terms else "0"


def label_from_dict(
    data: dict[str, Any], context: SimpleSubset, equivalence: Equivalence
) -> ClassLabel:
    subset = SimpleSubset.from_indices(data["representative"], context.rank)
    return class_label(subset, context, equivalence)


def vector_from_rows(
    rows: list[dict[str, Any]], context: SimpleSubset, equivalence: Equivalence
) -> ClassVector:
    return ClassVector.from_terms(
        context,
        equivalence,
        (
            (label_from_dict(row, context, equivalence), row["coefficient"])
            for row in rows
        ),
    )
