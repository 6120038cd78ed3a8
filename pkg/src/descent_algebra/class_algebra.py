"""
The coset-class algebra: coset sums collapsed along conjugacy of their subsets.

Two subsets of the simple system are identified when some group element maps
one onto the other as root sets.  In type A the full-group orbits are labelled
by the induced partition of ``rank+1``, so each class gets a partition label
plus a canonical representative (the member of smallest mask).  The same
construction inside a parabolic subgroup ``W_J`` spans classes of the relative
coset sums ``x_K^J`` with ``K ⊆ J``.

Which conjugacy should identify subsets of ``J`` is genuinely delicate: the
relation can be taken with the FULL group (the default here) or with ``W_J``
itself (PARABOLIC).  The two disagree as soon as ``J`` has interchangeable
components, and under the FULL relation the collapsed product need not be
independent of the chosen representatives.  Nothing in this module guesses:
both relations are implemented, products always use the canonical
representative, and :func:`well_definedness_report` sweeps every representative
pair so any dependence is surfaced as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import ContextMismatch, InvalidSubset
from .solomon import (
    _check_coeff,
    parabolic_structure_table,
    structure_table,
)
from .weyl import Partition, SimpleSubset, class_of, subsets_of


class Equivalence(str, Enum):
    """Which group conjugates subsets of a context into one class."""

    FULL = "full"
    PARABOLIC = "parabolic"


def local_class_key(subset: SimpleSubset, context: SimpleSubset) -> tuple[tuple[int, ...], ...]:
    """
    Orbit key of ``subset ⊆ context`` under ``W_context``: one partition per
    connected component of the context, induced by the trace of the subset.
    """
    keys = []
    for start, size in context.components():
        runs: list[int] = []
        run = 0
        for k in range(start, start + size):
            if k in subset:
                run += 1
            elif run:
                runs.append(run + 1)
                run = 0
        if run:
            runs.append(run + 1)
        parts = sorted(runs, reverse=True)
        parts += [1] * (size + 1 - sum(parts))
        keys.append(tuple(parts))
    return tuple(keys)


def _class_key(subset: SimpleSubset, context: SimpleSubset, equivalence: Equivalence):
    if equivalence is Equivalence.FULL:
        return class_of(subset).parts
    return local_class_key(subset, context)


@dataclass(frozen=True)
class ClassLabel:
    """Canonical name of one class of subsets of ``context``."""

    context: SimpleSubset
    representative: SimpleSubset
    partition: Partition
    equivalence: Equivalence

    def sort_key(self) -> tuple:
        return (
            tuple(-part for part in self.partition.parts),
            self.representative.mask,
        )

    def __repr__(self) -> str:
        return f"ClassLabel({self.partition!r}, rep={self.representative!r})"


@lru_cache(maxsize=None)
def class_decomposition(
    context: SimpleSubset, equivalence: Equivalence
) -> tuple[tuple[ClassLabel, tuple[SimpleSubset, ...]], ...]:
    """All classes of subsets of ``context`` with their members, basis-ordered."""
    groups: dict[object, list[SimpleSubset]] = {}
    for subset in subsets_of(context):
        groups.setdefault(_class_key(subset, context, equivalence), []).append(subset)
    decorated = []
    for members in groups.values():
        representative = min(members, key=lambda s: s.mask)
        label = ClassLabel(context, representative, class_of(representative), equivalence)
        decorated.append((label, tuple(members)))
    decorated.sort(key=lambda pair: pair[0].sort_key())
    return tuple(decorated)


def class_basis(
    context: SimpleSubset, equivalence: Equivalence = Equivalence.FULL
) -> list[ClassLabel]:
    """One label per class, ordered by (partition, reverse-lex; then mask)."""
    return [label for label, _ in class_decomposition(context, equivalence)]


def class_members(label: ClassLabel) -> tuple[SimpleSubset, ...]:
    for candidate, members in class_decomposition(label.context, label.equivalence):
        if candidate == label:
            return members
    raise InvalidSubset(f"{label} is not a class of its context")


@lru_cache(maxsize=None)
def _label_index(
    context: SimpleSubset, equivalence: Equivalence
) -> Mapping[int, ClassLabel]:
    return {
        member.mask: label
        for label, members in class_decomposition(context, equivalence)
        for member in members
    }


def class_label(
    subset: SimpleSubset,
    context: SimpleSubset,
    equivalence: Equivalence = Equivalence.FULL,
) -> ClassLabel:
    """The label of the class of ``subset`` inside ``context``."""
    if not subset.issubset(context):
        raise InvalidSubset(f"{subset} is not contained in {context}")
    return _label_index(context, equivalence)[subset.mask]


@dataclass(frozen=True, eq=False)
class ClassVector:
    """Sparse integer combination of class labels over one context."""

    context: SimpleSubset
    equivalence: Equivalence
    coeffs: dict[ClassLabel, int]

    @classmethod
    def zero(
        cls, context: SimpleSubset, equivalence: Equivalence = Equivalence.FULL
    ) -> "ClassVector":
        return cls(context, equivalence, {})

    @classmethod
    def from_terms(
        cls,
        context: SimpleSubset,
        equivalence: Equivalence,
        terms: Iterable[tuple[ClassLabel, int]],
    ) -> "ClassVector":
        coeffs: dict[ClassLabel, int] = {}
        for label, value in terms:
            if label.context != context or label.equivalence != equivalence:
                raise ContextMismatch(f"{label} does not live over {context}")
            coeffs[label] = coeffs.get(label, 0) + value
        return cls(context, equivalence, {k: _check_coeff(v) for k, v in coeffs.items() if v})

    @classmethod
    def basis_vector(cls, label: ClassLabel) -> "ClassVector":
        return cls(label.context, label.equivalence, {label: 1})

    def sorted_terms(self) -> list[tuple[ClassLabel, int]]:
        return [(label, self.coeffs[label]) for label in sorted(self.coeffs, key=ClassLabel.sort_key)]

    def __add__(self, other: "ClassVector") -> "ClassVector":
        if self.context != other.context or self.equivalence != other.equivalence:
            raise ContextMismatch("cannot add vectors over different contexts")
        coeffs = dict(self.coeffs)
        for label, value in other.coeffs.items():
            total = coeffs.get(label, 0) + value
            if total:
                coeffs[label] = _check_coeff(total)
            else:
                coeffs.pop(label, None)
        return ClassVector(self.context, self.equivalence, coeffs)

    def scale(self, factor: int) -> "ClassVector":
        if factor == 0:
            return ClassVector.zero(self.context, self.equivalence)
        return ClassVector(
            self.context,
            self.equivalence,
            {k: _check_coeff(v * factor) for k, v in self.coeffs.items()},
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassVector):
            return NotImplemented
        return (
            self.context == other.context
            and self.equivalence == other.equivalence
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        body = " + ".join(f"{v}*[{'+'.join(map(str, k.partition.parts))}]" for k, v in self.sorted_terms())
        return f"ClassVector({body or '0'})"


def collapse_product(
    left_rep: SimpleSubset,
    right_rep: SimpleSubset,
    context: SimpleSubset,
    equivalence: Equivalence = Equivalence.FULL,
) -> ClassVector:
    """
    The product of the coset sums of two explicit representatives, expanded
    over subsets of the right representative and then collapsed to classes.
    The expansion is over subsets, never directly over classes.
    """
    if context.is_full:
        table: Mapping[SimpleSubset, int] = structure_table(left_rep, right_rep)
    else:
        table = parabolic_structure_table(left_rep, right_rep, context)
    return ClassVector.from_terms(
        context,
        equivalence,
        (
            (class_label(inner, context, equivalence), count)
            for inner, count in table.items()
        ),
    )


def class_product(a: ClassLabel, b: ClassLabel) -> ClassVector:
    """Product in the class algebra over the full simple system."""
    if a.context != b.context or a.equivalence != b.equivalence:
        raise ContextMismatch("labels live over different contexts")
    if not a.context.is_full:
        raise InvalidSubset("class_product needs the full-context algebra; "
                            "use parabolic_class_product inside a parabolic subgroup")
    return collapse_product(a.representative, b.representative, a.context, a.equivalence)


def parabolic_class_product(
    a: ClassLabel, b: ClassLabel, context: SimpleSubset
) -> ClassVector:
    """Product in the class algebra of the parabolic subgroup of ``context``."""
    if a.context != context or b.context != context:
        raise ContextMismatch("labels do not live over the requested context")
    if a.equivalence != b.equivalence:
        raise ContextMismatch("labels use different equivalences")
    return collapse_product(a.representative, b.representative, context, a.equivalence)


def vector_product(u: ClassVector, v: ClassVector) -> ClassVector:
    """Bilinear extension of the class product to whole vectors."""
    if u.context != v.context or u.equivalence != v.equivalence:
        raise ContextMismatch("cannot multiply vectors over different contexts")
    out = ClassVector.zero(u.context, u.equivalence)
    for a, ca in u.coeffs.items():
        for b, cb in v.coeffs.items():
            out = out + collapse_product(
                a.representative, b.representative, u.context, u.equivalence
            ).scale(ca * cb)
    return out


@dataclass(frozen=True)
class FactorizationRow:
    inner: SimpleSubset
    direct: int
    factored: int

    @property
    def ok(self) -> bool:
        return self.direct == self.factored


@dataclass(frozen=True)
class FactorizationReport:
    """Comparison of a global structure constant with its expansion through a
    parabolic context: direct = a(K,N,P), factored = sum over M ⊆ J of
    a(K,J,M) · a^J(M,N,P)."""

    outer: SimpleSubset
    inner: SimpleSubset
    context: SimpleSubset
    rows: tuple[FactorizationRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)


def factorization_check(
    outer: SimpleSubset, inner: SimpleSubset, context: SimpleSubset
) -> FactorizationReport:
    """
    Check, for every ``P ⊆ inner``, that the structure constant a(outer,
    inner, P) equals the sum over ``M ⊆ context`` of a(outer, context, M)
    times the within-context constant a^context(M, inner, P).
    """
    if not inner.issubset(context):
        raise InvalidSubset(f"{inner} must be contained in {context}")
    outer_table = structure_table(outer, inner)
    through_context = structure_table(outer, context)
    rows = []
    for p in subsets_of(inner):
        direct = outer_table.get(p, 0)
        factored = 0
        for m, count in through_context.items():
            factored += count * parabolic_structure_table(m, inner, context).get(p, 0)
        rows.append(FactorizationRow(p, direct, factored))
    return FactorizationReport(outer, inner, context, tuple(rows))


@dataclass(frozen=True)
class ProductCounterexample:
    """A representative pair whose collapsed product strays from the canonical one."""

    left: ClassLabel
    right: ClassLabel
    left_rep: SimpleSubset
    right_rep: SimpleSubset
    vector: ClassVector
    expected: ClassVector


@dataclass(frozen=True)
class WellDefinednessReport:
    context: SimpleSubset
    equivalence: Equivalence
    pairs_checked: int
    counterexamples: tuple[ProductCounterexample, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def well_definedness_report(
    context: SimpleSubset, equivalence: Equivalence = Equivalence.FULL
) -> WellDefinednessReport:
    """
    Recompute every class product from every pair of representatives and
    report each disagreement with the canonical-representative value.
    """
    decomposition = class_decomposition(context, equivalence)
    counterexamples = []
    pairs = 0
    for left, left_members in decomposition:
        for right, right_members in decomposition:
            expected = collapse_product(
                left.representative, right.representative, context, equivalence
            )
            for lrep in left_members:
                for rrep in right_members:
                    pairs += 1
                    got = collapse_product(lrep, rrep, context, equivalence)
                    if got != expected:
                        counterexamples.append(
                            ProductCounterexample(left, right, lrep, rrep, got, expected)
                        )
    return WellDefinednessReport(context, equivalence, pairs, tuple(counterexamples))
