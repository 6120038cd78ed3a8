"""
The parabolic Burnside ring of a context and its bridge to the class algebra.

Basis elements are classes of transitive coset spaces ``W_M/W_K`` for
``K ⊆ M``, labelled by the same canonical class machinery as the class
algebra, and multiplied by the double-coset (Mackey) rule: the product of the
spaces for ``J`` and ``K`` decomposes over within-``W_M`` double-coset
representatives ``d`` into the spaces for ``d^{-1}(J) ∩ K``.

The canonical map from the class algebra relabels ``[x_K^M]`` to the class of
``W_M/W_K``.  Restriction and induction have Burnside-side counterparts, and
:func:`commuting_square_check` evaluates both composite paths of each square
on every basis element, returning the disagreements as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .class_algebra import (
    ClassLabel,
    ClassVector,
    Equivalence,
    class_basis,
    class_label,
    parabolic_class_product,
)
from .cosets import double_coset_reps, double_coset_reps_parabolic
from .errors import ContextMismatch
from .solomon import _check_coeff, apply_and_intersect
from .transfer import TransferContext, induce, restrict
from .weyl import SimpleSubset, in_parabolic, inverse_images, parabolic_order


@dataclass(frozen=True, eq=False)
class BurnsideElement:
    """Sparse integer combination of transitive-coset-space classes."""

    context: SimpleSubset
    equivalence: Equivalence
    coeffs: dict[ClassLabel, int]

    @classmethod
    def zero(
        cls, context: SimpleSubset, equivalence: Equivalence = Equivalence.FULL
    ) -> "BurnsideElement":
        return cls(context, equivalence, {})

    @classmethod
    def from_terms(
        cls,
        context: SimpleSubset,
        equivalence: Equivalence,
        terms: Iterable[tuple[ClassLabel, int]],
    ) -> "BurnsideElement":
        coeffs: dict[ClassLabel, int] = {}
        for label, value in terms:
            if label.context != context or label.equivalence != equivalence:
                raise ContextMismatch(f"{label} does not live over {context}")
            coeffs[label] = coeffs.get(label, 0) + value
        return cls(context, equivalence, {k: _check_coeff(v) for k, v in coeffs.items() if v})

    @classmethod
    def basis_vector(cls, label: ClassLabel) -> "BurnsideElement":
        return cls(label.context, label.equivalence, {label: 1})

    def sorted_terms(self) -> list[tuple[ClassLabel, int]]:
        return [(label, self.coeffs[label]) for label in sorted(self.coeffs, key=ClassLabel.sort_key)]

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        if self.context != other.context or self.equivalence != other.equivalence:
            raise ContextMismatch("cannot add elements over different contexts")
        coeffs = dict(self.coeffs)
        for label, value in other.coeffs.items():
            total = coeffs.get(label, 0) + value
            if total:
                coeffs[label] = _check_coeff(total)
            else:
                coeffs.pop(label, None)
        return BurnsideElement(self.context, self.equivalence, coeffs)

    def scale(self, factor: int) -> "BurnsideElement":
        if factor == 0:
            return BurnsideElement.zero(self.context, self.equivalence)
        return BurnsideElement(
            self.context,
            self.equivalence,
            {k: _check_coeff(v * factor) for k, v in self.coeffs.items()},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return (
            self.context == other.context
            and self.equivalence == other.equivalence
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        body = " + ".join(
            f"{v}*[{'+'.join(map(str, k.partition.parts))}]" for k, v in self.sorted_terms()
        )
        return f"BurnsideElement({body or '0'})"


def transitive_size(label: ClassLabel) -> int:
    """Number of points of the coset space named by ``label``."""
    return parabolic_order(label.context) // parabolic_order(label.representative)


def total_points(element: BurnsideElement) -> int:
    """The point-count homomorphism, extended linearly."""
    return sum(value * transitive_size(label) for label, value in element.coeffs.items())


def mackey_basis_product(a: ClassLabel, b: ClassLabel) -> BurnsideElement:
    """Product of two basis classes by the double-coset decomposition."""
    if a.context != b.context or a.equivalence != b.equivalence:
        raise ContextMismatch("labels live over different contexts")
    context = a.context
    left, right = a.representative, b.representative
    terms = []
    for d in double_coset_reps_parabolic(left, right, context):
        mask = apply_and_intersect(inverse_images(d.images), left.mask, right.mask)
        terms.append(
            (class_label(SimpleSubset(mask, context.rank), context, a.equivalence), 1)
        )
    return BurnsideElement.from_terms(context, a.equivalence, terms)


def mackey_product(a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    """Bilinear extension of :func:`mackey_basis_product`."""
    if a.context != b.context or a.equivalence != b.equivalence:
        raise ContextMismatch("cannot multiply elements over different contexts")
    out = BurnsideElement.zero(a.context, a.equivalence)
    for la, ca in a.coeffs.items():
        for lb, cb in b.coeffs.items():
            out = out + mackey_basis_product(la, lb).scale(ca * cb)
    return out


def burnside_identity(
    context: SimpleSubset, equivalence: Equivalence = Equivalence.FULL
) -> BurnsideElement:
    """The class of the one-point space ``W_M/W_M``."""
    return BurnsideElement.basis_vector(class_label(context, context, equivalence))


def theta(v: ClassVector) -> BurnsideElement:
    """Relabel a class-algebra vector as a Burnside element, coefficientwise."""
    return BurnsideElement(v.context, v.equivalence, dict(v.coeffs))


def res_pb(v: BurnsideElement, ctx: TransferContext) -> BurnsideElement:
    """Mackey restriction of coset spaces from the upper to the lower context."""
    if v.context != ctx.upper:
        raise ContextMismatch("element does not live over the upper context")
    out = BurnsideElement.zero(ctx.lower, v.equivalence)
    for label, value in v.coeffs.items():
        out = out + _res_pb_label(label, ctx).scale(value)
    return out


def _res_pb_label(label: ClassLabel, ctx: TransferContext) -> BurnsideElement:
    target = label.representative
    terms = []
    for d in double_coset_reps(target, ctx.lower):
        if not in_parabolic(d, ctx.upper):
            continue
        mask = apply_and_intersect(inverse_images(d.images), target.mask, ctx.lower.mask)
        terms.append(
            (class_label(SimpleSubset(mask, target.rank), ctx.lower, label.equivalence), 1)
        )
    return BurnsideElement.from_terms(ctx.lower, label.equivalence, terms)


def ind_pb(v: BurnsideElement, ctx: TransferContext) -> BurnsideElement:
    """Relabel ``W_J/W_K`` as ``W_M/W_K``; classes may coarsen upstairs."""
    if v.context != ctx.lower:
        raise ContextMismatch("element does not live over the lower context")
    return BurnsideElement.from_terms(
        ctx.upper,
        v.equivalence,
        (
            (class_label(label.representative, ctx.upper, v.equivalence), value)
            for label, value in v.coeffs.items()
        ),
    )


@dataclass(frozen=True)
class SquareFailure:
    """One basis class on which the two composite paths of a square differ."""

    square: str
    label: ClassLabel
    via_transfer: BurnsideElement
    via_burnside: BurnsideElement


@dataclass(frozen=True)
class SquareReport:
    lower: SimpleSubset
    upper: SimpleSubset
    equivalence: Equivalence
    cases: int
    failures: tuple[SquareFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def commuting_square_check(
    ctx: TransferContext, equivalence: Equivalence = Equivalence.FULL
) -> SquareReport:
    """
    Evaluate both composite paths of the restriction square (down from the
    upper context) and the induction square (up from the lower one) on every
    basis class, and report each disagreement.
    """
    failures = []
    cases = 0
    for label in class_basis(ctx.upper, equivalence):
        cases += 1
        via_transfer = theta(restrict(ClassVector.basis_vector(label), ctx))
        via_burnside = res_pb(theta(ClassVector.basis_vector(label)), ctx)
        if via_transfer != via_burnside:
            failures.append(SquareFailure("restriction", label, via_transfer, via_burnside))
    for label in class_basis(ctx.lower, equivalence):
        cases += 1
        via_transfer = theta(induce(ClassVector.basis_vector(label), ctx))
        via_burnside = ind_pb(theta(ClassVector.basis_vector(label)), ctx)
        if via_transfer != via_burnside:
            failures.append(SquareFailure("induction", label, via_transfer, via_burnside))
    return SquareReport(ctx.lower, ctx.upper, equivalence, cases, tuple(failures))


@dataclass(frozen=True)
class IntertwiningReport:
    """Whether relabelling carries the class product to the Mackey product,
    tried in both factor orders."""

    context: SimpleSubset
    equivalence: Equivalence
    cases: int
    same_order_failures: tuple[tuple[ClassLabel, ClassLabel], ...]
    swapped_order_failures: tuple[tuple[ClassLabel, ClassLabel], ...]

    @property
    def same_order_ok(self) -> bool:
        return not self.same_order_failures

    @property
    def swapped_order_ok(self) -> bool:
        return not self.swapped_order_failures

    @property
    def ok(self) -> bool:
        return self.same_order_ok or self.swapped_order_ok


def intertwining_report(
    context: SimpleSubset, equivalence: Equivalence = Equivalence.FULL
) -> IntertwiningReport:
    basis = class_basis(context, equivalence)
    same_failures = []
    swapped_failures = []
    cases = 0
    for a in basis:
        for b in basis:
            cases += 1
            image = theta(parabolic_class_product(a, b, context))
            same = mackey_basis_product(a, b)
            swapped = mackey_basis_product(b, a)
            if image != same:
                same_failures.append((a, b))
            if image != swapped:
                swapped_failures.append((a, b))
    return IntertwiningReport(
        context, equivalence, cases, tuple(same_failures), tuple(swapped_failures)
    )
