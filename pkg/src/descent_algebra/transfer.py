"""
Induction and restriction between class algebras of nested parabolic contexts.

Induction of a class with representative ``K ⊆ J`` up to ``M`` multiplies the
relative coset sums ``x_J^M · x_K^J`` honestly in the group algebra and
decomposes the product back over the coset-sum basis of ``W_M`` before
collapsing to classes.  The factorization of representatives predicts the
closed form ``[x_K^M]``; the computation asserts it on every call, so the
closed form stays a perpetually re-checked invariant rather than a shortcut.

Restriction of ``[x_K^M]`` down to ``J`` sums, over the global double-coset
representatives of ``(K, J)`` that lie in ``W_M``, the class of
``J ∩ d^{-1}(K)`` (simple roots only).  The second form enumerates the
``(J, K)`` representatives and applies ``d`` forward; both are implemented
independently so their agreement can be tested instead of assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .class_algebra import ClassVector, class_label
from .cosets import double_coset_reps
from .errors import ClosedFormViolation, ContextMismatch, InvalidSubset
from .solomon import apply_and_intersect, convolve, decompose_descent, x_parabolic
from .weyl import SimpleSubset, in_parabolic, inverse_images


@dataclass(frozen=True)
class TransferContext:
    """A nested pair of contexts: ``lower ⊆ upper``."""

    lower: SimpleSubset
    upper: SimpleSubset

    def __post_init__(self) -> None:
        if not self.lower.issubset(self.upper):
            raise InvalidSubset(f"{self.lower} is not contained in {self.upper}")


def induce_label(label, ctx: TransferContext) -> ClassVector:
    """Induce one basis class from the lower context into the upper one."""
    if label.context != ctx.lower:
        raise ContextMismatch(f"{label} does not live over {ctx.lower}")
    product = convolve(
        x_parabolic(ctx.lower, ctx.upper),
        x_parabolic(label.representative, ctx.lower),
    )
    decomposition = decompose_descent(product, ctx.upper)
    result = ClassVector.from_terms(
        ctx.upper,
        label.equivalence,
        (
            (class_label(subset, ctx.upper, label.equivalence), value)
            for subset, value in decomposition.items()
        ),
    )
    expected = ClassVector.basis_vector(
        class_label(label.representative, ctx.upper, label.equivalence)
    )
    if result != expected:
        raise ClosedFormViolation(
            f"induction of {label} decomposed to {result}, expected {expected}"
        )
    return result


def induce(v: ClassVector, ctx: TransferContext) -> ClassVector:
    """Linear extension of :func:`induce_label`."""
    if v.context != ctx.lower:
        raise ContextMismatch("vector does not live over the lower context")
    out = ClassVector.zero(ctx.upper, v.equivalence)
    for label, value in v.coeffs.items():
        out = out + induce_label(label, ctx).scale(value)
    return out


def _restrict_label(label, ctx: TransferContext, forward: bool) -> ClassVector:
    target = label.representative
    terms = []
    if forward:
        reps = double_coset_reps(ctx.lower, target)
    else:
        reps = double_coset_reps(target, ctx.lower)
    for d in reps:
        if not in_parabolic(d, ctx.upper):
            continue
        if forward:
            mask = apply_and_intersect(d.images, target.mask, ctx.lower.mask)
        else:
            mask = apply_and_intersect(inverse_images(d.images), target.mask, ctx.lower.mask)
        terms.append(
            (class_label(SimpleSubset(mask, target.rank), ctx.lower, label.equivalence), 1)
        )
    return ClassVector.from_terms(ctx.lower, label.equivalence, terms)


def restrict_label(label, ctx: TransferContext) -> ClassVector:
    """Restrict one basis class of the upper context down to the lower one."""
    if label.context != ctx.upper:
        raise ContextMismatch(f"{label} does not live over {ctx.upper}")
    return _restrict_label(label, ctx, forward=False)


def restrict_label_alt(label, ctx: TransferContext) -> ClassVector:
    """The forward-image form of restriction; must agree with the other form."""
    if label.context != ctx.upper:
        raise ContextMismatch(f"{label} does not live over {ctx.upper}")
    return _restrict_label(label, ctx, forward=True)


def restrict(v: ClassVector, ctx: TransferContext) -> ClassVector:
    """Linear extension of :func:`restrict_label`."""
    if v.context != ctx.upper:
        raise ContextMismatch("vector does not live over the upper context")
    out = ClassVector.zero(ctx.lower, v.equivalence)
    for label, value in v.coeffs.items():
        out = out + restrict_label(label, ctx).scale(value)
    return out


def restrict_alt(v: ClassVector, ctx: TransferContext) -> ClassVector:
    """Linear extension of :func:`restrict_label_alt`."""
    if v.context != ctx.upper:
        raise ContextMismatch("vector does not live over the upper context")
    out = ClassVector.zero(ctx.lower, v.equivalence)
    for label, value in v.coeffs.items():
        out = out + restrict_label_alt(label, ctx).scale(value)
    return out
