"""
Exact arithmetic in the integral group algebra, and the coset-sum basis.

The element ``x_J`` is the sum of the distinguished representatives of the
cosets ``wW_J``; its parabolic relative ``x_K^J`` sums the representatives
taken inside ``W_J``.  Products of coset sums expand back over coset sums with
non-negative integer structure constants: the constant attached to ``L`` counts
the double-coset representatives ``w`` (inverse reduced for ``J``, reduced for
``K``) whose twisted intersection ``w^{-1}(J) ∩ K`` equals ``L``, the
intersection keeping simple roots only.

Convolution here is the ground-truth oracle: it knows nothing about structure
constants, and the decomposition routine recovers coefficients by a triangular
solve over descent classes, so the three routes cross-check each other.

Coefficients are kept inside signed 64-bit range; leaving it raises instead of
wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from operator import itemgetter
from typing import Iterable, Mapping

from .cosets import double_coset_reps, double_coset_reps_parabolic, min_coset_reps, min_coset_reps_parabolic
from .errors import CoefficientOverflow, DecompositionError, InvalidSubset, RankMismatch
from .weyl import (
    Permutation,
    SimpleSubset,
    group_elements,
    inverse_images,
    inversions,
    point_blocks,
    subsets_of,
)

I64_MIN = -(1 << 63)
I64_MAX = (1 << 63) - 1


def _check_coeff(value: int) -> int:
    if value < I64_MIN or value > I64_MAX:
        raise CoefficientOverflow(f"coefficient {value} leaves the signed 64-bit range")
    return value


@dataclass(frozen=True, eq=False)
class GroupAlgebraElement:
    """Sparse integer combination of group elements, keyed by one-line tuples."""

    rank: int
    coeffs: dict[tuple[int, ...], int]

    @classmethod
    def zero(cls, rank: int) -> "GroupAlgebraElement":
        return cls(rank, {})

    @classmethod
    def from_terms(
        cls, rank: int, terms: Iterable[tuple[Permutation, int]]
    ) -> "GroupAlgebraElement":
        coeffs: dict[tuple[int, ...], int] = {}
        for perm, value in terms:
            if perm.rank != rank:
                raise RankMismatch(f"term of rank {perm.rank} in element of rank {rank}")
            coeffs[perm.images] = coeffs.get(perm.images, 0) + value
        return cls(rank, {k: _check_coeff(v) for k, v in coeffs.items() if v})

    def coefficient(self, perm: Permutation) -> int:
        return self.coeffs.get(perm.images, 0)

    def sorted_terms(self) -> list[tuple[Permutation, int]]:
        """Terms in the canonical (length, one-line) order."""
        keys = sorted(self.coeffs, key=lambda images: (inversions(images), images))
        return [(Permutation(images), self.coeffs[images]) for images in keys]

    @property
    def mass(self) -> int:
        return sum(self.coeffs.values())

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if self.rank != other.rank:
            raise RankMismatch("cannot add elements of different rank")
        coeffs = dict(self.coeffs)
        for key, value in other.coeffs.items():
            total = coeffs.get(key, 0) + value
            if total:
                coeffs[key] = _check_coeff(total)
            else:
                coeffs.pop(key, None)
        return GroupAlgebraElement(self.rank, coeffs)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def scale(self, factor: int) -> "GroupAlgebraElement":
        if factor == 0:
            return GroupAlgebraElement.zero(self.rank)
        return GroupAlgebraElement(
            self.rank, {k: _check_coeff(v * factor) for k, v in self.coeffs.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.rank == other.rank and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"GroupAlgebraElement(rank={self.rank}, terms={len(self.coeffs)})"


def identity_element(rank: int) -> GroupAlgebraElement:
    return GroupAlgebraElement(rank, {Permutation.identity(rank).images: 1})


@lru_cache(maxsize=None)
def x_of(subset: SimpleSubset) -> GroupAlgebraElement:
    """Indicator sum of the distinguished coset representatives of ``subset``."""
    reps = min_coset_reps(subset).reps
    return GroupAlgebraElement(subset.rank, {w.images: 1 for w in reps})


@lru_cache(maxsize=None)
def x_parabolic(target: SimpleSubset, context: SimpleSubset) -> GroupAlgebraElement:
    """Indicator sum of the representatives taken inside ``W_context``."""
    reps = min_coset_reps_parabolic(target, context).reps
    return GroupAlgebraElement(target.rank, {w.images: 1 for w in reps})


def convolve(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Bilinear extension of composition: ``(p∘q)(i) = p(q(i))``."""
    if a.rank != b.rank:
        raise RankMismatch("cannot convolve elements of different rank")
    acc: dict[tuple[int, ...], int] = {}
    get = acc.get
    for q_images, cq in b.coeffs.items():
        remap = itemgetter(*(x - 1 for x in q_images))
        for p_images, cp in a.coeffs.items():
            key = remap(p_images)
            acc[key] = get(key, 0) + cp * cq
    return GroupAlgebraElement(a.rank, {k: _check_coeff(v) for k, v in acc.items() if v})


def apply_and_intersect(
    images: tuple[int, ...], source_mask: int, target_mask: int
) -> int:
    """
    Mask of ``{w(α) : α in source} ∩ target`` where ``images`` is the one-line
    notation of ``w``; image roots that are not simple drop out.
    """
    out = 0
    k = 1
    mask = source_mask
    while mask:
        if mask & 1:
            a, b = images[k - 1], images[k]
            if b == a + 1 and target_mask >> (a - 1) & 1:
                out |= 1 << (a - 1)
        mask >>= 1
        k += 1
    return out


@lru_cache(maxsize=None)
def structure_table(left: SimpleSubset, right: SimpleSubset) -> Mapping[SimpleSubset, int]:
    """All structure constants with the given pair of outer subsets at once."""
    counts: dict[int, int] = {}
    for w in double_coset_reps(left, right):
        inv = inverse_images(w.images)
        key = apply_and_intersect(inv, left.mask, right.mask)
        counts[key] = counts.get(key, 0) + 1
    return {
        SimpleSubset(mask, left.rank): value for mask, value in sorted(counts.items())
    }


def structure_constant(left: SimpleSubset, right: SimpleSubset, inner: SimpleSubset) -> int:
    """Multiplicity of ``x_inner`` in ``x_left · x_right`` (0 unless inner ⊆ right)."""
    if not inner.issubset(right):
        return 0
    return structure_table(left, right).get(inner, 0)


@lru_cache(maxsize=None)
def parabolic_structure_table(
    left: SimpleSubset, right: SimpleSubset, context: SimpleSubset
) -> Mapping[SimpleSubset, int]:
    counts: dict[int, int] = {}
    for w in double_coset_reps_parabolic(left, right, context):
        inv = inverse_images(w.images)
        key = apply_and_intersect(inv, left.mask, right.mask)
        counts[key] = counts.get(key, 0) + 1
    return {
        SimpleSubset(mask, left.rank): value for mask, value in sorted(counts.items())
    }


def structure_constant_parabolic(
    left: SimpleSubset, right: SimpleSubset, inner: SimpleSubset, context: SimpleSubset
) -> int:
    """The within-``W_context`` analogue of :func:`structure_constant`."""
    if not left.issubset(context) or not right.issubset(context):
        raise InvalidSubset(f"{left} and {right} must be contained in {context}")
    if not inner.issubset(right):
        return 0
    return parabolic_structure_table(left, right, context).get(inner, 0)


def _descent_mask(images: tuple[int, ...], context_mask: int) -> int:
    out = 0
    k = 1
    mask = context_mask
    while mask:
        if mask & 1 and images[k - 1] > images[k]:
            out |= 1 << (k - 1)
        mask >>= 1
        k += 1
    return out


@lru_cache(maxsize=None)
def _descent_class_sizes(context: SimpleSubset) -> Mapping[int, int]:
    """Number of elements of ``W_context`` per within-context descent mask."""
    blocks = point_blocks(context)
    sizes: dict[int, int] = {}
    for w in group_elements(context.rank):
        if all(blocks[img - 1] == blocks[pos] for pos, img in enumerate(w.images)):
            key = _descent_mask(w.images, context.mask)
            sizes[key] = sizes.get(key, 0) + 1
    return sizes


def decompose_descent(
    element: GroupAlgebraElement, context: SimpleSubset
) -> dict[SimpleSubset, int]:
    """
    Coefficients of ``element`` over the basis ``{x_P^context : P ⊆ context}``.

    Solved triangularly: elements of ``W_context`` sharing a descent set must
    carry one common coefficient, after which subset Möbius inversion yields
    the basis coefficients.  Raises when the element leaves the span.
    """
    if element.rank != context.rank:
        raise RankMismatch("element and context have different ranks")
    blocks = point_blocks(context)
    by_descent: dict[int, int] = {}
    counts: dict[int, int] = {}
    for images, value in element.coeffs.items():
        if not all(blocks[img - 1] == blocks[pos] for pos, img in enumerate(images)):
            raise DecompositionError(
                f"support leaves the parabolic subgroup of {context}"
            )
        key = _descent_mask(images, context.mask)
        if key in by_descent:
            if by_descent[key] != value:
                raise DecompositionError(
                    "coefficients are not constant on a descent class"
                )
        else:
            by_descent[key] = value
        counts[key] = counts.get(key, 0) + 1
    sizes = _descent_class_sizes(context)
    for key, seen in counts.items():
        if seen != sizes[key]:
            raise DecompositionError(
                "a descent class is only partially covered by the support"
            )
    # b_P = sum over Q ⊆ P of (-1)^{|P|-|Q|} c_{context\Q}
    out: dict[SimpleSubset, int] = {}
    for p in subsets_of(context):
        total = 0
        for q in subsets_of(p):
            c = by_descent.get(context.mask & ~q.mask, 0)
            total += c if (len(p) - len(q)) % 2 == 0 else -c
        if total:
            out[p] = _check_coeff(total)
    return out


def solomon_decompose(
    left: SimpleSubset, right: SimpleSubset
) -> dict[SimpleSubset, int]:
    """
    Expand ``x_left · x_right`` over the coset-sum basis, independently of the
    structure-constant count: the product is convolved honestly and then
    decomposed.  A nonzero coefficient outside the subsets of ``right`` means
    the product left the expected span, which signals a convention bug.
    """
    product = convolve(x_of(left), x_of(right))
    decomposition = decompose_descent(product, SimpleSubset.full(left.rank))
    for subset in decomposition:
        if not subset.issubset(right):
            raise DecompositionError(
                f"product has a component on {subset}, outside the subsets of {right}"
            )
    return decomposition
