"""
Distinguished (minimal-length) coset and double-coset representatives.

A representative of a left coset ``wW_K`` is distinguished when it maps every
simple root of ``K`` to a positive root; inside a parabolic subgroup the same
characterization applies with the ambient group shrunk to ``W_J``.  All
representative lists are produced by filtering the canonical group enumeration,
so they inherit its (length, one-line) ordering, and every query is memoized:
the fills are pure and idempotent, which keeps the caches safe under
concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidSubset
from .weyl import (
    Permutation,
    SimpleSubset,
    group_elements,
    inverse_images,
    point_blocks,
)


@dataclass(frozen=True)
class CosetRepSet:
    """Distinguished representatives of the cosets ``wW_target`` inside the
    parabolic subgroup of ``context`` (full mask = whole group)."""

    context: SimpleSubset
    target: SimpleSubset
    reps: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.reps)


def _is_reduced_for(images: tuple[int, ...], mask: int) -> bool:
    # w(a_k) positive for all k in mask, i.e. no descent inside the subset
    k = 1
    while mask:
        if mask & 1 and images[k - 1] > images[k]:
            return False
        mask >>= 1
        k += 1
    return True


def _in_blocks(images: tuple[int, ...], blocks: tuple[int, ...]) -> bool:
    return all(blocks[img - 1] == blocks[pos] for pos, img in enumerate(images))


@lru_cache(maxsize=None)
def min_coset_reps(target: SimpleSubset) -> CosetRepSet:
    """``X_target``: the minimal-length representatives of ``wW_target`` in W."""
    reps = tuple(
        w for w in group_elements(target.rank) if _is_reduced_for(w.images, target.mask)
    )
    return CosetRepSet(SimpleSubset.full(target.rank), target, reps)


@lru_cache(maxsize=None)
def min_coset_reps_parabolic(target: SimpleSubset, context: SimpleSubset) -> CosetRepSet:
    """Minimal-length representatives of ``wW_target`` inside ``W_context``."""
    if not target.issubset(context):
        raise InvalidSubset(f"{target} is not contained in {context}")
    if context.is_full:
        reps = min_coset_reps(target).reps
    else:
        blocks = point_blocks(context)
        reps = tuple(
            w
            for w in group_elements(context.rank)
            if _in_blocks(w.images, blocks) and _is_reduced_for(w.images, target.mask)
        )
    return CosetRepSet(context, target, reps)


@lru_cache(maxsize=None)
def double_coset_reps(left: SimpleSubset, right: SimpleSubset) -> tuple[Permutation, ...]:
    """
    One minimal representative per double coset ``W_left w W_right``: the
    elements whose inverse is reduced for ``left`` and which are reduced for
    ``right``.
    """
    if left.rank != right.rank:
        raise InvalidSubset("double cosets need both subsets at the same rank")
    return tuple(
        w
        for w in group_elements(left.rank)
        if _is_reduced_for(w.images, right.mask)
        and _is_reduced_for(inverse_images(w.images), left.mask)
    )


@lru_cache(maxsize=None)
def double_coset_reps_parabolic(
    left: SimpleSubset, right: SimpleSubset, context: SimpleSubset
) -> tuple[Permutation, ...]:
    """Double-coset representatives computed inside ``W_context``."""
    if not left.issubset(context) or not right.issubset(context):
        raise InvalidSubset(f"{left} and {right} must be contained in {context}")
    if context.is_full:
        return double_coset_reps(left, right)
    blocks = point_blocks(context)
    return tuple(
        w
        for w in group_elements(context.rank)
        if _in_blocks(w.images, blocks)
        and _is_reduced_for(w.images, right.mask)
        and _is_reduced_for(inverse_images(w.images), left.mask)
    )
