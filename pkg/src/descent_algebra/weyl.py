"""
Symmetric groups viewed as the reflection groups of type A.

The group of rank ``n`` acts on the points ``1..n+1`` and is generated by the
simple reflections ``s_1..s_n``, where ``s_k`` swaps ``k`` and ``k+1``.  Roots
are the differences ``e_i - e_j`` of basis vectors, a root being positive when
``i < j`` and simple when ``j == i + 1``.  Subsets of the simple system are
bitmasks (bit ``k-1`` set means the k-th simple root is in), and each subset
generates a standard parabolic subgroup.

Everything here is an immutable value and every function is pure; the module
is the substrate the coset and algebra layers enumerate over.

>>> s1 = Permutation.simple_reflection(1, 2)
>>> s2 = Permutation.simple_reflection(2, 2)
>>> compose(s1, s2).images
(2, 3, 1)
>>> length(compose(s1, s2))
2
>>> class_of(SimpleSubset.from_indices([1, 3], 4)).parts
(2, 2, 1)
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InvalidSubset, RankCapExceeded, RankMismatch

DEFAULT_RANK_CAP = 8
RANK_CAP_ENV = "DESCENT_RANK_CAP"


def rank_cap() -> int:
    """Largest rank whose full group may be enumerated (env-overridable)."""
    raw = os.environ.get(RANK_CAP_ENV)
    if raw is None:
        return DEFAULT_RANK_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise RankCapExceeded(f"{RANK_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise RankCapExceeded(f"{RANK_CAP_ENV} must be at least 1, got {cap}")
    return cap


def check_rank(rank: int) -> None:
    """Reject ranks outside ``1 <= rank <= rank_cap()``."""
    if not isinstance(rank, int) or rank < 1:
        raise InvalidSubset(f"rank must be a positive integer, got {rank!r}")
    cap = rank_cap()
    if rank > cap:
        raise RankCapExceeded(
            f"rank {rank} exceeds the enumeration cap {cap}; "
            f"raise {RANK_CAP_ENV} to override"
        )


@dataclass(frozen=True)
class Permutation:
    """A group element in one-line notation: ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n < 2 or sorted(self.images) != list(range(1, n + 1)):
            raise InvalidSubset(f"not a one-line permutation of 1..{n}: {self.images}")

    @property
    def rank(self) -> int:
        return len(self.images) - 1

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    @classmethod
    def identity(cls, rank: int) -> "Permutation":
        return cls(tuple(range(1, rank + 2)))

    @classmethod
    def simple_reflection(cls, k: int, rank: int) -> "Permutation":
        if not 1 <= k <= rank:
            raise InvalidSubset(f"simple reflection index {k} out of range 1..{rank}")
        images = list(range(1, rank + 2))
        images[k - 1], images[k] = images[k], images[k - 1]
        return cls(tuple(images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


@dataclass(frozen=True)
class Root:
    """The root ``e_i - e_j`` with ``i != j``."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i == self.j or self.i < 1 or self.j < 1:
            raise InvalidSubset(f"invalid root indices ({self.i}, {self.j})")

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    @property
    def simple_index(self) -> int | None:
        """Index ``k`` when this root is the simple root ``e_k - e_{k+1}``."""
        return self.i if self.j == self.i + 1 else None

    @classmethod
    def simple(cls, k: int) -> "Root":
        return cls(k, k + 1)


@dataclass(frozen=True)
class SimpleSubset:
    """A subset of the simple system, as a bitmask over root indices ``1..rank``."""

    mask: int
    rank: int

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InvalidSubset(f"rank must be a positive integer, got {self.rank!r}")
        if not 0 <= self.mask < (1 << self.rank):
            raise InvalidSubset(f"mask {self.mask:#b} out of range for rank {self.rank}")

    @classmethod
    def empty(cls, rank: int) -> "SimpleSubset":
        return cls(0, rank)

    @classmethod
    def full(cls, rank: int) -> "SimpleSubset":
        return cls((1 << rank) - 1, rank)

    @classmethod
    def from_indices(cls, indices: Iterable[int], rank: int) -> "SimpleSubset":
        mask = 0
        for k in indices:
            if not 1 <= k <= rank:
                raise InvalidSubset(f"simple root index {k} out of range 1..{rank}")
            mask |= 1 << (k - 1)
        return cls(mask, rank)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.rank + 1) if self.mask >> (k - 1) & 1)

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.rank) - 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, k: int) -> bool:
        return 1 <= k <= self.rank and bool(self.mask >> (k - 1) & 1)

    def issubset(self, other: "SimpleSubset") -> bool:
        return self.rank == other.rank and self.mask & ~other.mask == 0

    def components(self) -> tuple[tuple[int, int], ...]:
        """Maximal runs of consecutive indices, as ``(start, length)`` pairs."""
        runs = []
        k = 1
        while k <= self.rank:
            if k in self:
                start = k
                while k + 1 <= self.rank and (k + 1) in self:
                    k += 1
                runs.append((start, k - start + 1))
            k += 1
        return tuple(runs)

    def __repr__(self) -> str:
        body = ",".join(f"a{k}" for k in self.indices) or "empty"
        return f"SimpleSubset({body}; rank={self.rank})"


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise InvalidSubset(f"partition parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidSubset(f"partition parts must be weakly decreasing: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __repr__(self) -> str:
        return f"Partition({'+'.join(map(str, self.parts)) or '0'})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product ``p∘q`` acting as ``(p∘q)(i) = p(q(i))``."""
    if p.rank != q.rank:
        raise RankMismatch(f"cannot compose rank {p.rank} with rank {q.rank}")
    pi = p.images
    return Permutation(tuple(pi[x - 1] for x in q.images))


def inverse(p: Permutation) -> Permutation:
    return Permutation(inverse_images(p.images))


def inverse_images(images: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(images)
    for pos, val in enumerate(images):
        inv[val - 1] = pos + 1
    return tuple(inv)


def length(p: Permutation) -> int:
    """Coxeter length: the number of inversions of the one-line notation."""
    return inversions(p.images)


def inversions(images: tuple[int, ...]) -> int:
    n = len(images)
    return sum(
        1 for a in range(n) for b in range(a + 1, n) if images[a] > images[b]
    )


def act_on_root(p: Permutation, r: Root) -> Root:
    """Send ``e_i - e_j`` to ``e_{p(i)} - e_{p(j)}``."""
    if r.i > p.rank + 1 or r.j > p.rank + 1:
        raise InvalidSubset(f"root {r} out of range at rank {p.rank}")
    return Root(p.images[r.i - 1], p.images[r.j - 1])


def reflection_of_root(r: Root, rank: int) -> Permutation:
    """The transposition exchanging the two endpoints of ``r``."""
    if r.i > rank + 1 or r.j > rank + 1:
        raise InvalidSubset(f"root {r} out of range at rank {rank}")
    images = list(range(1, rank + 2))
    images[r.i - 1], images[r.j - 1] = images[r.j - 1], images[r.i - 1]
    return Permutation(tuple(images))


def class_of(subset: SimpleSubset) -> Partition:
    """
    The orbit label of a subset under the full group relabelling the simple
    system: each run of ``c`` consecutive simple roots contributes a part
    ``c+1``, and the label is padded with parts 1 up to total ``rank+1``.
    """
    parts = sorted((size + 1 for _, size in subset.components()), reverse=True)
    parts += [1] * (subset.rank + 1 - sum(parts))
    return Partition(tuple(parts))


def subsets_of(subset: SimpleSubset) -> list[SimpleSubset]:
    """All submasks of ``subset`` in ascending mask order."""
    out = []
    sub = 0
    while True:
        out.append(SimpleSubset(sub, subset.rank))
        if sub == subset.mask:
            break
        sub = (sub - subset.mask) & subset.mask
    return out


@lru_cache(maxsize=None)
def group_elements(rank: int) -> tuple[Permutation, ...]:
    """
    The whole group at the given rank, sorted by (length, one-line notation).
    This ordering is the canonical one used by every representative list and
    serialized table in the package.
    """
    check_rank(rank)
    decorated = sorted(
        (inversions(images), images)
        for images in itertools.permutations(range(1, rank + 2))
    )
    return tuple(Permutation(images) for _, images in decorated)


def group_order(rank: int) -> int:
    out = 1
    for k in range(2, rank + 2):
        out *= k
    return out


def parabolic_order(subset: SimpleSubset) -> int:
    """``|W_J|``: the product of ``(c+1)!`` over the component sizes ``c``."""
    out = 1
    for _, size in subset.components():
        for k in range(2, size + 2):
            out *= k
    return out


@lru_cache(maxsize=None)
def point_blocks(subset: SimpleSubset) -> tuple[int, ...]:
    """Block id of each point ``1..rank+1``; points i, i+1 share a block iff
    the i-th simple root is in the subset."""
    blocks = [0] * (subset.rank + 1)
    block = 0
    for i in range(1, subset.rank + 1):
        if i not in subset:
            block += 1
        blocks[i] = block
    return tuple(blocks)


def in_parabolic(p: Permutation, subset: SimpleSubset) -> bool:
    """Whether ``p`` lies in the standard parabolic subgroup of ``subset``."""
    if p.rank != subset.rank:
        raise RankMismatch(f"rank {p.rank} element tested against rank {subset.rank} subset")
    blocks = point_blocks(subset)
    return all(blocks[img - 1] == blocks[pos] for pos, img in enumerate(p.images))


def generate_parabolic(subset: SimpleSubset) -> frozenset[Permutation]:
    """Closure of the simple reflections indexed by ``subset`` under composition."""
    check_rank(subset.rank)
    gens = [Permutation.simple_reflection(k, subset.rank) for k in subset.indices]
    identity = Permutation.identity(subset.rank)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(seen)


def image_subset(p: Permutation, subset: SimpleSubset) -> SimpleSubset | None:
    """
    The image ``{p(α) : α in subset}`` when it consists of simple roots only,
    else ``None``.
    """
    mask = 0
    images = p.images
    for k in subset.indices:
        a, b = images[k - 1], images[k]
        if b != a + 1:
            return None
        mask |= 1 << (a - 1)
    return SimpleSubset(mask, subset.rank)


def conjugate_by_enumeration(
    left: SimpleSubset, right: SimpleSubset, group: Iterable[Permutation]
) -> bool:
    """
    Literal conjugacy test: does some element of ``group`` map ``left`` onto
    ``right`` as sets of simple roots?  Brute force; the oracle counterpart of
    :func:`class_of`.
    """
    if left.rank != right.rank:
        raise RankMismatch("conjugacy test across different ranks")
    return any(image_subset(w, left) == right for w in group)


def partitions_of(total: int) -> Iterator[Partition]:
    """All partitions of ``total`` in descending lexicographic order."""

    def rec(remaining: int, bound: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(bound, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    for parts in rec(total, total, ()):
        yield Partition(parts)
