"""Integer partitions and set partitions with their lattice operations.

Integer partitions are weakly decreasing tuples of positive integers.  Set
partitions of {1..n} are kept in a canonical form (blocks sorted by their
minimum, elements ascending) and enumerated through restricted-growth
strings, which gives a deterministic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

from .config import DEFAULT_SET_PARTITION_CAP
from .errors import DomainError, ResourceCapError


class IntPartition(tuple):
    """A partition of a nonnegative integer: parts sorted descending."""

    def __new__(cls, parts: Iterable[int] = ()):
        items = sorted((int(p) for p in parts), reverse=True)
        for p in items:
            if p <= 0:
                raise DomainError(f"partition parts must be positive, got {p}")
        return super().__new__(cls, items)

    @classmethod
    def _make(cls, parts: tuple[int, ...]) -> "IntPartition":
        # Fast path for tuples already sorted descending.
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "IntPartition":
        if not self:
            return IntPartition()
        cols = [sum(1 for p in self if p > j) for j in range(self[0])]
        return IntPartition(cols)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def __repr__(self) -> str:
        return f"IntPartition({list(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"


def _iter_partition_tuples(d: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    top = min(d, max_part)
    for first in range(top, 0, -1):
        for rest in _iter_partition_tuples(d - first, first):
            yield (first,) + rest


def iter_int_partitions(d: int) -> Iterator[IntPartition]:
    """Stream all partitions of d in descending lexicographic order."""
    if d < 0:
        raise DomainError("cannot partition a negative integer")
    for t in _iter_partition_tuples(d, d):
        yield IntPartition._make(t)


_ENUM_CACHE_MAX_D = 24
_enum_cache: dict[int, tuple[IntPartition, ...]] = {}


def enum_int_partitions(d: int) -> list[IntPartition]:
    """All partitions of d, each once, in descending lexicographic order."""
    if d < 0:
        raise DomainError("cannot partition a negative integer")
    if d in _enum_cache:
        return list(_enum_cache[d])
    result = list(iter_int_partitions(d))
    if d <= _ENUM_CACHE_MAX_D:
        _enum_cache[d] = tuple(result)
    return result


def _partitions_exact_parts(d: int, k: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Partitions of d into exactly k parts, each <= max_part."""
    if k == 0:
        if d == 0:
            yield ()
        return
    if d < k:
        return
    top = min(max_part, d - k + 1)
    for first in range(top, 0, -1):
        for rest in _partitions_exact_parts(d - first, k - 1, first):
            yield (first,) + rest


def enum_partitions_of_weight(w: int) -> list[IntPartition]:
    """All partitions lam with size(lam) + length(lam) = w.

    Empty for w = 1 (a nonempty partition has weight at least 2).
    """
    if w < 1:
        raise DomainError("weight must be >= 1")
    out: list[IntPartition] = []
    for ell in range(1, w // 2 + 1):
        d = w - ell
        for t in _partitions_exact_parts(d, ell, d):
            out.append(IntPartition._make(t))
    return out


# ---------------------------------------------------------------------------
# Set partitions
# ---------------------------------------------------------------------------

Blocks = tuple[tuple[int, ...], ...]


def _canonical_blocks(blocks: Iterable[Iterable[int]]) -> Blocks:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


@dataclass(frozen=True)
class SetPartition:
    """A partition of the ground set {1..n} into disjoint nonempty blocks."""

    blocks: Blocks
    n: int

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise DomainError("empty block in set partition")
            for x in b:
                if x in seen:
                    raise DomainError(f"element {x} appears in two blocks")
                seen.add(x)
        if seen != set(range(1, self.n + 1)):
            raise DomainError(f"blocks do not cover 1..{self.n}")
        object.__setattr__(self, "blocks", _canonical_blocks(self.blocks))

    @staticmethod
    def from_blocks(blocks: Iterable[Iterable[int]], n: int | None = None) -> "SetPartition":
        bl = _canonical_blocks(blocks)
        if n is None:
            n = sum(len(b) for b in bl)
        return SetPartition(bl, n)

    @staticmethod
    def one_block(n: int) -> "SetPartition":
        return SetPartition((tuple(range(1, n + 1)),), n)

    @staticmethod
    def discrete(n: int) -> "SetPartition":
        return SetPartition(tuple((i,) for i in range(1, n + 1)), n)

    @property
    def length(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> IntPartition:
        return IntPartition(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return "{" + " | ".join(",".join(map(str, b)) for b in self.blocks) + "}"


def _rgs_iter(n: int, max_blocks: int | None = None) -> Iterator[list[int]]:
    """Restricted-growth strings of length n, optionally with a block-count
    ceiling.  a[0] = 0 and a[i] <= max(a[0..i-1]) + 1."""
    a = [0] * n

    def rec(i: int, top: int) -> Iterator[list[int]]:
        if i == n:
            yield a
            return
        limit = top + 1 if max_blocks is None else min(top + 1, max_blocks - 1)
        for v in range(limit + 1):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0) if n > 0 else iter(())


def _rgs_to_partition(a: Sequence[int], n: int) -> SetPartition:
    nblocks = max(a) + 1
    blocks: list[list[int]] = [[] for _ in range(nblocks)]
    for i, v in enumerate(a):
        blocks[v].append(i + 1)
    return SetPartition(tuple(tuple(b) for b in blocks), n)


def enum_set_partitions(n: int, cap: int = DEFAULT_SET_PARTITION_CAP) -> list[SetPartition]:
    """All set partitions of {1..n} in restricted-growth-string order."""
    if n < 1:
        raise DomainError("ground set must have at least one element")
    if n > cap:
        raise ResourceCapError(f"set partition ground set {n} exceeds cap {cap}")
    if n == 1:
        return [SetPartition.discrete(1)]
    return [_rgs_to_partition(a, n) for a in _rgs_iter(n)]


def iter_set_partitions_with_blocks(n: int, k: int) -> Iterator[SetPartition]:
    """Set partitions of {1..n} with exactly k blocks."""
    if k < 1 or k > n:
        return
    if n == 1:
        yield SetPartition.discrete(1)
        return
    for a in _rgs_iter(n, max_blocks=k):
        if max(a) + 1 == k:
            yield _rgs_to_partition(a, n)


def set_partitions_of(items: Sequence) -> Iterator[tuple[tuple, ...]]:
    """Partitions of an arbitrary finite sequence of labels, as tuples of
    blocks.  Labels keep their original values; order is deterministic."""
    items = tuple(items)
    n = len(items)
    if n == 0:
        yield ()
        return
    for a in _rgs_iter(n):
        nblocks = max(a) + 1
        blocks: list[list] = [[] for _ in range(nblocks)]
        for i, v in enumerate(a):
            blocks[v].append(items[i])
        yield tuple(tuple(b) for b in blocks)


def _check_same_ground(a: SetPartition, b: SetPartition) -> None:
    if a.n != b.n:
        raise DomainError(f"ground set sizes differ: {a.n} vs {b.n}")


def meet(a: SetPartition, b: SetPartition) -> SetPartition:
    """The smallest partition whose blocks are unions of whole blocks of
    both arguments: the common-coarsening closure, computed as connected
    components of the union of the two block-membership relations."""
    _check_same_ground(a, b)
    parent = list(range(a.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for part in (a, b):
        for block in part.blocks:
            first = block[0]
            for x in block[1:]:
                union(first, x)

    groups: dict[int, list[int]] = {}
    for x in range(1, a.n + 1):
        groups.setdefault(find(x), []).append(x)
    return SetPartition(tuple(tuple(g) for g in groups.values()), a.n)


def is_transversal(a: SetPartition, b: SetPartition) -> bool:
    """True when length(a) + length(b) - length(meet(a,b)) equals n, the
    maximal possible value."""
    _check_same_ground(a, b)
    return a.length + b.length - meet(a, b).length == a.n


def is_complementary(a: SetPartition, rho: SetPartition) -> bool:
    """True when a is transversal to rho and their common coarsening is the
    one-block partition: a glues all of rho's blocks with the minimum
    number of merges."""
    _check_same_ground(a, rho)
    m = meet(a, rho)
    if m.length != 1:
        return False
    return a.length + rho.length - 1 == a.n


def enum_complementary(rho: SetPartition, cap: int = DEFAULT_SET_PARTITION_CAP) -> list[SetPartition]:
    """All partitions complementary to rho.

    Filters on block count first (a complementary partition must have
    exactly n - length(rho) + 1 blocks) before the coarsening test.
    """
    n = rho.n
    if n > cap:
        raise ResourceCapError(f"set partition ground set {n} exceeds cap {cap}")
    want = n - rho.length + 1
    out = []
    for alpha in iter_set_partitions_with_blocks(n, want):
        if meet(alpha, rho).length == 1:
            out.append(alpha)
    return out


def mobius_coeff(l: int) -> int:
    """(-1)^(l-1) (l-1)!, the inversion coefficient attached to a partition
    with l blocks when passing between all-products and connected parts."""
    if l < 1:
        raise DomainError("block count must be >= 1")
    sign = 1 if l % 2 == 1 else -1
    return sign * factorial(l - 1)
