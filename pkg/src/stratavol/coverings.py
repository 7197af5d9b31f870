"""Weighted counts of branched coverings of the torus.

A covering with branch profile m = (m_1, ..., m_s) is counted through the
character sum over partitions of the degree (the Burnside route), through
its generating q-series, and, for small degrees, through direct enumeration
of monodromy tuples in the symmetric group.  Connected counts come from the
all-coverings series by inclusion-exclusion over set partitions of the
branch points.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Iterable, Sequence

from .characters import central_char_f
from .config import DEFAULT_BRUTE_FORCE_CAP
from .errors import DomainError, ResourceCapError
from .partitions import (
    IntPartition,
    iter_int_partitions,
    mobius_coeff,
    set_partitions_of,
)
from .qseries import QSeries, euler_series

__all__ = [
    "CoverProfile",
    "CoverCountRecord",
    "cov_d",
    "cov_series",
    "cov_prime_series",
    "cov_connected_series",
    "brute_force_hom_count",
    "asymptotic_ratio",
    "euler_series",
]


class CoverProfile(tuple):
    """Branch point types: one cycle length >= 2 per marked point.

    The order of entries is preserved; points are labeled.
    """

    def __new__(cls, entries: Iterable[int] = ()):
        items = tuple(int(e) for e in entries)
        for e in items:
            if e < 2:
                raise DomainError(f"profile entries must be >= 2, got {e}")
        return super().__new__(cls, items)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self)


@dataclass(frozen=True)
class CoverCountRecord:
    profile: CoverProfile
    d: int
    kind: str  # "all" | "no-unramified" | "connected"
    count: Fraction

    def csv_row(self) -> str:
        return f"{self.profile};{self.d};{self.kind};{self.count}"


def _profile(profile) -> CoverProfile:
    return profile if isinstance(profile, CoverProfile) else CoverProfile(profile)


def cov_d(profile, d: int, threads: int | None = None) -> Fraction:
    """Weighted number of degree-d coverings with the given branch profile:
    the sum over partitions lam of d of the product of central characters.

    The empty profile counts all unramified coverings, one per partition
    of d.  Deterministic regardless of the worker count.
    """
    profile = _profile(profile)
    if d < 0:
        raise DomainError("degree must be nonnegative")
    if d == 0:
        return Fraction(1) if not profile else Fraction(0)

    def term(lam) -> Fraction:
        acc = Fraction(1)
        for m in profile:
            f = central_char_f(m, lam)
            if f == 0:
                return Fraction(0)
            acc *= f
        return acc

    if threads and threads > 1:
        lams = list(iter_int_partitions(d))
        chunk = max(1, len(lams) // threads)
        pieces = [lams[i : i + chunk] for i in range(0, len(lams), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            sums = list(pool.map(lambda piece: sum(term(l) for l in piece), pieces))
        return sum(sums, Fraction(0))
    return sum((term(lam) for lam in iter_int_partitions(d)), Fraction(0))


def cov_series(profile, order: int, threads: int | None = None) -> QSeries:
    """Generating series sum_d cov_d(profile) q^d, truncated."""
    return QSeries.from_coeffs(
        [cov_d(profile, d, threads=threads) for d in range(order + 1)]
    )


def cov_prime_series(profile, order: int, threads: int | None = None) -> QSeries:
    """Series for coverings without unramified connected components:
    the raw covering series times prod (1 - q^n)."""
    profile = _profile(profile)
    if order < 0:
        raise DomainError("order must be nonnegative")
    return euler_series(order) * cov_series(profile, order, threads=threads)


def cov_connected_series(profile, order: int, threads: int | None = None) -> QSeries:
    """Series counting connected coverings, by inclusion-exclusion over set
    partitions of the branch points applied to the no-unramified series."""
    profile = _profile(profile)
    s = len(profile)
    if s < 1:
        raise DomainError("connected counts need at least one branch point")
    prime_cache: dict[tuple[int, ...], QSeries] = {}

    def prime_for(indices: tuple[int, ...]) -> QSeries:
        key = tuple(sorted(profile[i] for i in indices))
        if key not in prime_cache:
            prime_cache[key] = cov_prime_series(key, order, threads=threads)
        return prime_cache[key]

    total = QSeries.zero(order)
    for alpha in set_partitions_of(range(s)):
        coeff = mobius_coeff(len(alpha))
        prod = QSeries.one(order)
        for block in alpha:
            prod = prod * prime_for(block)
        total = total + coeff * prod
    return total


# ---------------------------------------------------------------------------
# Brute-force monodromy enumeration
# ---------------------------------------------------------------------------

Perm = tuple[int, ...]


def _compose(p: Perm, q: Perm) -> Perm:
    # (p o q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(p)))


def _inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def _cycle_type(p: Perm) -> tuple[int, ...]:
    n = len(p)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        ln = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            ln += 1
        lengths.append(ln)
    lengths.sort(reverse=True)
    return tuple(lengths)


def _class_elements(d: int, m: int) -> list[Perm]:
    """All permutations of {0..d-1} with one m-cycle and d-m fixed points."""
    target = (m,) + (1,) * (d - m)
    return [p for p in permutations(range(d)) if _cycle_type(p) == target]


def _is_transitive(gens: Sequence[Perm], d: int) -> bool:
    seen = [False] * d
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == d


def brute_force_hom_count(
    profile,
    d: int,
    connected_only: bool = False,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
) -> Fraction:
    """Count monodromy tuples (a, b, g_1, ..., g_s) with g_i in the i-th
    branch class and a b a^-1 b^-1 g_1 ... g_s = id, divided by d!.

    With ``connected_only`` the generated subgroup must act transitively.
    Enumerates a, b and all but the last branch element, solving for the
    last one; the division by d! reproduces the weighting of coverings by
    the reciprocal of their automorphism group order.
    """
    profile = _profile(profile)
    if d < 1:
        raise DomainError("degree must be positive")
    if d > cap:
        raise ResourceCapError(f"brute-force degree {d} exceeds cap {cap}")
    for m in profile:
        if m > d:
            return Fraction(0)

    perms = list(permutations(range(d)))
    classes = [_class_elements(d, m) for m in profile]
    s = len(profile)
    last_type = ((profile[-1],) + (1,) * (d - profile[-1])) if s else None

    count = 0
    for a in perms:
        a_inv = _inverse(a)
        for b in perms:
            # commutator a b a^-1 b^-1
            w = _compose(_compose(a, b), _compose(a_inv, _inverse(b)))
            if s == 0:
                if w == tuple(range(d)) and (
                    not connected_only or _is_transitive((a, b), d)
                ):
                    count += 1
                continue

            def rec(i: int, prefix: Perm, chosen: tuple[Perm, ...]) -> int:
                if i == s - 1:
                    g_last = _inverse(prefix)
                    if _cycle_type(g_last) != last_type:
                        return 0
                    if connected_only and not _is_transitive(
                        (a, b) + chosen + (g_last,), d
                    ):
                        return 0
                    return 1
                acc = 0
                for g in classes[i]:
                    acc += rec(i + 1, _compose(prefix, g), chosen + (g,))
                return acc

            count += rec(0, w, ())
    return Fraction(count, factorial(d))


def asymptotic_ratio(profile, D: int, threads: int | None = None) -> Fraction:
    """Finite-degree version of the normalized partial sums whose limit is
    the leading constant of connected covering counts:

        (|m|+1) * D^(-|m|-1) * sum_{d<=D} (connected count at degree d).

    Exact rational; the caller compares it against the limit evaluated at a
    high-precision rational approximation of pi.
    """
    profile = _profile(profile)
    if D < 1:
        raise DomainError("degree bound must be >= 1")
    total_weight = sum(profile)
    series = cov_connected_series(profile, D, threads=threads)
    partial = sum(series.coeffs[1:], Fraction(0))
    return (total_weight + 1) * Fraction(partial, 1) / Fraction(D ** (total_weight + 1))
