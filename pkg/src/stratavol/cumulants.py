"""Leading asymptotic constants of connected covering counts and the exact
volumes of strata of holomorphic differentials.

The pipeline: connected averages of products of power sums have a leading
coefficient (the elementary cumulant) given by a closed sum over set
partitions with explicit rational-times-pi-power terms; a Wick-type rule
reduces grouped averages to products of elementary cumulants over
complementary set partitions; expanding the central character generators in
the power-sum basis then yields the constant c(m), and volumes follow by a
shift and a dimension division.  Every stage has an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial
from typing import Iterator, Sequence

from . import mvpoly
from .config import DEFAULT_SET_PARTITION_CAP
from .errors import DomainError, ResourceCapError
from .exact_arith import PiScalar, frak_z, frak_z_over_pi
from .partitions import (
    IntPartition,
    SetPartition,
    enum_complementary,
    set_partitions_of,
)
from .shifted_symmetric import f_top_expansion

SERIES_ORACLE_CAP = 4
FOREST_ORACLE_CAP = 5


def _canon_key(m) -> tuple[int, ...]:
    key = tuple(sorted((int(v) for v in m), reverse=True))
    if not key:
        raise DomainError("cumulant key must be nonempty")
    if key[-1] < 1:
        raise DomainError("cumulant key entries must be >= 1")
    return key


def _bounded_compositions(
    total: int, bounds: Sequence[int]
) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into len(bounds) parts with 0 <= part_k <=
    bounds[k]."""
    n = len(bounds)

    def rec(i: int, rem: int) -> Iterator[tuple[int, ...]]:
        if i == n - 1:
            if 0 <= rem <= bounds[i]:
                yield (rem,)
            return
        hi = min(bounds[i], rem)
        for v in range(hi + 1):
            for rest in rec(i + 1, rem - v):
                yield (v,) + rest

    if total < 0:
        return
    yield from rec(0, total)


def elementary_cumulant(m, cap: int = DEFAULT_SET_PARTITION_CAP) -> PiScalar:
    """Leading coefficient of the fully connected average of the power sums
    indexed by m = (m_1, ..., m_n).

    Computed as a sum over set partitions alpha of the index set: the
    one-block term is |m|! frak_z(|m| - n + 2); a term with l >= 2 blocks
    carries sign (-1)^(l-1), the multinomial (l-2)!/prod(d_k!) over
    nonnegative d with sum d_k = l - 2, and per block the factor
    |m_block|! frak_z(|m_block| - #block - d_k + 1).  Compositions d are
    enumerated with the parity and nonnegativity of the frak_z argument
    enforced up front.
    """
    key = _canon_key(m)
    n = len(key)
    if n > cap:
        raise ResourceCapError(f"cumulant key with {n} parts exceeds cap {cap}")
    total_size = sum(key)
    result = PiScalar.zero()

    for alpha in set_partitions_of(range(n)):
        ell = len(alpha)
        msums = [sum(key[i] for i in block) for block in alpha]
        bsizes = [len(block) for block in alpha]

        if ell == 1:
            result = result + factorial(total_size) * frak_z(total_size - n + 2)
            continue

        # d_k must have fixed parity and stay below the bound that keeps the
        # frak_z argument nonnegative; write d_k = parity_k + 2 e_k.
        parities = [(1 + msums[k] - bsizes[k]) % 2 for k in range(ell)]
        bounds = [msums[k] - bsizes[k] + 1 for k in range(ell)]
        excess = ell - 2 - sum(parities)
        if excess < 0 or excess % 2 == 1:
            continue
        e_bounds = [(bounds[k] - parities[k]) // 2 for k in range(ell)]
        if any(b < 0 for b in e_bounds):
            continue

        sign = 1 if ell % 2 == 1 else -1
        prefactor = sign * factorial(ell - 2)
        block_fact = 1
        for msum in msums:
            block_fact *= factorial(msum)

        for e in _bounded_compositions(excess // 2, e_bounds):
            # The parity and bound filters guarantee every frak_z argument
            # is even and nonnegative, so no factor vanishes here.
            term = PiScalar(Fraction(prefactor * block_fact), 0)
            for k in range(ell):
                d_k = parities[k] + 2 * e[k]
                term = term * frak_z(msums[k] - bsizes[k] - d_k + 1)
                term = term / factorial(d_k)
            result = result + term
    return result


def elementary_cumulant_series_oracle(m, cap: int = SERIES_ORACLE_CAP) -> PiScalar:
    """Recompute the elementary cumulant by multivariate series expansion.

    Builds, per set partition alpha, the product of per-block series
    sum_j frak_z(j) (block sum)^(j + #block - 1) times the tree factor
    (-1)^(l-1) (sum of all variables)^(l-2), extracts the coefficient of
    x^m, and multiplies by m!.  Independent of the composition-sum route.
    """
    key = _canon_key(m)
    n = len(key)
    if n > cap:
        raise ResourceCapError(f"series oracle supports at most {cap} parts, got {n}")
    total_size = sum(key)
    max_deg = total_size
    target = key  # exponent tuple in variable order

    total = Fraction(0)
    all_vars = mvpoly.linear(n, range(n))
    for alpha in set_partitions_of(range(n)):
        ell = len(alpha)
        if ell == 1:
            # tree factor is 1; series is sum_j frak_z(j) (sum x)^(j+n-2)
            poly = mvpoly.zero()
            for j in range(0, max_deg - n + 3):
                exp = j + n - 2
                if exp < 0 or exp > max_deg:
                    continue
                zj = frak_z_over_pi(j)
                if zj == 0:
                    continue
                poly = mvpoly.add_scaled(
                    poly, mvpoly.power(all_vars, exp, n, max_deg), zj
                )
            total += mvpoly.coefficient(poly, target)
            continue

        sign = Fraction(1 if ell % 2 == 1 else -1)
        poly = mvpoly.power(all_vars, ell - 2, n, max_deg)
        for block in alpha:
            bsum = mvpoly.linear(n, block)
            bseries = mvpoly.zero()
            for j in range(0, max_deg + 2):
                exp = j + len(block) - 1
                if exp > max_deg:
                    break
                zj = frak_z_over_pi(j)
                if zj == 0:
                    continue
                bseries = mvpoly.add_scaled(
                    bseries, mvpoly.power(bsum, exp, n, max_deg), zj
                )
            poly = mvpoly.mul(poly, bseries, max_deg)
        total += sign * mvpoly.coefficient(poly, target)

    m_factorial = 1
    for v in key:
        m_factorial *= factorial(v)
    return PiScalar(m_factorial * total, total_size - n + 2)


def t_poly_forest_oracle(rho: SetPartition, cap: int = FOREST_ORACLE_CAP) -> bool:
    """Check the polynomial identity between the closed form of the tree
    factor attached to rho and its expansion as a sum over spanning
    forests: forests on {1..n} with length(rho)-1 edges that connect all
    blocks of rho, each contributing the product of x_i x_j over edges."""
    n = rho.n
    if n > cap:
        raise ResourceCapError(f"forest oracle supports at most {cap} points, got {n}")
    ell = rho.length

    # Closed form: (-1)^(l-1) (sum x)^(l-2) prod_blocks (block sum); equal
    # to 1 when there is a single block.
    if ell == 1:
        closed = mvpoly.const(n, 1)
    else:
        sign = 1 if ell % 2 == 1 else -1
        closed = mvpoly.power(mvpoly.linear(n, range(n)), ell - 2, n)
        for block in rho.blocks:
            closed = mvpoly.mul(closed, mvpoly.linear(n, [i - 1 for i in block]))
        closed = mvpoly.add_scaled(mvpoly.zero(), closed, Fraction(sign))

    # Forest sum over (l-1)-subsets of cross-block edges whose contraction
    # is a spanning tree on the blocks.
    block_of = {}
    for bi, block in enumerate(rho.blocks):
        for x in block:
            block_of[x] = bi
    cross_edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if block_of[i] != block_of[j]
    ]
    sign = Fraction(1 if ell % 2 == 1 else -1)
    forest_sum = mvpoly.zero()
    for edges in combinations(cross_edges, ell - 1):
        parent = list(range(ell))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for i, j in edges:
            ri, rj = find(block_of[i]), find(block_of[j])
            if ri == rj:
                acyclic = False
                break
            parent[ri] = rj
        if not acyclic:
            continue
        mono_poly = mvpoly.const(n, 1)
        for i, j in edges:
            mono_poly = mvpoly.mul(mono_poly, mvpoly.variable(n, i - 1))
            mono_poly = mvpoly.mul(mono_poly, mvpoly.variable(n, j - 1))
        forest_sum = mvpoly.add_scaled(forest_sum, mono_poly, sign)

    return closed == forest_sum


@dataclass(frozen=True)
class WickGroups:
    """An ordered list of partitions whose parts are jointly labeled
    1..n; the grouping partition has one block per consecutive range."""

    groups: tuple[IntPartition, ...]

    def __post_init__(self) -> None:
        if not self.groups:
            raise DomainError("need at least one group")
        groups = tuple(IntPartition(g) for g in self.groups)
        for g in groups:
            if not g:
                raise DomainError("groups must be nonempty partitions")
        object.__setattr__(self, "groups", groups)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(p for g in self.groups for p in g)

    @property
    def n(self) -> int:
        return sum(g.length for g in self.groups)

    @property
    def rho(self) -> SetPartition:
        blocks = []
        start = 1
        for g in self.groups:
            blocks.append(tuple(range(start, start + g.length)))
            start += g.length
        return SetPartition(tuple(blocks), self.n)


@dataclass(frozen=True)
class WickLeading:
    value: PiScalar
    hbar_exponent: int


def wick_leading(groups, cap: int = DEFAULT_SET_PARTITION_CAP) -> WickLeading:
    """Leading coefficient of the grouped connected average of power sums:
    the sum, over set partitions complementary to the grouping, of the
    product of elementary cumulants of the parts collected per block.

    The accompanying exponent (sum of (part+1) over all parts, minus the
    number of groups, plus one) is returned as metadata; homogeneity of the
    pi power across contributing terms is enforced by exact addition.
    """
    wg = groups if isinstance(groups, WickGroups) else WickGroups(tuple(groups))
    n = wg.n
    if n > cap:
        raise ResourceCapError(f"total part count {n} exceeds cap {cap}")
    parts = wg.parts
    rho = wg.rho
    exponent = sum(p + 1 for p in parts) - rho.length + 1

    total = PiScalar.zero()
    for alpha in enum_complementary(rho, cap=cap):
        prod_value = PiScalar(Fraction(1), 0)
        for block in alpha.blocks:
            sub = tuple(parts[i - 1] for i in block)
            prod_value = prod_value * elementary_cumulant(sub, cap=cap)
            if prod_value.is_zero():
                break
        total = total + prod_value
    return WickLeading(value=total, hbar_exponent=exponent)


def f_cumulant_leading(m, cap: int = DEFAULT_SET_PARTITION_CAP) -> PiScalar:
    """Leading coefficient of the connected average of the central
    character generators indexed by m: expand each generator in its
    top-weight power-sum terms, distribute multilinearly, and apply the
    Wick rule to every choice.  All choices share the same leading
    exponent |m| + 1, which is asserted."""
    key = _canon_key(m)
    if key[-1] < 2:
        raise DomainError("generator indices must be >= 2")
    expansions = [f_top_expansion(k).terms for k in key]
    expected_exponent = sum(key) + 1

    total = PiScalar.zero()
    for choice in product(*expansions):
        coeff = Fraction(1)
        groups = []
        for lam, c in choice:
            coeff *= c
            groups.append(lam)
        wl = wick_leading(WickGroups(tuple(groups)), cap=cap)
        if wl.hbar_exponent != expected_exponent:
            raise RuntimeError(
                f"leading exponent mismatch: {wl.hbar_exponent} != {expected_exponent}"
            )
        total = total + wl.value * coeff
    return total


def c_const(m, cap: int = DEFAULT_SET_PARTITION_CAP) -> PiScalar:
    """The leading asymptotic constant of connected covering counts with
    branch profile m (entries >= 2), symmetric in m."""
    key = _canon_key(m)
    return f_cumulant_leading(key, cap=cap) / factorial(sum(key))


def _odd_double_factorial(v: int) -> int:
    out = 1
    while v > 1:
        out *= v
        v -= 2
    return out


def _even_partitions(total: int) -> Iterator[tuple[int, ...]]:
    def rec(rem: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        top = min(rem, max_part)
        if top % 2 == 1:
            top -= 1
        while top >= 2:
            for rest in rec(rem - top, top):
                yield (top,) + rest
            top -= 2

    yield from rec(total, total)


def c_simple(n: int) -> PiScalar:
    """The constant for n simple branch points, via the closed form that
    sums over partitions of n + 2 into even parts only:

        c / n! = sum (-1)^(l-1) / (kappa! (2n - l + 2)!)
                 * prod (2 mu_i - 3)!!  * prod frak_z(mu_i)

    with l the number of parts and kappa! the product of multiplicity
    factorials.  Vanishes for odd n, where no such partition exists.
    """
    if n < 1:
        raise DomainError(f"need at least one branch point, got {n}")
    total = PiScalar.zero()
    for mu in _even_partitions(n + 2):
        ell = len(mu)
        mult_fact = 1
        counts: dict[int, int] = {}
        for p in mu:
            counts[p] = counts.get(p, 0) + 1
        for c in counts.values():
            mult_fact *= factorial(c)
        coeff = Fraction((-1) ** (ell - 1), mult_fact * factorial(2 * n - ell + 2))
        term = PiScalar(coeff, 0)
        for p in mu:
            term = term * _odd_double_factorial(2 * p - 3) * frak_z(p)
        total = total + term
    return total * factorial(n)


# ---------------------------------------------------------------------------
# Stratum volumes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StratumSpec:
    """Zero multiplicities of a holomorphic differential: positive parts
    with even total 2g - 2 >= 2."""

    mu: IntPartition

    def __post_init__(self) -> None:
        mu = IntPartition(self.mu)
        if not mu:
            raise DomainError("stratum needs at least one zero")
        if mu.size % 2 != 0:
            raise DomainError(f"no such stratum: |mu| = {mu.size} must be even")
        object.__setattr__(self, "mu", mu)

    @property
    def genus(self) -> int:
        return self.mu.size // 2 + 1

    @property
    def dim(self) -> int:
        return 2 * self.genus + self.mu.length - 1


ROUTE_GENERAL = "general"
ROUTE_SIMPLE = "simple-closed-form"


@dataclass(frozen=True)
class VolumeResult:
    mu: IntPartition
    genus: int
    dim: int
    volume: PiScalar
    c_const: PiScalar
    route: str

    def as_json_dict(self) -> dict:
        return {
            "mu": list(self.mu),
            "genus": self.genus,
            "dim": self.dim,
            "c": self.c_const.as_json_dict(),
            "volume": self.volume.as_json_dict(),
            "route": self.route,
        }


def volume(mu, cross_check: bool = False, cap: int = DEFAULT_SET_PARTITION_CAP) -> VolumeResult:
    """Exact normalized volume of the stratum with zero multiplicities mu.

    Genus is |mu|/2 + 1, the dimension is 2 genus + length - 1, and the
    volume is the covering constant of the shifted profile mu + (1,...,1)
    divided by the dimension.  For mu = (1,...,1) the closed form for
    simple branching is used; ``cross_check`` additionally runs the general
    pipeline and requires exact agreement.
    """
    spec = mu if isinstance(mu, StratumSpec) else StratumSpec(IntPartition(mu))
    shifted = tuple(p + 1 for p in spec.mu)
    if all(p == 1 for p in spec.mu):
        c_value = c_simple(spec.mu.length)
        route = ROUTE_SIMPLE
        if cross_check:
            general = c_const(shifted, cap=cap)
            if general != c_value:
                raise RuntimeError(
                    f"route disagreement for mu={spec.mu}: {general} vs {c_value}"
                )
    else:
        c_value = c_const(shifted, cap=cap)
        route = ROUTE_GENERAL
    vol = c_value / spec.dim
    return VolumeResult(
        mu=spec.mu,
        genus=spec.genus,
        dim=spec.dim,
        volume=vol,
        c_const=c_value,
        route=route,
    )
