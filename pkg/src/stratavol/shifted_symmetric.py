"""Regularized power sums on partitions and their q-averages.

The generator p_k evaluates on a partition lam as a finite sum over the
rows plus a zeta-regularization constant; monomials p_lam form the working
basis, graded by weight(lam) = size + length.  The q-average of p_mu is the
normalized sum over all partitions weighted by q^size, an exact truncated
q-series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exact_arith import zeta_neg
from .partitions import IntPartition, enum_partitions_of_weight, iter_int_partitions
from .qseries import QSeries, euler_series


def weight(mu) -> int:
    """size + length; zero for the empty partition."""
    mu = IntPartition(mu)
    return mu.size + mu.length


def p_eval(k: int, lam) -> Fraction:
    """Value of the k-th regularized power sum on a partition.

    Only rows of lam contribute to the bracket sum (rows beyond the length
    cancel identically), so the evaluation is a finite exact sum plus the
    constant (1 - 2^-k) zeta(-k).
    """
    if k < 1:
        raise DomainError(f"power sum index must be >= 1, got {k}")
    lam = IntPartition(lam)
    half = Fraction(1, 2)
    acc = Fraction(0)
    for i, part in enumerate(lam, start=1):
        acc += (part - i + half) ** k - (-i + half) ** k
    return acc + (1 - Fraction(1, 2**k)) * zeta_neg(k)


def q_average(mu, order: int) -> QSeries:
    """Truncated q-series of the average of prod_i p_{mu_i} over partitions
    weighted by q^size, normalized so the average of 1 is 1."""
    if order < 0:
        raise DomainError("order must be nonnegative")
    mu = IntPartition(mu)
    raw = []
    for d in range(order + 1):
        acc = Fraction(0)
        for lam in iter_int_partitions(d):
            term = Fraction(1)
            for k in mu:
                term *= p_eval(k, lam)
            acc += term
        raw.append(acc)
    return euler_series(order) * QSeries.from_coeffs(raw)


@dataclass(frozen=True)
class PExpansion:
    """A finite linear combination of power-sum monomials, keyed by the
    index partition.  No zero coefficients are stored."""

    terms: tuple[tuple[IntPartition, Fraction], ...]

    @staticmethod
    def from_dict(data: dict[IntPartition, Fraction]) -> "PExpansion":
        cleaned = [(lam, Fraction(c)) for lam, c in data.items() if c != 0]
        cleaned.sort(key=lambda item: (-item[0].size, item[0]))
        return PExpansion(tuple(cleaned))

    def as_dict(self) -> dict[IntPartition, Fraction]:
        return dict(self.terms)

    def coefficient(self, lam) -> Fraction:
        lam = IntPartition(lam)
        for key, c in self.terms:
            if key == lam:
                return c
        return Fraction(0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for i, (lam, c) in enumerate(self.terms):
            mono = "p[" + ",".join(str(p) for p in lam) + "]"
            if i == 0:
                sign = "-" if c < 0 else ""
            else:
                sign = " - " if c < 0 else " + "
            chunks.append(f"{sign}{abs(c)} {mono}")
        return "".join(chunks)


def f_top_expansion(k: int) -> PExpansion:
    """Top-weight part of the central character generator of k-cycles in
    the power-sum basis: a sum over partitions of weight k+1 with
    coefficient (-k)^(length-1) / (k * prod of multiplicity factorials).

    Lower-weight terms are not produced; leading-order computations
    downstream depend only on this part.
    """
    if k < 2:
        raise DomainError(f"expansion needs k >= 2, got {k}")
    terms: dict[IntPartition, Fraction] = {}
    for lam in enum_partitions_of_weight(k + 1):
        coeff = Fraction((-k) ** (lam.length - 1), k)
        for mult in lam.multiplicities().values():
            denom = 1
            for j in range(2, mult + 1):
                denom *= j
            coeff /= denom
        terms[lam] = coeff
    return PExpansion.from_dict(terms)
