"""Exact q-series check of the one-point function determinant identity.

The odd theta series has q-exponents (2n+1)^2/8, so all series here are
graded in eighths of a power of q.  The formal variable x is specialized to
a rational value s = e^(x/2), which turns every q-coefficient into one
exact rational; the identity  theta(x) * F(x) = theta'(0)  is then checked
coefficientwise in cross-multiplied form, avoiding series division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .partitions import iter_int_partitions
from .qseries import euler_series


@dataclass(frozen=True)
class GradedQSeries:
    """Truncated q-series with exponents stored as integer multiples of
    1/8.  ``cap_eighths`` is the largest retained exponent; arithmetic
    truncates to the smaller cap of the operands."""

    terms: tuple[tuple[int, Fraction], ...]
    cap_eighths: int

    def __post_init__(self) -> None:
        cleaned = tuple(
            sorted((e, Fraction(c)) for e, c in self.terms if c != 0 and e <= self.cap_eighths)
        )
        object.__setattr__(self, "terms", cleaned)

    @staticmethod
    def from_dict(data: dict[int, Fraction], cap_eighths: int) -> "GradedQSeries":
        return GradedQSeries(tuple(data.items()), cap_eighths)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def coefficient_eighths(self, e: int) -> Fraction:
        for ee, c in self.terms:
            if ee == e:
                return c
        return Fraction(0)

    def lowest_term(self) -> tuple[int, Fraction] | None:
        return self.terms[0] if self.terms else None

    def truncate(self, cap_eighths: int) -> "GradedQSeries":
        return GradedQSeries(self.terms, min(self.cap_eighths, cap_eighths))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GradedQSeries") -> "GradedQSeries":
        cap = min(self.cap_eighths, other.cap_eighths)
        acc = {e: c for e, c in self.terms if e <= cap}
        for e, c in other.terms:
            if e <= cap:
                acc[e] = acc.get(e, Fraction(0)) + c
        return GradedQSeries.from_dict(acc, cap)

    def __neg__(self) -> "GradedQSeries":
        return GradedQSeries(tuple((e, -c) for e, c in self.terms), self.cap_eighths)

    def __sub__(self, other: "GradedQSeries") -> "GradedQSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GradedQSeries):
            cap = min(self.cap_eighths, other.cap_eighths)
            acc: dict[int, Fraction] = {}
            for e1, c1 in self.terms:
                for e2, c2 in other.terms:
                    e = e1 + e2
                    if e > cap:
                        break  # other.terms sorted ascending
                    acc[e] = acc.get(e, Fraction(0)) + c1 * c2
            return GradedQSeries.from_dict(acc, cap)
        if isinstance(other, (int, Fraction)):
            return GradedQSeries(
                tuple((e, c * other) for e, c in self.terms), self.cap_eighths
            )
        return NotImplemented

    __rmul__ = __mul__


@dataclass(frozen=True)
class EvaluatedPoint:
    """A rational value for e^(x/2).  Values 0 and +-1 are excluded: they
    sit on the zero of the theta factor and the pole of the row sum at
    x = 0."""

    s: Fraction

    def __post_init__(self) -> None:
        s = Fraction(self.s)
        if s in (0, 1, -1):
            raise DomainError(f"evaluation point must avoid 0 and +-1, got {s}")
        object.__setattr__(self, "s", s)


def theta_series(s, deriv_order: int = 0, order: int = 0) -> GradedQSeries:
    """The odd theta series, differentiated ``deriv_order`` times in x and
    evaluated at e^(x/2) = s:

        sum_n (-1)^n (n + 1/2)^deriv_order q^((2n+1)^2/8) s^(2n+1),

    truncated to q-exponents at most order + 1/8.  Any nonzero rational s
    is accepted; s = 1 gives the value (and derivatives) at x = 0.
    """
    s = s.s if isinstance(s, EvaluatedPoint) else Fraction(s)
    if s == 0:
        raise DomainError("evaluation point must be nonzero")
    if deriv_order < 0:
        raise DomainError("derivative order must be nonnegative")
    if order < 0:
        raise DomainError("order must be nonnegative")
    cap = 8 * order + 1
    acc: dict[int, Fraction] = {}
    n = 0
    while (2 * n + 1) ** 2 <= cap:
        for nn in (n, -n - 1):
            e = (2 * nn + 1) ** 2  # same for both, kept explicit
            sign = 1 if nn % 2 == 0 else -1
            coeff = sign * Fraction(2 * nn + 1, 2) ** deriv_order * s ** (2 * nn + 1)
            acc[e] = acc.get(e, Fraction(0)) + coeff
        n += 1
    return GradedQSeries.from_dict(acc, cap)


def theta_prime_zero(order: int) -> GradedQSeries:
    """Derivative of the theta series at x = 0."""
    return theta_series(Fraction(1), deriv_order=1, order=order)


def _row_sum_at(s: Fraction, lam) -> Fraction:
    """Value at e^(x/2) = s of sum_i e^((lam_i - i + 1/2) x): a finite part
    over the rows of lam plus the geometric tail in closed form.  Needs
    |s| > 1 for the tail to be summable."""
    acc = Fraction(0)
    ell = len(lam)
    for i, part in enumerate(lam, start=1):
        acc += s ** (2 * (part - i) + 1)
    # tail over i > ell: s^(1-2i) summed in closed form
    acc += s ** (-2 * ell - 1) / (1 - s ** (-2))
    return acc


def direct_one_point(point: EvaluatedPoint, order: int) -> GradedQSeries:
    """The one-point function from its definition: the normalized sum over
    all partitions of q^size times the row sum evaluated at s, exact to the
    given order.  Exponents are whole powers of q."""
    if not isinstance(point, EvaluatedPoint):
        point = EvaluatedPoint(Fraction(point))
    s = point.s
    if abs(s) <= 1:
        raise DomainError(f"need |s| > 1 for the tail to converge, got {s}")
    if order < 0:
        raise DomainError("order must be nonnegative")
    raw = []
    for d in range(order + 1):
        acc = Fraction(0)
        for lam in iter_int_partitions(d):
            acc += _row_sum_at(s, lam)
        raw.append(acc)
    norm = euler_series(order)
    coeffs = [
        sum((norm.coeffs[i] * raw[d - i] for i in range(d + 1)), Fraction(0))
        for d in range(order + 1)
    ]
    return GradedQSeries.from_dict(
        {8 * d: c for d, c in enumerate(coeffs)}, 8 * order
    )


def verify_theorem1_n1(point: EvaluatedPoint, order: int) -> bool:
    """Check theta(at s) * (direct one-point series) = theta'(0) as graded
    q-series through the given order, in cross-multiplied form."""
    if not isinstance(point, EvaluatedPoint):
        point = EvaluatedPoint(Fraction(point))
    lhs = theta_series(point.s, 0, order) * direct_one_point(point, order)
    rhs = theta_prime_zero(order).truncate(lhs.cap_eighths)
    return lhs.terms == rhs.terms
