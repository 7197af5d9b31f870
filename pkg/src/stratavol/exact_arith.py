"""Exact rational arithmetic with a symbolically tracked power of pi.

Every quantity produced by this package is a rational number times an
integer power of pi.  ``PiScalar`` stores the pair (coefficient, pi power)
exactly; ``PiSum`` is the inhomogeneous safety net that keeps distinct pi
powers separate.  The module also provides the handful of special constants
everything else is built from: Bernoulli numbers, zeta at even positive and
at negative integers, and the even-coefficient sequence ``frak_z`` of the
Taylor expansion of pi*x/sin(pi*x).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .config import DEFAULT_BERNOULLI_MEMO_CAP
from .errors import DomainError

# 50 decimal digits of pi, used only for optional numeric annotations and
# convergence comparisons.  Core results never evaluate pi.
PI_50_DIGITS = "3.14159265358979323846264338327950288419716939937510"


def pi_approx() -> Fraction:
    """Rational approximation of pi accurate to 50 decimal digits."""
    digits = PI_50_DIGITS.replace(".", "")
    return Fraction(int(digits), 10 ** (len(digits) - 1))


# ---------------------------------------------------------------------------
# Bernoulli numbers and zeta values
# ---------------------------------------------------------------------------

_bernoulli_lock = threading.Lock()
_bernoulli_memo: dict[int, Fraction] = {0: Fraction(1), 1: Fraction(-1, 2)}


def bernoulli(n: int, memo_cap: int = DEFAULT_BERNOULLI_MEMO_CAP) -> Fraction:
    """Bernoulli number B_n with the convention B_1 = -1/2.

    Uses the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0, filled bottom-up.
    Values up to ``memo_cap`` are memoized; larger indices are computed on
    demand without being stored.
    """
    if n < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    cached = _bernoulli_memo.get(n)
    if cached is not None:
        return cached
    if n % 2 == 1:
        return Fraction(0)
    values = dict(_bernoulli_memo)
    for m in range(2, n + 1, 2):
        if m in values:
            continue
        # odd indices above 1 contribute nothing to the recurrence
        acc = comb(m + 1, 1) * values[1]
        for k in range(0, m, 2):
            b = values[k]
            if b:
                acc += comb(m + 1, k) * b
        values[m] = -acc / (m + 1)
    value = values[n]
    with _bernoulli_lock:
        # Idempotent inserts; concurrent writers land identical values.
        for m, v in values.items():
            if m <= memo_cap and m not in _bernoulli_memo:
                _bernoulli_memo[m] = v
    return value


def zeta_even_over_pi(k: int) -> Fraction:
    """zeta(k)/pi^k for even k >= 2, as an exact rational.

    Realized through zeta(2j) = (-1)^(j+1) B_{2j} (2 pi)^(2j) / (2 (2j)!).
    """
    if k < 2 or k % 2 != 0:
        raise DomainError(f"zeta_even_over_pi needs even k >= 2, got {k}")
    j = k // 2
    sign = 1 if j % 2 == 1 else -1
    return Fraction(sign * 2**k, 2 * factorial(k)) * bernoulli(k)


def zeta_neg(k: int) -> Fraction:
    """zeta(-k) = -B_{k+1}/(k+1) for integer k >= 1."""
    if k < 1:
        raise DomainError(f"zeta_neg needs k >= 1, got {k}")
    return -bernoulli(k + 1) / (k + 1)


# ---------------------------------------------------------------------------
# PiScalar and PiSum
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiScalar:
    """An exact rational multiplied by a nonnegative integer power of pi.

    Zero is canonical: coefficient 0 always carries pi power 0.  Addition is
    defined only between compatible powers (or with zero); anything else is
    an error so that accidental loss of the symbolic power cannot happen.
    """

    coeff: Fraction
    pi_pow: int = 0

    def __post_init__(self) -> None:
        coeff = self.coeff if isinstance(self.coeff, Fraction) else Fraction(self.coeff)
        pi_pow = self.pi_pow
        if pi_pow < 0:
            raise DomainError("pi power must be nonnegative")
        if coeff == 0:
            pi_pow = 0
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "pi_pow", pi_pow)

    @staticmethod
    def zero() -> "PiScalar":
        return PiScalar(Fraction(0), 0)

    @staticmethod
    def rational(value) -> "PiScalar":
        return PiScalar(Fraction(value), 0)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __bool__(self) -> bool:
        return self.coeff != 0

    def __add__(self, other: "PiScalar") -> "PiScalar":
        if not isinstance(other, PiScalar):
            return NotImplemented
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.pi_pow != other.pi_pow:
            raise ValueError(
                f"cannot add pi^{self.pi_pow} and pi^{other.pi_pow} terms "
                "exactly; use PiSum"
            )
        return PiScalar(self.coeff + other.coeff, self.pi_pow)

    def __sub__(self, other: "PiScalar") -> "PiScalar":
        return self + (-other)

    def __neg__(self) -> "PiScalar":
        return PiScalar(-self.coeff, self.pi_pow)

    def __mul__(self, other):
        if isinstance(other, PiScalar):
            return PiScalar(self.coeff * other.coeff, self.pi_pow + other.pi_pow)
        if isinstance(other, (int, Fraction)):
            return PiScalar(self.coeff * other, self.pi_pow)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of PiScalar by zero")
            return PiScalar(self.coeff / other, self.pi_pow)
        return NotImplemented

    def approx(self, pi_value: Fraction | None = None) -> Fraction:
        """Numeric value at a rational approximation of pi (default 50 digits)."""
        pv = pi_value if pi_value is not None else pi_approx()
        return self.coeff * pv**self.pi_pow

    def as_json_dict(self) -> dict:
        return {
            "num": str(self.coeff.numerator),
            "den": str(self.coeff.denominator),
            "pi_pow": self.pi_pow,
        }

    def __str__(self) -> str:
        if self.coeff == 0:
            return "0"
        if self.pi_pow == 0:
            return str(self.coeff)
        pi_part = "pi" if self.pi_pow == 1 else f"pi^{self.pi_pow}"
        if self.coeff == 1:
            return pi_part
        return f"{self.coeff}*{pi_part}"


def frak_z(k: int) -> PiScalar:
    """Coefficient of x^k in the expansion pi*x/sin(pi*x) = sum frak_z(k) x^k.

    Equals (2 - 2^(2-k)) zeta(k) for even k >= 2, equals 1 at k = 0, and
    vanishes for odd k.  Negative arguments stand for absent Taylor
    coefficients and give 0.
    """
    if k < 0 or k % 2 == 1:
        return PiScalar.zero()
    if k == 0:
        return PiScalar(Fraction(1), 0)
    ratio = (2 - Fraction(4, 2**k)) * zeta_even_over_pi(k)
    return PiScalar(ratio, k)


def frak_z_over_pi(k: int) -> Fraction:
    """frak_z(k) with the pi power stripped: an exact rational."""
    return frak_z(k).coeff


@dataclass(frozen=True)
class PiSum:
    """A finite sum of rationals times distinct powers of pi.

    Stored as a map pi_pow -> coefficient with no zero entries, so adding
    scalars of different powers is lossless.
    """

    terms: tuple[tuple[int, Fraction], ...] = ()

    @staticmethod
    def from_terms(terms: dict[int, Fraction]) -> "PiSum":
        cleaned = {p: Fraction(c) for p, c in terms.items() if c != 0}
        return PiSum(tuple(sorted(cleaned.items())))

    @staticmethod
    def from_scalar(scalar: PiScalar) -> "PiSum":
        if scalar.is_zero():
            return PiSum(())
        return PiSum(((scalar.pi_pow, scalar.coeff),))

    @staticmethod
    def zero() -> "PiSum":
        return PiSum(())

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def to_scalar(self) -> PiScalar:
        """Convert back to PiScalar; requires at most one term."""
        if not self.terms:
            return PiScalar.zero()
        if len(self.terms) > 1:
            raise ValueError("PiSum has multiple pi powers; not a PiScalar")
        pow_, coeff = self.terms[0]
        return PiScalar(coeff, pow_)

    def __add__(self, other: "PiSum") -> "PiSum":
        if not isinstance(other, PiSum):
            return NotImplemented
        acc = self.as_dict()
        for p, c in other.terms:
            acc[p] = acc.get(p, Fraction(0)) + c
        return PiSum.from_terms(acc)

    def __mul__(self, other: "PiSum") -> "PiSum":
        if not isinstance(other, PiSum):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for p1, c1 in self.terms:
            for p2, c2 in other.terms:
                key = p1 + p2
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return PiSum.from_terms(acc)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(PiScalar(c, p)) for p, c in self.terms)


def pi_add(a: PiSum, b: PiSum) -> PiSum:
    """Exact sum of two pi-power sums."""
    return a + b


def pi_mul(a: PiSum, b: PiSum) -> PiSum:
    """Exact product of two pi-power sums; pi exponents add termwise."""
    return a * b
