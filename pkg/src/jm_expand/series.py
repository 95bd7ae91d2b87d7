"""Generating series of coefficient families as exact truncated expansions.

Closed forms are assembled as rational functions in ``z`` with integer
numerator and denominator, then expanded around ``z = 0``. Nothing is ever
simplified; the only operation that needs a non-trivial denominator is the
final expansion.

>>> cycle_series(2, 5).coeffs
(Fraction(0, 1), Fraction(1, 1), Fraction(0, 1), Fraction(1, 1), Fraction(0, 1), Fraction(1, 1))
>>> cycle_series(4, 5)[3]
Fraction(5, 1)
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InvalidInput
from .poly import Polynomial

__all__ = [
    "TruncatedSeries", "RationalFunctionZ", "catalan",
    "cycle_series", "hook_series", "solved_F_series",
    "cycle_rational", "hook_rational", "solved_F_rational",
]


def catalan(n):
    if n < 0:
        raise InvalidInput(f"Catalan index must be >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of z^0 .. z^K."""

    coeffs: tuple

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def as_strings(self):
        return [str(c) for c in self.coeffs]

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z" if k == 1 else f"{c}*z^{k}")
        return " + ".join(terms) + f" + O(z^{self.order + 1})" if terms else f"O(z^{self.order + 1})"


@dataclass(frozen=True)
class RationalFunctionZ:
    """numerator / denominator, expandable at z = 0 (denominator(0) != 0)."""

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        if self.denominator.degree < 0 or self.denominator.coeffs[0] == 0:
            raise InvalidInput("denominator must have a non-zero constant term")

    @classmethod
    def polynomial(cls, coeffs):
        return cls(Polynomial(coeffs), Polynomial([1]))

    def __add__(self, other):
        return RationalFunctionZ(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __mul__(self, other):
        if isinstance(other, RationalFunctionZ):
            return RationalFunctionZ(self.numerator * other.numerator,
                                     self.denominator * other.denominator)
        return RationalFunctionZ(self.numerator * other, self.denominator)

    __rmul__ = __mul__

    def expand(self, K):
        """Power series coefficients up to z^K."""
        num = list(self.numerator.coeffs) + [Fraction(0)] * (K + 1)
        den = self.denominator.coeffs
        out = []
        for k in range(K + 1):
            acc = num[k] - sum(den[i] * out[k - i] for i in range(1, min(k, len(den) - 1) + 1))
            out.append(acc / den[0])
        return TruncatedSeries(tuple(out))


def _z(power, coeff=1):
    return Polynomial([0] * power + [coeff])


def _squares_denominator(n):
    """(1 - 1^2 z^2)(1 - 2^2 z^2)...(1 - (n-1)^2 z^2)."""
    out = Polynomial([1])
    for j in range(1, n):
        out = out * Polynomial([1, 0, -j * j])
    return out


def cycle_rational(n):
    """sum_k a^k_(n) z^k, which equals sum_k c^k_(n) z^k."""
    if n < 2:
        raise InvalidInput(f"cycle series needs n >= 2, got {n}")
    return RationalFunctionZ(_z(n - 1, catalan(n - 1)), _squares_denominator(n))


def hook_rational(n, kind="a"):
    """sum_k a^k_(n-1,1) z^k (``kind="a"``) or sum_k c^k_(n-1,1) z^k (``kind="c"``)."""
    if n < 3:
        raise InvalidInput(f"hook series needs n >= 3, got {n}")
    top = _z(n, (n - 1) * catalan(n - 1))
    if kind == "c":
        return RationalFunctionZ(top, _squares_denominator(n))
    if kind != "a":
        raise InvalidInput(f"kind must be 'a' or 'c', got {kind!r}")
    lower = Polynomial([1, 0, -(n - 1) ** 2]) * _z(n - 2, catalan(n - 2))
    return RationalFunctionZ(top + lower, _squares_denominator(n))


_SHAPES = {"F211": "F211", "F22": "F22", (1, 1): "F211", (2,): "F22"}


def solved_F_rational(shape, n):
    """c-series of (n-2, 1, 1) (``"F211"``) or (n-2, 2) (``"F22"``).

    Both come from solving the 2x2 system that the c-recurrence gives for
    these two shapes, in terms of cycle and hook c-series:

        F211 = z^2 (n(n-2) F_n + 2z(n-2) F_{n-1} + F_{n-2}) / (1 - z^2)
        F22  = (z((n-2) F_n + 2 F_{(n-2,1)} + F_{n-2}) + z^2 (n-2) F_{(n-1,1)}) / (1 - z^2)
    """
    key = _SHAPES.get(shape if isinstance(shape, str) else tuple(shape))
    if key is None:
        raise InvalidInput(f"unknown shape {shape!r}; use 'F211' or 'F22'")
    if n < 4:
        raise InvalidInput(f"solved series need n >= 4, got {n}")
    z = RationalFunctionZ.polynomial([0, 1])
    z2 = RationalFunctionZ.polynomial([0, 0, 1])
    one_minus_z2 = RationalFunctionZ(Polynomial([1]), Polynomial([1, 0, -1]))
    Fn, Fn1, Fn2 = cycle_rational(n), cycle_rational(n - 1), cycle_rational(n - 2)
    if key == "F211":
        inner = Fn * (n * (n - 2)) + z * Fn1 * (2 * (n - 2)) + Fn2
        return z2 * inner * one_minus_z2
    inner = Fn * (n - 2) + hook_rational(n - 1, "c") * 2 + Fn2
    return (z * inner + z2 * hook_rational(n, "c") * (n - 2)) * one_minus_z2


def cycle_series(n, K):
    return cycle_rational(n).expand(K)


def hook_series(n, K, kind="a"):
    return hook_rational(n, kind).expand(K)


def solved_F_series(shape, n, K):
    return solved_F_rational(shape, n).expand(K)
