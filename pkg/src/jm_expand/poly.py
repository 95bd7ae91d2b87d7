"""Dense univariate polynomials with exact rational coefficients."""

from fractions import Fraction


class Polynomial:
    """Coefficients stored low degree first; trailing zeros are trimmed.

    >>> q = Polynomial([1, 1]) * Polynomial([-1, 1])
    >>> q
    Polynomial(-1 + x^2)
    >>> q(3)
    Fraction(8, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "Polynomial(" + " + ".join(terms) + ")"


def binomial_poly(i):
    """binom(t, i) as a polynomial in t."""
    out = Polynomial([1])
    for j in range(i):
        out = out * Polynomial([-j, 1])
    fact = 1
    for j in range(2, i + 1):
        fact *= j
    return out * Fraction(1, fact)


def interpolate(points):
    """Lagrange interpolation through ``(x, y)`` pairs with distinct x."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    total = Polynomial()
    for i, (xi, (_, yi)) in enumerate(zip(xs, points)):
        basis = Polynomial([1])
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1]) * (1 / (xi - xj))
        total = total + basis * Fraction(yi)
    return total
