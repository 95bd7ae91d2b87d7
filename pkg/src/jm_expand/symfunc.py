"""Symmetric functions as formal integer combinations of products of
complete (``h``), elementary (``e``), power-sum (``p``) and monomial (``m``)
generators, and their evaluation on a list of commuting algebra elements.

>>> F = h(2) + 3 * e(1) * p(2)
>>> sorted(F.terms.items())
[((('e', 1), ('p', 2)), 3), ((('h', 2),), 1)]
>>> F.degree
3
"""

from itertools import permutations

from .errors import InvalidInput

__all__ = ["SymFunc", "h", "e", "p", "m", "evaluate_symfunc"]

FAMILIES = ("h", "e", "p", "m")


def _factor_degree(factor):
    family, index = factor
    return sum(index) if family == "m" else index


class SymFunc:
    """Integer combination of monomials in h_k, e_k, p_k, m_lambda."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {k: c for k, c in terms.items() if c}

    @classmethod
    def generator(cls, family, index):
        if family not in FAMILIES:
            raise InvalidInput(f"unknown family {family!r}")
        if family == "m":
            index = tuple(sorted((int(x) for x in index), reverse=True))
        elif index < 0:
            raise InvalidInput(f"degree must be >= 0, got {index}")
        return cls({((family, index),): 1})

    @property
    def degree(self):
        """Maximal degree among the monomials (0 for the zero function)."""
        return max((sum(map(_factor_degree, mono)) for mono in self.terms), default=0)

    def __add__(self, other):
        if isinstance(other, int):
            other = SymFunc({(): other})
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return SymFunc(out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymFunc({k: c * other for k, c in self.terms.items()})
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = tuple(sorted(ka + kb))
                out[key] = out.get(key, 0) + ca * cb
        return SymFunc(out)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "SymFunc(0)"
        pieces = []
        for mono, c in sorted(self.terms.items()):
            name = "*".join(f"{f}{i}" if f != "m" else f"m{list(i)}" for f, i in mono) or "1"
            pieces.append(f"{c}*{name}")
        return "SymFunc(" + " + ".join(pieces) + ")"


def h(k):
    return SymFunc.generator("h", k)


def e(k):
    return SymFunc.generator("e", k)


def p(k):
    return SymFunc.generator("p", k)


def m(lam):
    return SymFunc.generator("m", lam)


def _max_degrees(F):
    need = {"h": 0, "e": 0, "p": 0}
    for mono in F.terms:
        for family, index in mono:
            if family != "m":
                need[family] = max(need[family], index)
    return need


def evaluate_symfunc(F, xs, one):
    """Evaluate ``F`` on the commuting elements ``xs``.

    ``one`` is the unit of the ambient algebra. Complete functions use the
    Horner-style update h_k(x_1..x_i) = h_k(x_1..x_{i-1}) + x_i h_{k-1}(x_1..x_i),
    elementary functions the analogous update with e_{k-1}(x_1..x_{i-1}).
    """
    need = _max_degrees(F)
    n = len(xs)
    zero = one * 0

    H = [one] + [zero] * need["h"]
    E = [one] + [zero] * need["e"]
    for x in xs:
        for k in range(1, need["h"] + 1):
            H[k] = H[k] + x * H[k - 1]
        for k in range(need["e"], 0, -1):
            E[k] = E[k] + x * E[k - 1]

    P = [one * n] + [zero] * need["p"]
    if need["p"]:
        for x in xs:
            power = one
            for k in range(1, need["p"] + 1):
                power = x * power
                P[k] = P[k] + power

    powers = {}

    def x_pow(i, k):
        if (i, k) not in powers:
            powers[i, k] = one if k == 0 else xs[i] * x_pow(i, k - 1)
        return powers[i, k]

    def monomial(lam):
        if len(lam) > n:
            return zero
        total = zero
        for exps in set(permutations(tuple(lam) + (0,) * (n - len(lam)))):
            term = one
            for i, k in enumerate(exps):
                if k:
                    term = x_pow(i, k) * term
            total = total + term
        return total

    tables = {"h": H, "e": E, "p": P}
    result = zero
    for mono, coeff in F.terms.items():
        term = one
        for family, index in mono:
            factor = monomial(index) if family == "m" else tables[family][index]
            term = factor * term
        result = result + term * coeff
    return result

