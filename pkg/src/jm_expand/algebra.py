"""Finitely supported integer combinations of monoid elements."""

from collections import defaultdict


class AlgebraElement:
    """Integer linear combination of basis keys with a bilinear product.

    Subclasses provide ``_key_product(a, b)`` and whatever ambient data the
    product needs (``_ambient``), which must agree between operands.
    Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    # subclass hooks -------------------------------------------------------
    def _ambient(self):
        return None

    def _new(self, terms):
        raise NotImplementedError

    def _key_product(self, a, b):
        raise NotImplementedError

    # arithmetic -----------------------------------------------------------
    def _check(self, other):
        if self._ambient() != other._ambient():
            raise ValueError(f"ambient mismatch: {self._ambient()} vs {other._ambient()}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new({k: c * other for k, c in self.terms.items()})
        self._check(other)
        out = defaultdict(int)
        prod = self._key_product
        for b, cb in other.terms.items():
            for a, ca in self.terms.items():
                out[prod(a, b)] += ca * cb
        return self._new(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        result = self.one()
        for _ in range(k):
            result = result * self
        return result

    def one(self):
        raise NotImplementedError

    def zero(self):
        return self._new({})

    # comparison / access --------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(self) is not type(other):
            return NotImplemented
        return self._ambient() == other._ambient() and self.terms == other.terms

    __hash__ = None

    def __getitem__(self, key):
        return self.terms.get(key, 0)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self):
        return bool(self.terms)
