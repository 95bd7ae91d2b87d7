"""Exhaustive computations in the integer group algebra of S_n.

Permutations are image tuples on ``{0, ..., N-1}``; the 1-based point
``i`` (1-based) is index ``i - 1``. Products compose right to left:
``(s * t)[x] == s[t[x]]``, i.e. ``t`` is applied first.

>>> x = evaluate_in_jm(h(2), 3)
>>> class_expansion(x).coeffs
{Partition(3): 2, Partition(2, 1): 0, Partition(1, 1, 1): 3}
"""

from dataclasses import dataclass, field
from itertools import permutations

from . import config
from .algebra import AlgebraElement
from .errors import IndexOutOfRange, InvalidInput, NotCentral
from .partitions import Partition, class_size, enumerate_partitions
from .symfunc import e, evaluate_symfunc, h  # noqa: F401  (h used in doctest)

__all__ = [
    "Permutation", "GroupAlgebraElement", "ClassExpansion",
    "identity", "transposition", "from_cycles", "compose", "inverse",
    "cycle_type", "cycles", "jm_element", "evaluate_in_jm",
    "class_expansion", "jucys_ek_check", "symmetric_group", "class_sum",
]


class Permutation(tuple):
    """Image tuple of a bijection of ``{0, ..., N-1}``."""

    __slots__ = ()

    def __new__(cls, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise InvalidInput(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @property
    def size(self):
        return len(self)


def identity(n):
    return tuple(range(n))


def transposition(i, j, n):
    """Transposition of the 0-based indices ``i`` and ``j``."""
    images = list(range(n))
    images[i], images[j] = j, i
    return tuple(images)


def from_cycles(n, *cycs):
    """Build a permutation of size ``n`` from 1-based cycles, e.g. ``from_cycles(3, (1, 2, 3))``."""
    images = list(range(n))
    for cyc in cycs:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
    return Permutation(images)


def compose(s, t):
    """``s * t``: apply ``t`` first, then ``s``."""
    return tuple([s[x] for x in t])


def inverse(s):
    inv = [0] * len(s)
    for i, v in enumerate(s):
        inv[v] = i
    return tuple(inv)


def cycles(s):
    """Cycles of ``s`` as lists of 0-based points, each starting at its minimum."""
    seen = [False] * len(s)
    out = []
    for start in range(len(s)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = s[x]
        out.append(cyc)
    return out


def cycle_type(s):
    return Partition(len(c) for c in cycles(s))


def symmetric_group(n):
    return permutations(range(n))


class GroupAlgebraElement(AlgebraElement):
    """Element of Z[S_N]: mapping from image tuples to integers."""

    __slots__ = ("n",)

    def __init__(self, n, terms=None):
        self.n = n
        super().__init__(terms)

    def _ambient(self):
        return self.n

    def _new(self, terms):
        return GroupAlgebraElement(self.n, terms)

    def _key_product(self, a, b):
        return tuple([a[x] for x in b])

    def one(self):
        return GroupAlgebraElement(self.n, {identity(self.n): 1})

    @classmethod
    def unit(cls, n):
        return cls(n, {identity(n): 1})

    def __repr__(self):
        return f"GroupAlgebraElement(n={self.n}, {len(self.terms)} terms)"


@dataclass
class ClassExpansion:
    """Coefficients on the class sums, indexed by partitions of ``n``."""

    n: int
    coeffs: dict = field(default_factory=dict)

    def __getitem__(self, lam):
        return self.coeffs.get(tuple(lam), 0)


def class_sum(lam):
    lam = Partition(lam)
    n = lam.size
    return GroupAlgebraElement(n, {s: 1 for s in symmetric_group(n) if cycle_type(s) == lam})


def jm_element(i, n):
    """J_i = (1 i) + ... + (i-1 i), with 1-based ``i``."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"J_{i} undefined in S_{n}")
    return GroupAlgebraElement(n, {transposition(j, i - 1, n): 1 for j in range(i - 1)})


def evaluate_in_jm(F, n):
    """F(J_1, ..., J_n) by brute-force expansion in Z[S_n]."""
    config.guard("n", n, config.LIMITS.max_n)
    config.guard("degree", F.degree, config.LIMITS.max_k)
    xs = [jm_element(i, n) for i in range(1, n + 1)]
    return evaluate_symfunc(F, xs, GroupAlgebraElement.unit(n))


def class_expansion(x):
    """Read off the class-sum coefficients of a central element.

    Raises :class:`NotCentral` when two permutations of the same cycle type
    carry different coefficients (absent permutations count as 0).
    """
    seen = {}
    counts = {}
    for s, c in x.terms.items():
        lam = cycle_type(s)
        if seen.setdefault(lam, c) != c:
            raise NotCentral(f"coefficients {seen[lam]} and {c} both occur on class {lam}")
        counts[lam] = counts.get(lam, 0) + 1
    for lam, cnt in counts.items():
        if cnt != class_size(lam):
            raise NotCentral(f"only {cnt} of {class_size(lam)} permutations of type {lam} present")
    return ClassExpansion(x.n, {lam: seen.get(lam, 0) for lam in enumerate_partitions(x.n)})


def jucys_ek_check(k, n):
    """True iff e_k(J_1..J_n) is the sum of all permutations with n - k cycles."""
    if not 0 <= k <= n:
        raise InvalidInput(f"need 0 <= k <= n, got k={k}, n={n}")
    x = evaluate_in_jm(e(k), n)
    expected = {s: 1 for s in symmetric_group(n) if len(cycles(s)) == n - k}
    return x.terms == expected

