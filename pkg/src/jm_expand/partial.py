"""The algebra of partial permutations, truncated to supports
inside ``{1, ..., N}``.

Points are 1-based positive integers here, as in ``({1, 2}, (1 2))``.
The product extends both permutations by fixed points to the union of the
supports and composes them (right factor first).

>>> t = PartialPermutation.from_cycles({1, 2}, (1, 2))
>>> partial_degree(t)
1
>>> (t * t).support == frozenset({1, 2}), partial_degree(t * t)
(True, 2)
"""

from dataclasses import dataclass

from . import config
from .algebra import AlgebraElement
from .errors import InvalidInput
from .partitions import Partition
from .symfunc import evaluate_symfunc, h
from .symgroup import GroupAlgebraElement

__all__ = [
    "PartialPermutation", "PartialAlgebraElement",
    "partial_jm", "partial_jm_expansion", "evaluate_in_partial_jm", "partial_degree", "project",
    "c_from_partial",
]


@dataclass(frozen=True)
class PartialPermutation:
    support: frozenset
    perm: tuple  # sorted (point, image) pairs covering the support

    def __post_init__(self):
        pts = [a for a, _ in self.perm]
        imgs = sorted(b for _, b in self.perm)
        if set(pts) != self.support or sorted(pts) != imgs:
            raise InvalidInput(f"perm {self.perm} is not a permutation of {set(self.support)}")

    @classmethod
    def from_mapping(cls, support, mapping):
        support = frozenset(support)
        return cls(support, tuple(sorted((x, mapping.get(x, x)) for x in support)))

    @classmethod
    def from_cycles(cls, support, *cycs):
        mapping = {}
        for cyc in cycs:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                mapping[a] = b
        return cls.from_mapping(support, mapping)

    def __call__(self, x):
        return dict(self.perm).get(x, x)

    def __mul__(self, other):
        a, b = dict(self.perm), dict(other.perm)
        support = self.support | other.support
        mapping = {}
        for x in support:
            y = b.get(x, x)
            mapping[x] = a.get(y, y)
        return PartialPermutation(support, tuple(sorted(mapping.items())))

    def cycle_lengths(self):
        mapping = dict(self.perm)
        seen = set()
        lengths = []
        for start in sorted(self.support):
            if start in seen:
                continue
            length = 0
            x = start
            while x not in seen:
                seen.add(x)
                length += 1
                x = mapping[x]
            lengths.append(length)
        return lengths

    def cycle_type(self):
        return Partition(self.cycle_lengths())


def partial_degree(pp):
    """|d| - #cycles + #fixed points."""
    lengths = pp.cycle_lengths()
    return len(pp.support) - len(lengths) + lengths.count(1)


class PartialAlgebraElement(AlgebraElement):
    __slots__ = ()

    def _new(self, terms):
        return PartialAlgebraElement(terms)

    def _key_product(self, a, b):
        return a * b

    def one(self):
        return PartialAlgebraElement({PartialPermutation(frozenset(), ()): 1})

    def __repr__(self):
        return f"PartialAlgebraElement({len(self.terms)} terms)"


def partial_jm(i):
    """X_i = sum over j < i of ({j, i}, (j i))."""
    if i < 1:
        raise InvalidInput(f"X_{i} undefined")
    return PartialAlgebraElement(
        {PartialPermutation.from_cycles({j, i}, (j, i)): 1 for j in range(1, i)}
    )


def evaluate_in_partial_jm(F, N):
    """F(X_1, ..., X_N); coefficients on supports inside {1..N} are exact."""
    config.guard("N", N, config.LIMITS.max_n)
    config.guard("degree", F.degree, config.LIMITS.max_k)
    xs = [partial_jm(i) for i in range(1, N + 1)]
    return evaluate_symfunc(F, xs, PartialAlgebraElement().one())


def partial_jm_expansion(k, N):
    """h_k(X_1, ..., X_N)."""
    if k < 0:
        raise InvalidInput(f"k must be >= 0, got {k}")
    return evaluate_in_partial_jm(h(k), N)


def project(x, n):
    """The morphism to Z[S_n]: keep supports inside {1..n}, forget the support."""
    out = {}
    for pp, c in x.terms.items():
        if pp.support and max(pp.support) > n:
            continue
        images = list(range(n))
        for a, b in pp.perm:
            images[a - 1] = b - 1
        key = tuple(images)
        out[key] = out.get(key, 0) + c
    return GroupAlgebraElement(n, out)


def c_from_partial(x, lam):
    """Coefficient of ({1..|lam|}, sigma) with sigma of cycle type ``lam``."""
    lam = Partition(lam)
    mapping = {}
    start = 1
    for part in lam:
        for t in range(part):
            mapping[start + t] = start + (t + 1) % part
        start += part
    return x[PartialPermutation.from_mapping(range(1, lam.size + 1), mapping)]
