"""Exhaustive computations for the Gelfand pair (S_2n, H_n).

Points of ``{1, 1bar, ..., n, nbar}`` are interleaved indices: ``k`` is
``2(k-1)`` and ``kbar`` is ``2(k-1)+1``, so the order 1 < 1bar < 2 < ... is
plain index order and the bar involution is ``x ^ 1``.

A left coset sigma*H_n is determined by the perfect matching
``{sigma(2t), sigma(2t+1)}``, and the coset type of sigma depends only on
that matching. Right multiplication by the sum of H_n therefore aggregates
coefficients over matchings, which is how :func:`times_hyperoctahedral_sum`
evaluates the product without the |H_n|-fold loop.

>>> sigma = (4, 0, 7, 5, 3, 2, 6, 1)
>>> coset_type(sigma)
Partition(3, 1)
"""

from dataclasses import dataclass, field
from itertools import permutations, product

from . import config
from .errors import IndexOutOfRange, InvalidInput, NotBiInvariant
from .partitions import Partition, enumerate_partitions
from .symfunc import e, evaluate_symfunc
from .symgroup import GroupAlgebraElement, transposition

__all__ = [
    "CosetExpansion", "point", "coset_type", "matching", "is_hyperoctahedral",
    "hyperoctahedral_group", "hyperoctahedral_sum", "odd_jm",
    "evaluate_in_odd_jm", "times_hyperoctahedral_sum",
    "b_expansion_oracle", "hecke_ek_check", "perfect_matchings",
]


@dataclass
class CosetExpansion:
    """Coefficients on the double-coset sums, indexed by partitions of ``n``."""

    n: int
    coeffs: dict = field(default_factory=dict)

    def __getitem__(self, mu):
        return self.coeffs.get(tuple(mu), 0)


def point(k, barred=False):
    """Index of the point ``k`` (or ``kbar``), 1-based ``k``."""
    return 2 * (k - 1) + (1 if barred else 0)


def matching(sigma):
    """The dashed edges {sigma(i), sigma(ibar)} as a sorted tuple of sorted pairs."""
    return tuple(sorted(
        (min(sigma[2 * t], sigma[2 * t + 1]), max(sigma[2 * t], sigma[2 * t + 1]))
        for t in range(len(sigma) // 2)
    ))


def _matching_type(pairs, size):
    partner = [0] * size
    for a, b in pairs:
        partner[a] = b
        partner[b] = a
    seen = [False] * size
    halves = []
    for start in range(size):
        if seen[start]:
            continue
        # alternate solid (x ^ 1) and dashed (partner) edges
        edges = 0
        x = start
        while True:
            seen[x] = True
            y = x ^ 1
            seen[y] = True
            x = partner[y]
            edges += 2
            if x == start:
                break
            if seen[x]:
                raise AssertionError("G_sigma walk left its cycle")
        if edges % 2:
            raise AssertionError("odd cycle in G_sigma")
        halves.append(edges // 2)
    return Partition(halves)


def coset_type(sigma):
    """Half-lengths of the cycles of the solid/dashed graph G_sigma."""
    if len(sigma) % 2:
        raise InvalidInput("coset type needs an even number of points")
    return _matching_type(matching(sigma), len(sigma))


def is_hyperoctahedral(sigma):
    return all(sigma[x ^ 1] == sigma[x] ^ 1 for x in range(len(sigma)))


def hyperoctahedral_group(n):
    """All 2^n n! elements of H_n, built as signed permutations."""
    out = []
    for pi in permutations(range(n)):
        for flips in product((0, 1), repeat=n):
            images = [0] * (2 * n)
            for t in range(n):
                images[2 * t] = 2 * pi[t] + flips[t]
                images[2 * t + 1] = 2 * pi[t] + (1 - flips[t])
            out.append(tuple(images))
    return out


def hyperoctahedral_sum(n):
    config.guard("n", n, config.LIMITS.max_hecke_n)
    return GroupAlgebraElement(2 * n, {hh: 1 for hh in hyperoctahedral_group(n)})


def odd_jm(i, n):
    """J^(2)_i: transpositions of point i with every smaller point 1, 1bar, ..., (i-1)bar."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"J^(2)_{i} undefined for n={n}")
    target = point(i)
    return GroupAlgebraElement(2 * n, {transposition(j, target, 2 * n): 1 for j in range(target)})


def evaluate_in_odd_jm(F, n):
    config.guard("n", n, config.LIMITS.max_hecke_n)
    config.guard("degree", F.degree, config.LIMITS.max_k)
    xs = [odd_jm(i, n) for i in range(1, n + 1)]
    return evaluate_symfunc(F, xs, GroupAlgebraElement.unit(2 * n))


def perfect_matchings(size):
    """All perfect matchings of ``range(size)`` as sorted tuples of pairs."""
    def rec(rest):
        if not rest:
            yield ()
            return
        a = rest[0]
        for idx in range(1, len(rest)):
            b = rest[idx]
            for tail in rec(rest[1:idx] + rest[idx + 1:]):
                yield ((a, b),) + tail
    return [tuple(sorted(m)) for m in rec(tuple(range(size)))]


def _matching_totals(x):
    totals = {}
    for sigma, c in x.terms.items():
        key = matching(sigma)
        totals[key] = totals.get(key, 0) + c
    return totals


def times_hyperoctahedral_sum(x, n):
    """x * p_n, with p_n the sum of all elements of H_n."""
    if x.n != 2 * n:
        raise InvalidInput(f"element lives in S_{x.n}, expected S_{2 * n}")
    totals = {m: c for m, c in _matching_totals(x).items() if c}
    group = hyperoctahedral_group(n)
    out = {}
    for pairs, c in totals.items():
        # one representative with sigma({2t, 2t+1}) = pairs[t], then the whole coset
        rep = [0] * (2 * n)
        for t, (a, b) in enumerate(pairs):
            rep[2 * t], rep[2 * t + 1] = a, b
        for hh in group:
            out[tuple([rep[y] for y in hh])] = c
    return GroupAlgebraElement(2 * n, out)


def b_expansion_oracle(F, n):
    """Coefficients b^F_mu of F(J^(2)) p_n on the double-coset sums.

    Raises :class:`NotBiInvariant` if the product is not constant on some
    double coset.
    """
    x = evaluate_in_odd_jm(F, n)
    totals = _matching_totals(x)
    values = {}
    for pairs in perfect_matchings(2 * n):
        mu = _matching_type(pairs, 2 * n)
        c = totals.get(pairs, 0)
        if values.setdefault(mu, c) != c:
            raise NotBiInvariant(f"coefficients {values[mu]} and {c} both occur on coset type {mu}")
    return CosetExpansion(n, {mu: values.get(mu, 0) for mu in enumerate_partitions(n)})


def hecke_ek_check(k, n):
    """True iff e_k(J^(2)) p_n is the sum of C^(2)_mu over |mu| - l(mu) = k."""
    if not 0 <= k <= n:
        raise InvalidInput(f"need 0 <= k <= n, got k={k}, n={n}")
    x = times_hyperoctahedral_sum(evaluate_in_odd_jm(e(k), n), n)
    for sigma in permutations(range(2 * n)):
        mu = coset_type(sigma)
        expected = 1 if mu.size - mu.length == k else 0
        if x[sigma] != expected:
            return False
    return True
