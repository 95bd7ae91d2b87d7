"""Dyck paths, their total area, and the leading/subleading b-coefficients.

Area is the geometric area between a path and the x-axis, with up and down
steps of slope +-1: a step from height h to h' contributes (h + h') / 2.
Under this convention the single path UD has area 1 and the two paths of
semilength 2 have areas 4 (UUDD) and 2 (UDUD).

>>> [dyck_area_closed(k) for k in range(4)]
[0, 1, 6, 29]
>>> composition_area((1, 1))
2
"""

from math import comb, prod

from . import config
from .errors import InvalidInput
from .partitions import Partition, WeakComposition
from .series import catalan

__all__ = [
    "dyck_paths", "path_area", "dyck_area_closed", "dyck_area_bruteforce",
    "composition_area", "composition_area_bruteforce", "lemma_area_check",
    "leading_b", "subleading_b",
]


def dyck_paths(k):
    """Yield every Dyck path of semilength ``k`` as a tuple of +1/-1 steps.

    Iterative depth-first enumeration.
    """
    if k < 0:
        raise InvalidInput(f"semilength must be >= 0, got {k}")
    stack = [((), 0, 0)]  # steps so far, ups used, current height
    while stack:
        steps, ups, height = stack.pop()
        if len(steps) == 2 * k:
            yield steps
            continue
        if height > 0:
            stack.append((steps + (-1,), ups, height - 1))
        if ups < k:
            stack.append((steps + (1,), ups + 1, height + 1))


def path_area(steps):
    twice = 0
    height = 0
    for step in steps:
        twice += 2 * height + step
        height += step
    return twice // 2


def dyck_area_closed(k):
    """Total area under all Dyck paths of semilength k: 4^k - binom(2k+1, k)."""
    if k < 0:
        raise InvalidInput(f"k must be >= 0, got {k}")
    return 4 ** k - comb(2 * k + 1, k)


def dyck_area_bruteforce(k):
    config.guard("k", k, config.LIMITS.max_dyck_k)
    return sum(path_area(path) for path in dyck_paths(k))


def composition_area(entries):
    """Total area of the concatenations of Dyck paths of semilengths i_1, ..., i_r."""
    I = WeakComposition(entries)
    cats = [catalan(i) for i in I]
    return sum(dyck_area_closed(i) * prod(cats[:j] + cats[j + 1:]) for j, i in enumerate(I))


def composition_area_bruteforce(entries):
    """Same quantity, by enumerating paths of the total semilength that touch
    the axis after 2*i_1, 2*(i_1 + i_2), ... steps."""
    I = WeakComposition(entries)
    marks = []
    acc = 0
    for i in I:
        acc += 2 * i
        marks.append(acc)
    total = 0
    for path in dyck_paths(sum(I)):
        heights = [0]
        for step in path:
            heights.append(heights[-1] + step)
        if all(heights[x] == 0 for x in marks):
            total += path_area(path)
    return total


def lemma_area_check(m):
    """A_{m-1} = (m-1) Cat_{m-1} + sum_{r+s=m} (A_{r-1} Cat_{s-1} + A_{s-1} Cat_{r-1})."""
    if m < 1:
        raise InvalidInput(f"m must be >= 1, got {m}")
    A = dyck_area_closed
    rhs = (m - 1) * catalan(m - 1) + sum(
        A(r - 1) * catalan(m - r - 1) + A(m - r - 1) * catalan(r - 1) for r in range(1, m)
    )
    return A(m - 1) == rhs


def leading_b(rho):
    """b^k_rho at k = |rho| - l(rho): the product of Cat_{rho_i - 1}."""
    rho = Partition(rho)
    return prod(catalan(part - 1) for part in rho)


def subleading_b(mu):
    """b^k_mu at k = |mu| - l(mu) + 1: the area of the weak composition mu - 1."""
    mu = Partition(mu)
    return composition_area(part - 1 for part in mu)
