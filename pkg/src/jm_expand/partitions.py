"""Integer partitions and weak compositions.

A :class:`Partition` is a tuple of positive integers in weakly decreasing
order. It is a ``tuple`` subclass, so it hashes and compares equal to the
plain tuple with the same entries; the recurrence engine relies on that to
key its memo tables with bare tuples.

>>> Partition([1, 3, 1])
Partition(3, 1, 1)
>>> add_part(Partition((3, 1)), 2)
Partition(3, 2, 1)
>>> strip_ones(Partition((3, 1, 1)))
(Partition(3), 2)
"""

from collections import Counter
from functools import lru_cache
from math import factorial

from .errors import InvalidInput, InvalidPart, NoSuchPart

__all__ = [
    "Partition", "WeakComposition",
    "add_part", "remove_part", "strip_ones",
    "enumerate_partitions", "partition_count",
    "grouped_parts", "parse_partition", "format_partition",
    "z_index", "class_size",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Any iterable of positive integers is accepted and sorted.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] < 1:
            raise InvalidPart(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    @property
    def ones(self):
        """Number of parts equal to one."""
        return self.count(1)

    def __repr__(self):
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self):
        return format_partition(self)


class WeakComposition(tuple):
    """Sequence of non-negative integers (order matters, zeros allowed)."""

    __slots__ = ()

    def __new__(cls, entries=()):
        entries = tuple(int(e) for e in entries)
        if any(e < 0 for e in entries):
            raise InvalidInput(f"weak composition entries must be >= 0, got {entries}")
        return super().__new__(cls, entries)

    def __repr__(self):
        return f"WeakComposition({', '.join(map(str, self))})"


def remove_part(rho, v):
    """Erase one part equal to ``v``."""
    if v not in rho:
        raise NoSuchPart(f"{v} is not a part of {tuple(rho)}")
    parts = list(rho)
    parts.remove(v)
    return Partition(parts)


def add_part(rho, v):
    if v < 1:
        raise InvalidPart(f"cannot add part {v}")
    return Partition((*rho, v))


def strip_ones(rho):
    """Split ``rho`` into its parts larger than one and its number of ones."""
    m1 = rho.count(1)
    return Partition(p for p in rho if p != 1), m1


@lru_cache(maxsize=None)
def _partitions(n, largest):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first, *rest))
    return tuple(out)


def enumerate_partitions(n):
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise InvalidInput(f"n must be non-negative, got {n}")
    return [Partition(p) for p in _partitions(n, n)]


def partition_count(n):
    return len(_partitions(n, n))


def grouped_parts(rho):
    """Pairs ``(part, multiplicity)`` for the distinct parts, largest first."""
    return sorted(Counter(rho).items(), reverse=True)


def z_index(rho):
    """Order of the centralizer of a permutation of cycle type ``rho``."""
    z = 1
    for part, mult in Counter(rho).items():
        z *= part ** mult * factorial(mult)
    return z


def class_size(rho):
    """Number of permutations of cycle type ``rho`` in S_|rho|."""
    return factorial(sum(rho)) // z_index(rho)


def parse_partition(text):
    """Parse the CLI spelling ``"3,1,1"``; ``"-"`` or ``""`` is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InvalidInput(f"cannot parse partition {text!r}") from None
    if any(p < 1 for p in parts):
        raise InvalidPart(f"partition parts must be positive: {text!r}")
    return Partition(parts)


def format_partition(rho):
    return ",".join(map(str, rho)) if rho else "-"
