"""Memoized recurrences for the class-expansion coefficients.

Families (``kind`` tags, also used in the cache file):

``a-complete``  coefficient of C_rho in h_k(J_1..J_n)
``a-power``     coefficient of C_rho in p_k(J_1..J_n)
``c``           coefficient of PC_lambda in h_k(X_1, X_2, ...)
``b-complete``  coefficient of C^(2)_mu in h_k(J^(2)_1..J^(2)_n) p_n
``b-power``     same with p_k
``d``           binomial inverse of ``b-complete`` in the number of ones

Each coefficient is computed by splitting off one part ``m`` of the
partition (the largest one by default) and recursing on k - 1, with
h_0 = 1 as the base case. Partitions are handled internally as plain
descending tuples.
"""

import os
from dataclasses import dataclass, field
from math import comb

from .errors import InvalidInput
from .partitions import Partition, grouped_parts, strip_ones
from .poly import Polynomial, binomial_poly

__all__ = [
    "CoefficientTable", "TABLES",
    "a_coeff", "a_power_coeff", "c_coeff", "b_coeff", "b_power_coeff",
    "a_from_c", "c_from_a", "d_from_b", "polynomial_in_t",
    "lassalle_identity_check", "coefficient", "load_cache", "save_cache",
    "clear_tables", "KINDS", "CACHE_ENV",
]

KINDS = ("a-complete", "a-power", "c", "b-complete", "b-power", "d")
CACHE_ENV = "JM_EXPAND_CACHE"
CACHE_HEADER = "# jm-expand coefficient cache v1"


@dataclass
class CoefficientTable:
    """Memo table mapping ``(k, partition)`` to an exact integer.

    Concurrent writers may race, but they only ever insert equal values.
    """

    kind: str
    entries: dict = field(default_factory=dict)

    def __contains__(self, key):
        return key in self.entries

    def __getitem__(self, key):
        return self.entries[key]

    def __setitem__(self, key, value):
        self.entries[key] = value

    def __len__(self):
        return len(self.entries)


TABLES = {kind: CoefficientTable(kind) for kind in KINDS}
# tables for the alternative splitting order, used to test choice-independence
_SMALLEST = {kind: CoefficientTable(kind) for kind in ("a-complete", "b-complete", "c")}


def clear_tables():
    for table in (*TABLES.values(), *_SMALLEST.values()):
        table.entries.clear()


# -- tuple surgery -----------------------------------------------------------

def _remove(lam, v):
    i = lam.index(v)
    return lam[:i] + lam[i + 1:]


def _insert(lam, *vs):
    return tuple(sorted(lam + vs, reverse=True))


def _replace(lam, old, new):
    return _insert(_remove(lam, old), new)


def _is_ones(lam):
    return all(x == 1 for x in lam)


def _is_two_ones(lam):
    return bool(lam) and lam[0] == 2 and _is_ones(lam[1:])


def _canon(lam):
    return tuple(Partition(lam))


def _split(lam, peel):
    m = lam[0] if peel == "largest" else lam[-1]
    return m, _remove(lam, m)


# -- a: complete functions in Z[S_n] -------------------------------------------

def _a(k, lam, table, peel):
    key = (k, lam)
    if key in table:
        return table[key]
    if k == 0:
        value = int(_is_ones(lam))
    elif not lam:
        value = 0
    elif k == 1:
        value = int(_is_two_ones(lam))
    else:
        m, rho = _split(lam, peel)
        value = _a(k, rho, table, peel) if m == 1 else 0
        for part, mult in grouped_parts(rho):
            value += mult * part * _a(k - 1, _replace(rho, part, part + m), table, peel)
        for r in range(1, m):
            value += _a(k - 1, _insert(rho, r, m - r), table, peel)
    table[key] = value
    return value


def a_coeff(k, rho, peel="largest"):
    """Coefficient of C_rho in h_k(J_1, ..., J_|rho|)."""
    if k < 0:
        raise InvalidInput(f"k must be >= 0, got {k}")
    tables = TABLES if peel == "largest" else _SMALLEST
    return _a(k, _canon(rho), tables["a-complete"], peel)


def _a_power(k, lam, table):
    key = (k, lam)
    if key in table:
        return table[key]
    if not lam:
        value = 0
    elif k == 1:
        value = int(_is_two_ones(lam))
    else:
        m, rho = _split(lam, "largest")
        value = _a_power(k, rho, table) if m == 1 else 0
        for part, mult in grouped_parts(rho):
            value += mult * part * _a_power(k - 1, _replace(rho, part, part + m), table)
        for r in range(1, m):
            value += _a_power(k - 1, _insert(rho, r, m - r), table)
        if m > 1:
            value -= _a_power(k - 1, _insert(rho, m - 1), table)
    table[key] = value
    return value


def a_power_coeff(k, rho):
    """Coefficient of C_rho in p_k(J_1, ..., J_|rho|), k >= 1."""
    if k < 1:
        raise InvalidInput(f"power sums need k >= 1, got {k}")
    return _a_power(k, _canon(rho), TABLES["a-power"])


# -- c: complete functions in partial Jucys-Murphy elements --------------------

def _c(k, lam, table, peel):
    key = (k, lam)
    if key in table:
        return table[key]
    if k == 0:
        value = int(not lam)
    elif not lam:
        value = 0
    else:
        m, rho = _split(lam, peel)
        value = 0
        for part, mult in grouped_parts(rho):
            value += mult * part * _c(k - 1, _replace(rho, part, part + m), table, peel)
        if m == 2:
            value += (_c(k - 1, _insert(rho, 1, 1), table, peel)
                      + 2 * _c(k - 1, _insert(rho, 1), table, peel)
                      + _c(k - 1, rho, table, peel))
        elif m >= 3:
            for r in range(1, m):
                value += _c(k - 1, _insert(rho, r, m - r), table, peel)
            value += 2 * _c(k - 1, _insert(rho, m - 1), table, peel)
    table[key] = value
    return value


def c_coeff(k, lam, peel="largest"):
    """Coefficient of PC_lambda in h_k(X_1, X_2, ...)."""
    if k < 0:
        raise InvalidInput(f"k must be >= 0, got {k}")
    tables = TABLES if peel == "largest" else _SMALLEST
    return _c(k, _canon(lam), tables["c"], peel)


# -- b: the (S_2n, H_n) analogue -----------------------------------------------

def _b(k, lam, table, peel, power=False):
    key = (k, lam)
    if key in table:
        return table[key]
    if not power and k == 0:
        value = int(_is_ones(lam))
    elif not lam:
        value = int(not power and k == 0)
    elif k == 1:
        value = int(_is_two_ones(lam))
    else:
        m, rho = _split(lam, peel)
        value = _b(k, rho, table, peel, power) if m == 1 else 0
        for part, mult in grouped_parts(rho):
            value += 2 * mult * part * _b(k - 1, _replace(rho, part, part + m), table, peel, power)
        for r in range(1, m):
            value += _b(k - 1, _insert(rho, r, m - r), table, peel, power)
        value += (m - 1) * _b(k - 1, lam, table, peel, power)
        if power and m > 1:
            value -= _b(k - 1, _insert(rho, m - 1), table, peel, power)
    table[key] = value
    return value


def b_coeff(k, mu, peel="largest"):
    """Coefficient of C^(2)_mu in h_k(J^(2)_1, ..., J^(2)_n) p_n."""
    if k < 0:
        raise InvalidInput(f"k must be >= 0, got {k}")
    tables = TABLES if peel == "largest" else _SMALLEST
    return _b(k, _canon(mu), tables["b-complete"], peel)


def b_power_coeff(k, mu):
    """Coefficient of C^(2)_mu in p_k(J^(2)_1, ..., J^(2)_n) p_n, k >= 1."""
    if k < 1:
        raise InvalidInput(f"power sums need k >= 1, got {k}")
    return _b(k, _canon(mu), TABLES["b-power"], "largest", power=True)


# -- binomial transforms in the number of ones ---------------------------------

def _with_ones(rho_bar, i):
    return tuple(rho_bar) + (1,) * i


def a_from_c(k, rho):
    """sum_i c^k_{rho_bar + 1^i} * binom(m_1(rho), i)."""
    rho_bar, m1 = strip_ones(Partition(rho))
    return sum(c_coeff(k, _with_ones(rho_bar, i)) * comb(m1, i) for i in range(m1 + 1))


def _binomial_inverse(values, k, lam):
    # forward substitution in the unitriangular system values(j) = sum_{i<=j} x_i binom(j, i)
    rho_bar, m1 = strip_ones(Partition(lam))
    xs = []
    for j in range(m1 + 1):
        xs.append(values(k, _with_ones(rho_bar, j)) - sum(x * comb(j, i) for i, x in enumerate(xs)))
    return xs[m1]


def c_from_a(k, lam):
    return _binomial_inverse(a_coeff, k, lam)


def d_from_b(k, rho):
    table = TABLES["d"]
    key = (k, _canon(rho))
    if key not in table:
        table[key] = _binomial_inverse(b_coeff, k, rho)
    return table[key]


def polynomial_in_t(k, rho):
    """The polynomial t -> a^k_{rho + 1^t}, for ``rho`` without parts equal to 1."""
    rho = Partition(rho)
    if 1 in rho:
        raise InvalidInput(f"{rho} has a part equal to 1")
    top = k - (rho.size - rho.length)
    out = Polynomial()
    for i in range(top + 1):
        c = c_coeff(k, _with_ones(rho, i))
        if c:
            out = out + binomial_poly(i) * c
    return out


# -- identities ----------------------------------------------------------------

def lassalle_identity_check(k, rho):
    """Check both of Lassalle's relations at ``(k, rho)`` against :func:`a_coeff`."""
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    rho = tuple(Partition(rho))
    ell = len(rho)

    def grow(i, by):
        return _insert(rho[:i] + rho[i + 1:], rho[i] + by)

    lhs1 = a_coeff(k, _insert(rho, 1))
    rhs1 = a_coeff(k, rho) + sum(rho[i] * a_coeff(k - 1, grow(i, 1)) for i in range(ell))

    lhs2 = sum(rho[i] * a_coeff(k, grow(i, 1)) for i in range(ell))
    rhs2 = 0
    for i in range(ell):
        for j in range(ell):
            if i != j:
                rest = tuple(x for t, x in enumerate(rho) if t not in (i, j))
                rhs2 += rho[i] * rho[j] * a_coeff(k - 1, _insert(rest, rho[i] + rho[j] + 1))
    for i in range(ell):
        rest = rho[:i] + rho[i + 1:]
        rhs2 += rho[i] * sum(a_coeff(k - 1, _insert(rest, r, rho[i] + 1 - r))
                             for r in range(1, rho[i] + 1))
    return lhs1 == rhs1 and lhs2 == rhs2


_DISPATCH = {
    "a-complete": a_coeff,
    "a-power": a_power_coeff,
    "c": c_coeff,
    "b-complete": b_coeff,
    "b-power": b_power_coeff,
    "d": d_from_b,
}


def coefficient(kind, k, lam):
    try:
        fn = _DISPATCH[kind]
    except KeyError:
        raise InvalidInput(f"unknown coefficient family {kind!r}") from None
    return fn(k, lam)


# -- cache file ----------------------------------------------------------------
# one entry per line: "kind k lambda value", lambda comma separated, "-" if empty

def save_cache(path):
    with open(path, "w") as fh:
        fh.write(CACHE_HEADER + "\n")
        for kind in KINDS:
            for (k, lam), value in sorted(TABLES[kind].entries.items()):
                fh.write(f"{kind} {k} {','.join(map(str, lam)) or '-'} {value}\n")


def load_cache(path):
    """Merge a cache file into the tables; a missing or stale file is ignored.

    Returns the number of entries read.
    """
    if not os.path.exists(path):
        return 0
    with open(path) as fh:
        if fh.readline().strip() != CACHE_HEADER:
            return 0
        count = 0
        for line in fh:
            kind, k, lam, value = line.split()
            lam = () if lam == "-" else tuple(int(x) for x in lam.split(","))
            TABLES[kind][int(k), lam] = int(value)
            count += 1
    return count
