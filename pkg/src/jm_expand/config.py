"""Resource bounds for the exhaustive oracles.

The defaults keep every oracle expansion at or below 8! = 40320 group
elements. Override them in-process with :func:`oracle_limits` or by
assigning attributes on :data:`LIMITS`.
"""

from contextlib import contextmanager
from dataclasses import dataclass, replace

from .errors import ResourceGuard


@dataclass
class OracleLimits:
    max_n: int = 8          # S_n oracle and partial-permutation truncation
    max_k: int = 8
    max_hecke_n: int = 4    # S_2n with 2n <= 8
    max_jack_n: int = 6
    max_dyck_k: int = 14


LIMITS = OracleLimits()


@contextmanager
def oracle_limits(**overrides):
    global LIMITS
    saved = LIMITS
    LIMITS = replace(saved, **overrides)
    try:
        yield LIMITS
    finally:
        LIMITS = saved


def guard(name, value, bound):
    if value > bound:
        raise ResourceGuard(f"{name}={value} exceeds the configured bound {bound}")
