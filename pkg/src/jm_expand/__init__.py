"""Exact class expansions of symmetric functions in Jucys-Murphy elements."""

from .config import LIMITS, OracleLimits, oracle_limits
from .errors import (
    DegenerateGram, IndexOutOfRange, InvalidInput, InvalidPart, InvariantViolation,
    JMExpandError, NoSuchPart, NotBiInvariant, NotCentral, ResourceGuard, SingularTheta,
)
from .partitions import Partition, WeakComposition, enumerate_partitions, parse_partition
from .symfunc import SymFunc, e, h, m, p
from .symgroup import class_expansion, evaluate_in_jm, jm_element, jucys_ek_check
from .partial import c_from_partial, partial_jm, partial_jm_expansion, project
from .hecke import b_expansion_oracle, coset_type, hecke_ek_check
from .recurrences import (
    a_coeff, a_from_c, a_power_coeff, b_coeff, b_power_coeff, c_coeff, c_from_a,
    coefficient, d_from_b, lassalle_identity_check, polynomial_in_t,
)
from .series import catalan, cycle_series, hook_series, solved_F_series
from .dyck import dyck_area_bruteforce, dyck_area_closed, leading_b, subleading_b
from .alpha import a_alpha, conjecture_check, jack_in_power_basis, theta_matrix

__version__ = "0.1.0"
