"""Jack polynomials and the alpha-interpolating class coefficients.

Everything is exact over :class:`fractions.Fraction`. For a partition
``lam`` of n, ``theta_mu(lam)`` is the coefficient of ``p_mu`` in the Jack
polynomial ``J_lam`` (normalized so that ``[p_{1^n}] J_lam = 1``). The
coefficients ``a^{k,(alpha)}_mu`` solve

    h_k(alpha-contents of lam) = sum_mu a_mu theta_mu(lam)   for all lam |- n.

At alpha = 1 they are the symmetric group coefficients, at alpha = 2 the
(S_2n, H_n) ones.

>>> jack_in_power_basis((2,), 3)
{(2,): Fraction(3, 1), (1, 1): Fraction(1, 1)}
>>> a_alpha(2, 2, Fraction(7))[(2,)]
Fraction(6, 1)
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import config
from .errors import DegenerateGram, InvalidInput, SingularTheta
from .partitions import Partition, enumerate_partitions, z_index
from .poly import interpolate

__all__ = [
    "ThetaMatrix", "alpha_contents", "complete_homogeneous", "alpha_inner_product",
    "jack_in_power_basis", "theta_matrix", "a_alpha", "conjecture_check",
    "jack_orthogonality_check", "interpolate_in_alpha", "parse_alpha",
    "DEFAULT_ALPHAS",
]

DEFAULT_ALPHAS = tuple(Fraction(x) for x in ("1/2", "1", "3/2", "2", "3", "5"))


def parse_alpha(value):
    """Exact alpha from an int, Fraction or string like ``"3/2"``."""
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InvalidInput(f"not an exact rational: {value!r}") from exc


def alpha_contents(lam, alpha):
    """alpha*(j-1) - (i-1) for every box (i, j) of ``lam``."""
    alpha = parse_alpha(alpha)
    return [alpha * j - i for i, row in enumerate(Partition(lam)) for j in range(row)]


def complete_homogeneous(k, values):
    """h_k evaluated on a list of numbers."""
    H = [Fraction(1)] + [Fraction(0)] * k
    for x in values:
        for j in range(1, k + 1):
            H[j] += x * H[j - 1]
    return H[k]


def alpha_inner_product(f, g, alpha):
    """<p_lam, p_mu> = delta * z_lam * alpha^l(lam), extended bilinearly."""
    return sum(c * g[lam] * z_index(lam) * alpha ** len(lam) for lam, c in f.items() if lam in g)


# -- monomials in the power-sum basis --------------------------------------------

def _count_block_maps(mu, lam):
    """Number of maps f from parts of mu to parts of lam with block sums equal to lam."""
    room = list(lam)

    def place(i):
        if i == len(mu):
            return int(not any(room))
        total = 0
        for j in range(len(room)):
            if room[j] >= mu[i]:
                room[j] -= mu[i]
                total += place(i + 1)
                room[j] += mu[i]
        return total

    return place(0)


def _inverse(rows):
    """Exact inverse of a square matrix given as a list of lists, or None if singular."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _monomials_in_p(n):
    # p_mu = sum_lam L[mu][lam] m_lam, so m = L^{-1} p
    parts = [tuple(lam) for lam in enumerate_partitions(n)]
    L = [[_count_block_maps(mu, lam) for lam in parts] for mu in parts]
    Linv = _inverse(L)
    return {lam: {mu: c for mu, c in zip(parts, Linv[i]) if c} for i, lam in enumerate(parts)}


# -- Jack polynomials ------------------------------------------------------------

@lru_cache(maxsize=None)
def _jack_family(n, alpha):
    if alpha <= 0:
        raise DegenerateGram(f"alpha must be positive, got {alpha}", alpha=alpha)
    mono = _monomials_in_p(n)
    done = []  # (partition, P in p basis, <P, P>)
    out = {}
    # increasing lexicographic order refines dominance
    for lam in reversed([tuple(x) for x in enumerate_partitions(n)]):
        P = dict(mono[lam])
        for _, Q, norm in done:
            coef = alpha_inner_product(mono[lam], Q, alpha) / norm
            for nu, c in Q.items():
                P[nu] = P.get(nu, 0) - coef * c
        P = {nu: c for nu, c in P.items() if c}
        norm = alpha_inner_product(P, P, alpha)
        if norm == 0:
            raise DegenerateGram(f"Gram-Schmidt pivot vanishes at {lam} for alpha={alpha}", alpha=alpha)
        done.append((lam, P, norm))
        scale = 1 / P[(1,) * n]
        out[lam] = {nu: c * scale for nu, c in P.items()}
    return out


def jack_in_power_basis(lam, alpha):
    """J_lam as a dict partition tuple -> Fraction on the power sums."""
    lam = Partition(lam)
    config.guard("n", lam.size, config.LIMITS.max_jack_n)
    if lam.size == 0:
        return {(): Fraction(1)}
    return dict(_jack_family(lam.size, parse_alpha(alpha))[tuple(lam)])


def jack_orthogonality_check(n, alpha):
    alpha = parse_alpha(alpha)
    jacks = [jack_in_power_basis(lam, alpha) for lam in enumerate_partitions(n)]
    return all(alpha_inner_product(f, g, alpha) == 0
               for i, f in enumerate(jacks) for g in jacks[i + 1:])


@dataclass(frozen=True)
class ThetaMatrix:
    """entries[(mu, lam)] = theta_mu(lam), for mu, lam partitions of n."""

    n: int
    alpha: Fraction
    partitions: tuple
    entries: dict

    def __getitem__(self, key):
        mu, lam = key
        return self.entries.get((tuple(mu), tuple(lam)), Fraction(0))

    def rows(self):
        """Matrix with rows indexed by lam and columns by mu."""
        return [[self[mu, lam] for mu in self.partitions] for lam in self.partitions]


def theta_matrix(n, alpha):
    config.guard("n", n, config.LIMITS.max_jack_n)
    return _theta_matrix(n, parse_alpha(alpha))


@lru_cache(maxsize=None)
def _theta_matrix(n, alpha):
    parts = tuple(tuple(lam) for lam in enumerate_partitions(n))
    entries = {}
    for lam in parts:
        for mu, c in jack_in_power_basis(lam, alpha).items():
            entries[mu, lam] = c
    return ThetaMatrix(n, alpha, parts, entries)


@lru_cache(maxsize=None)
def _theta_inverse(n, alpha):
    theta = _theta_matrix(n, alpha)
    inv = _inverse(theta.rows())
    if inv is None:
        raise SingularTheta(f"theta matrix is singular at n={n}, alpha={alpha}", alpha=alpha)
    return inv


def a_alpha(k, n, alpha):
    """The coefficients a^{k,(alpha)}_mu for every mu |- n, as a dict."""
    if k < 0:
        raise InvalidInput(f"k must be >= 0, got {k}")
    config.guard("n", n, config.LIMITS.max_jack_n)
    alpha = parse_alpha(alpha)
    if n == 0:
        return {(): Fraction(int(k == 0))}
    return dict(_a_alpha(k, n, alpha))


@lru_cache(maxsize=None)
def _a_alpha(k, n, alpha):
    theta = _theta_matrix(n, alpha)
    inv = _theta_inverse(n, alpha)
    rhs = [complete_homogeneous(k, alpha_contents(lam, alpha)) for lam in theta.partitions]
    return tuple(
        (mu, sum(x * y for x, y in zip(inv[i], rhs)))
        for i, mu in enumerate(theta.partitions)
    )


def _insert(lam, *vs):
    return tuple(sorted(lam + vs, reverse=True))


def conjecture_check(k_max, n_max, alphas=DEFAULT_ALPHAS):
    """Test the conjectured linear relation for every part m >= 2 of every mu.

    Returns a list of dicts with keys alpha, n, k, rho, m, lhs, rhs, pass
    (alpha, lhs, rhs as strings; rho as a tuple).
    """
    report = []
    for alpha in map(parse_alpha, alphas):
        for n in range(2, n_max + 1):
            for k in range(1, k_max + 1):
                now, prev = a_alpha(k, n, alpha), a_alpha(k - 1, n, alpha)
                for mu in map(tuple, enumerate_partitions(n)):
                    for m in sorted({x for x in mu if x >= 2}, reverse=True):
                        i = mu.index(m)
                        rho = mu[:i] + mu[i + 1:]
                        rhs = sum(prev[_insert(rho, r, m - r)] for r in range(1, m))
                        for j, part in enumerate(rho):
                            grown = _insert(rho[:j] + rho[j + 1:], part + m)
                            rhs += alpha * part * prev[grown]
                        rhs += (alpha - 1) * (m - 1) * prev[mu]
                        lhs = now[mu]
                        report.append({
                            "alpha": str(alpha), "n": n, "k": k, "rho": rho, "m": m,
                            "lhs": str(lhs), "rhs": str(rhs), "pass": lhs == rhs,
                        })
    return report


def interpolate_in_alpha(k, mu, alphas):
    """Empirical polynomial in alpha through a^{k,(alpha)}_mu at the sample points.

    Only meaningful if enough samples are given; nothing guarantees the
    coefficients are polynomial in alpha.
    """
    mu = Partition(mu)
    points = [(a, a_alpha(k, mu.size, a)[tuple(mu)]) for a in map(parse_alpha, alphas)]
    return interpolate(points)
