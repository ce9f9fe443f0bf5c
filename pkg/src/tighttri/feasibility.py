"""Integer constraints on (n, b_1) for Z_2-tight triangulated closed 3-manifolds.

With n vertices, b_1 = b_1(M; Z_2) and k the total number of icosahedral
summands over all vertex links:

    429 ((n-4)(n-5) - 20 b_1) = 776 k,    0 <= k <= n * floor((n-4)/9).

k = 0 exactly when M is stacked; the upper bound is attained exactly when
every link is floor((n-4)/9) icosahedra summed with tetrahedron boundaries.
Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

from .errors import ValidationError


@dataclass(frozen=True)
class ParamReport:
    n: int
    beta1: int
    k: int | None
    congruence_776: bool
    lower_bound_stacked_equality: bool
    lower_bound: bool
    upper_bound_b: bool
    upper_bound_b_equality: bool
    upper_bound_512: bool
    icosian_equality: bool

    @property
    def k_in_range(self) -> bool:
        return self.k is not None and 0 <= self.k <= self.n * ((self.n - 4) // 9)

    @property
    def feasible(self) -> bool:
        """All necessary conditions hold (not a proof that M exists)."""
        return (
            self.congruence_776 and self.lower_bound and self.upper_bound_b
            and self.upper_bound_512 and self.k_in_range
        )


def _check_n(n: int) -> None:
    if n < 5:
        raise ValidationError("n must be at least 5")


def check_parameters(n: int, beta1: int) -> ParamReport:
    _check_n(n)
    if beta1 < 0:
        raise ValidationError("beta1 must be non-negative")
    q = (n - 4) * (n - 5)
    t = (n - 4) // 9
    num = 429 * (q - 20 * beta1)
    k = num // 776 if num % 776 == 0 else None
    lhs_b = 429 * q - 776 * n * t
    lhs_512 = (n - 4) * (617 * n - 3861)
    return ParamReport(
        n=n,
        beta1=beta1,
        k=k,
        congruence_776=(q - 20 * beta1) % 776 == 0,
        lower_bound_stacked_equality=q == 20 * beta1,
        lower_bound=q >= 20 * beta1,
        upper_bound_b=lhs_b <= 8580 * beta1,
        upper_bound_b_equality=lhs_b == 8580 * beta1,
        upper_bound_512=lhs_512 <= 15444 * beta1,
        icosian_equality=lhs_512 == 15444 * beta1,
    )


@dataclass(frozen=True, order=True)
class TableRow:
    n: int
    beta1: int


def enumerate_table1(n_max: int) -> list[TableRow]:
    """Parameters of locally icosian manifolds: equality in the upper bound
    with n = 4 (mod 9)."""
    _check_n(n_max)
    rows = []
    for n in range(13, n_max + 1, 9):
        num = 429 * (n - 4) * (n - 5) - 776 * n * (n - 4) // 9
        if num >= 0 and num % 8580 == 0:
            rows.append(TableRow(n, num // 8580))
    return rows


def feasible_beta1(n: int, require_k_positive: bool = True) -> list[int]:
    """All b_1 >= 0 meeting every necessary condition, with k >= 1 unless
    ``require_k_positive`` is False (then k = 0, the stacked value, is allowed)."""
    _check_n(n)
    q = (n - 4) * (n - 5)
    t = (n - 4) // 9
    out = []
    m = 0 if not require_k_positive else 1
    while 776 * m <= q:
        if (q - 776 * m) % 20 == 0:
            b = (q - 776 * m) // 20
            if 429 * m <= n * t and (n - 4) * (617 * n - 3861) <= 15444 * b:
                out.append(b)
        m += 1
    return sorted(out)


def enumerate_table2(n_max: int, verbose: bool = False) -> list[TableRow]:
    """Non-stacked parameters: per n the smallest feasible b_1 with k >= 1
    (every feasible b_1 when ``verbose``)."""
    _check_n(n_max)
    rows = []
    for n in range(5, n_max + 1):
        bs = feasible_beta1(n)
        if bs:
            rows.extend(TableRow(n, b) for b in (bs if verbose else bs[:1]))
    return rows


def enumerate_table3(n_max: int) -> list[TableRow]:
    """Equality in the upper bound, with k = n floor((n-4)/9) >= 1
    satisfying the relation between k and b_1."""
    _check_n(n_max)
    rows = []
    for n in range(5, n_max + 1):
        t = (n - 4) // 9
        k = n * t
        if k == 0:
            continue
        num = 429 * (n - 4) * (n - 5) - 776 * k
        if num < 0 or num % 8580:
            continue
        beta1 = num // 8580
        if check_parameters(n, beta1).k == k:
            rows.append(TableRow(n, beta1))
    return rows


@dataclass(frozen=True)
class TopologyEntry:
    k: int
    n: int
    labels: tuple[str, ...]


def cor514_topology_list(beta1_max: int) -> list[TopologyEntry]:
    """Values k <= beta1_max with (n-4)(n-5) = 20k for an integer n >= 5."""
    if beta1_max < 0:
        raise ValidationError("beta1_max must be non-negative")
    out = []
    for k in range(beta1_max + 1):
        # n - 4 = (1 + sqrt(1 + 80k)) / 2
        disc = 1 + 80 * k
        r = isqrt(disc)
        if r * r != disc or (1 + r) % 2:
            continue
        n = 4 + (1 + r) // 2
        labels = ("S^3",) if k == 0 else (f"(S^2 x S^1)^#{k}", f"(S^2 twisted S^1)^#{k}")
        out.append(TopologyEntry(k, n, labels))
    return out


def spreer_min_beta(n: int, ell: int) -> int:
    """Ceiling of C(floor(n/2)-1, l+1) C(ceil(n/2)-1, l+1) / C(n-1, l+1)."""
    if ell < 1:
        raise ValidationError("ell must be at least 1")
    if n < 2 * ell + 4:
        raise ValidationError("need n >= 2*ell + 4")
    num = comb(n // 2 - 1, ell + 1) * comb((n + 1) // 2 - 1, ell + 1)
    den = comb(n - 1, ell + 1)
    return -(-num // den)


def lower_bound_ratio(n: int, ell: int) -> Fraction:
    if ell < 1 or n < 2 * ell + 4:
        raise ValidationError("need ell >= 1 and n >= 2*ell + 4")
    return Fraction(comb(n // 2 - 1, ell + 1) * comb((n + 1) // 2 - 1, ell + 1), comb(n - 1, ell + 1))


def min_beta1(n: int) -> int:
    """Smallest b_1 allowed by (n-4)(617n-3861) <= 15444 b_1."""
    _check_n(n)
    return max(0, -(-((n - 4) * (617 * n - 3861)) // 15444))
