"""Exact simplicial homology over GF(p), Q and Z.

Coefficients: ``FieldSpec(p)`` with ``p`` prime, or ``FieldSpec(0)`` for the
rationals.  Field elements never escape this module as objects of their own;
ranks are computed with ints mod p or with fraction-free integer elimination,
and rational results elsewhere are ``fractions.Fraction``.

Reduced convention: the reduced zeroth Betti number is ``b_0 - 1`` for every
complex, the empty one included, so the empty complex has reduced ``b_0 = -1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .complex import SimplicialComplex
from .errors import ValidationError
from .linalg import is_prime, rank, smith_invariants


@dataclass(frozen=True, order=True)
class FieldSpec:
    p: int = 0

    def __post_init__(self) -> None:
        if self.p != 0 and not is_prime(self.p):
            raise ValidationError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """``q``/``Q`` for the rationals; ``z<p>``, ``gf<p>`` or ``<p>`` for GF(p)."""
        t = text.strip().lower()
        if t in ("q", "qq", "0", "rationals"):
            return cls(0)
        m = re.fullmatch(r"(?:z|gf|f)?\(?(\d+)\)?", t)
        if not m:
            raise ValidationError(f"cannot parse field {text!r}; use q or z<p>")
        return cls(int(m.group(1)))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def tag(self) -> str:
        return "q" if self.p == 0 else f"z{self.p}"

    def __str__(self) -> str:
        return "Q" if self.p == 0 else f"GF({self.p})"


Q = FieldSpec(0)
GF2 = FieldSpec(2)


@dataclass(frozen=True)
class BettiVector:
    field: FieldSpec
    reduced: bool
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def as_reduced(self) -> "BettiVector":
        if self.reduced:
            return self
        return BettiVector(self.field, True, (self.values[0] - 1,) + self.values[1:])

    def as_unreduced(self) -> "BettiVector":
        if not self.reduced:
            return self
        return BettiVector(self.field, False, (self.values[0] + 1,) + self.values[1:])


@dataclass(frozen=True)
class IntegralHomology:
    """Per degree: free rank and invariant factors > 1 (each divides the next)."""

    free: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def torsion_primes(self) -> list[int]:
        primes: set[int] = set()
        for coeffs in self.torsion:
            for c in coeffs:
                d = 2
                while d * d <= c:
                    while c % d == 0:
                        primes.add(d)
                        c //= d
                    d += 1
                if c > 1:
                    primes.add(c)
        return sorted(primes)

    def describe(self, i: int) -> str:
        parts = ([f"Z^{self.free[i]}"] if self.free[i] > 1 else ["Z"] * self.free[i]) + [
            f"Z/{t}" for t in self.torsion[i]
        ]
        return " + ".join(parts) if parts else "0"


def boundary_matrix(X: SimplicialComplex, k: int) -> list[list[int]]:
    """Integer matrix of the boundary C_k -> C_{k-1}: rows (k-1)-faces,
    columns k-faces, both in lexicographic order; ``k >= 1``."""
    if k < 1 or k > X.dim:
        return []
    rows = {f: i for i, f in enumerate(X.faces(k - 1))}
    cols = X.faces(k)
    mat = [[0] * len(cols) for _ in rows]
    for j, f in enumerate(cols):
        for t in range(len(f)):
            mat[rows[f[:t] + f[t + 1:]]][j] = -1 if t & 1 else 1
    return mat


def _full_mask(X: SimplicialComplex) -> int:
    return (1 << X.n_vertices) - 1


def betti(X: SimplicialComplex, field: FieldSpec = Q, reduced: bool = False) -> BettiVector:
    """Betti numbers b_0..b_d over ``field``."""
    if X.is_empty():
        return BettiVector(field, reduced, (-1,) if reduced else (0,))
    values = tuple(X.kernel(field.p).subset_betti(_full_mask(X)))
    vec = BettiVector(field, True, values)
    return vec if reduced else vec.as_unreduced()


def integral_homology(X: SimplicialComplex) -> IntegralHomology:
    """Unreduced integral homology via Smith normal form."""
    if X.is_empty():
        return IntegralHomology((0,), ((),))
    d = X.dim
    invariants = [[] for _ in range(d + 2)]
    for k in range(1, d + 1):
        invariants[k] = smith_invariants(boundary_matrix(X, k))
    free, torsion = [], []
    for k in range(d + 1):
        free.append(X.f_vector[k] - len(invariants[k]) - len(invariants[k + 1]))
        torsion.append(tuple(c for c in invariants[k + 1] if c > 1))
    return IntegralHomology(tuple(free), tuple(torsion))


def orientable(X: SimplicialComplex, field: FieldSpec = Q) -> bool:
    """Top Betti number over ``field`` is nonzero."""
    if X.is_empty() or not X.is_pure():
        raise ValidationError("orientability needs a nonempty pure complex")
    return betti(X, field)[X.dim] != 0


def induced_map_injective(
    X: SimplicialComplex, A, degree: int, field: FieldSpec = Q
) -> bool:
    """Whether H_degree(X[A]) -> H_degree(X) is injective (unreduced homology)."""
    if not 0 <= degree <= max(X.dim, 0):
        raise ValidationError(f"degree {degree} outside 0..{X.dim}")
    mask = X.mask(A)
    return bool(X.kernel(field.p).injective_at(mask, degree))


def chain_rank(X: SimplicialComplex, k: int, field: FieldSpec = Q) -> int:
    """Rank of the k-th boundary map over ``field`` (dense route, no kernel)."""
    return rank(boundary_matrix(X, k), field.p)
