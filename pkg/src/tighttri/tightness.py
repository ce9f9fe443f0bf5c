"""Sigma and mu invariants, brute-force tightness, and 3-manifold criteria.

sigma_i(X) sums the reduced Betti numbers of all induced subcomplexes X[A],
weighted by 1/C(f_0, #A); the empty set counts, with reduced b_0 = -1.
sigma*_i = sigma_i / (1 + f_0).  mu_0 = sum over vertices of
1/(1 + f_0(link)), and mu_i = [i == 1] mu_0 + sum over vertices of
sigma*_{i-1}(link).  All values are exact ``Fraction``s.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable

from . import kernels
from .complex import (
    Face,
    SimplicialComplex,
    induced_cycles,
    induced_subcomplex,
    is_closed_3manifold,
    is_closed_surface,
    is_connected,
    is_cycle,
    is_k_neighbourly,
    link,
)
from .errors import CapExceeded, ValidationError
from .homology import GF2, FieldSpec, betti, induced_map_injective, orientable
from .spheres import link_profile

SIGMA_CAP = 24
BRUTE_CAP = 16
B0_CAP = 30


@dataclass(frozen=True)
class SigmaVector:
    field: FieldSpec
    f0: int
    sigma: tuple[Fraction, ...]

    @property
    def sigma_star(self) -> tuple[Fraction, ...]:
        return tuple(s / (1 + self.f0) for s in self.sigma)


@dataclass(frozen=True)
class MuVector:
    field: FieldSpec
    mu: tuple[Fraction, ...]
    neighbourly: bool

    @property
    def mu1_neighbourly(self) -> Fraction | None:
        """1 + sum of sigma*_0 over vertex links (only for neighbourly X)."""
        if not self.neighbourly or len(self.mu) < 2:
            return None
        return self.mu[1] - self.mu[0] + 1


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceeded(
            f"{what} enumerates 2^{n} vertex subsets, above the cap of {cap} vertices; "
            "raise the cap explicitly or use criterion mode",
            size=n,
            cap=cap,
        )


def sigma_vector(
    X: SimplicialComplex, field: FieldSpec = GF2, cap: int = SIGMA_CAP, backend: str | None = None
) -> SigmaVector:
    if X.is_empty():
        raise ValidationError("sigma vector of the empty complex is not defined")
    n = X.n_vertices
    _check_cap(n, cap, "sigma_vector")
    if X.dim == 0:
        # no boundary maps; only reduced b_0 matters
        sums = [[s - 1] for s in range(n + 1)]
    else:
        masks, bnd = X.chain_data
        K = kernels.chain_kernel(masks, bnd, field.p, n, backend)
        sums = K.size_sums(n)
    sigma = tuple(
        sum((Fraction(sums[s][i], comb(n, s)) for s in range(n + 1)), Fraction(0))
        for i in range(X.dim + 1)
    )
    return SigmaVector(field, n, sigma)


def sigma0_star(X: SimplicialComplex, cap: int = B0_CAP, backend: str | None = None) -> Fraction:
    """sigma*_0 from connected components only (same over every field)."""
    n = X.n_vertices
    _check_cap(n, cap, "sigma0_star")
    sums = kernels.b0_size_sums(X.adjacency, n, backend)
    return sum((Fraction(sums[s], comb(n, s)) for s in range(n + 1)), Fraction(0)) / (n + 1)


def closed_form_sigma0(k: int, ell: int) -> Fraction:
    """sigma*_0 of a connected sum of k icosahedra and ell tetrahedron boundaries."""
    if k < 0 or ell < 0 or k + ell == 0:
        raise ValidationError("need k, ell >= 0 with k + ell > 0")
    return Fraction(617, 1716) * k + Fraction(1, 20) * ell - Fraction(1, 4)


def connected_sum_sigma0_star(s1: Fraction, s2: Fraction, d: int) -> Fraction:
    """sigma*_0 of a connected sum of two d-spheres."""
    return Fraction(s1) + Fraction(s2) + Fraction(1, d + 2)


def sigma_star_union(
    X: SimplicialComplex,
    A1: Iterable[int],
    A2: Iterable[int],
    i: int,
    field: FieldSpec = GF2,
    cap: int = SIGMA_CAP,
) -> Fraction:
    """sigma*_i(X) from X1 = X[A1], X2 = X[A2] and Y = X[A1 & A2].

    Requires X = X1 u X2 and Y (i+2)-neighbourly.
    """
    A1, A2 = frozenset(A1), frozenset(A2)
    X1, X2 = induced_subcomplex(X, A1), induced_subcomplex(X, A2)
    for f in X.facets:
        if not (set(f) <= A1 or set(f) <= A2):
            raise ValidationError(f"face {f} lies in neither part; X is not X1 u X2")
    Y = induced_subcomplex(X, A1 & A2)
    if i < 0 or Y.is_empty() or not is_k_neighbourly(Y, i + 2):
        raise ValidationError(f"the intersection must be {i + 2}-neighbourly")

    def star(Z: SimplicialComplex) -> Fraction:
        s = sigma_vector(Z, field, cap).sigma_star
        return s[i] if i < len(s) else Fraction(0)

    return star(X1) + star(X2) - star(Y)


def binomial_identity(p: int, q: int, r: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_i C(p,i)/C(p+q+r, i+r) = (p+q+r+1)/((q+r+1) C(q+r, r))."""
    lhs = sum((Fraction(comb(p, i), comb(p + q + r, i + r)) for i in range(p + 1)), Fraction(0))
    rhs = Fraction(p + q + r + 1, (q + r + 1) * comb(q + r, r))
    return lhs, rhs


def mu_vector(
    X: SimplicialComplex, field: FieldSpec = GF2, cap: int = SIGMA_CAP
) -> MuVector:
    d = X.dim
    mu = [Fraction(0)] * (d + 1)
    for x in X.vertices:
        L = link(X, x)
        mu[0] += Fraction(1, 1 + L.n_vertices)
        if L.is_empty():
            continue
        star = sigma_vector(L, field, cap).sigma_star
        for i in range(1, d + 1):
            if i - 1 < len(star):
                mu[i] += star[i - 1]
    if d >= 1:
        mu[1] += mu[0]
    return MuVector(field, tuple(mu), X.n_vertices >= 2 and is_k_neighbourly(X, 2))


class Verdict(enum.Enum):
    TIGHT = "TIGHT"
    NOT_TIGHT = "NOT_TIGHT"
    INCONCLUSIVE = "INCONCLUSIVE"


class Method(enum.Enum):
    BRUTE_FORCE = "brute"
    CRITERION = "criterion"


@dataclass(frozen=True)
class Witness:
    """H_degree(X[vertices]) -> H_degree(X) is not injective."""

    vertices: Face
    degree: int


@dataclass(frozen=True)
class TightnessReport:
    verdict: Verdict
    method: Method
    field: FieldSpec
    witness: Witness | None = None
    criteria_trace: tuple[tuple[str, object], ...] = ()

    @property
    def tight(self) -> bool:
        return self.verdict is Verdict.TIGHT


def brute_force_tight(
    X: SimplicialComplex,
    field: FieldSpec = GF2,
    cap: int = BRUTE_CAP,
    order: str = "decreasing",
    backend: str | None = None,
) -> TightnessReport:
    """Check every induced subcomplex in every degree.

    Subsets are visited by cardinality (largest first for ``order=
    "decreasing"``, smallest first for ``"increasing"``), then
    lexicographically; the first failure is the witness.
    """
    if order not in ("decreasing", "increasing"):
        raise ValidationError("order must be 'decreasing' or 'increasing'")
    if X.is_empty():
        raise ValidationError("tightness of the empty complex is not defined")
    n = X.n_vertices
    if not is_connected(X):
        return TightnessReport(Verdict.NOT_TIGHT, Method.BRUTE_FORCE, field, None, (("connected", False),))
    _check_cap(n, cap, "brute_force_tight")
    subsets = kernels.subsets_by_size(n, order == "decreasing")
    masks, bnd = X.chain_data
    K = kernels.chain_kernel(masks, bnd, field.p, n, backend)
    pos, degree = K.first_noninjective(subsets)
    trace = (("connected", True), ("subsets checked", len(subsets) if pos < 0 else pos + 1))
    if pos < 0:
        return TightnessReport(Verdict.TIGHT, Method.BRUTE_FORCE, field, None, trace)
    witness = Witness(X.labels_of(subsets[pos]), degree)
    return TightnessReport(Verdict.NOT_TIGHT, Method.BRUTE_FORCE, field, witness, trace)


def verify_witness(X: SimplicialComplex, report: TightnessReport) -> bool:
    """The report's witness really is a non-injective map."""
    w = report.witness
    return w is not None and not induced_map_injective(X, w.vertices, w.degree, report.field)


def _require_3manifold(M: SimplicialComplex) -> None:
    if not is_closed_3manifold(M):
        raise ValidationError("input is not a triangulated closed 3-manifold")


def mu1(M: SimplicialComplex, cap: int = B0_CAP) -> tuple[Fraction, str]:
    """mu_1 of a neighbourly complex and how it was obtained.

    Link subsets are enumerated when links have at most ``cap`` vertices;
    otherwise, for 3-manifolds whose links are sums of tetrahedron
    boundaries and icosahedra, the closed form for sigma*_0 is used.
    """
    links = [link(M, x) for x in M.vertices]
    if all(L.n_vertices <= cap for L in links):
        return 1 + sum((sigma0_star(L, cap) for L in links), Fraction(0)), "enumeration"
    profile = link_profile(M)
    if not profile.link_screen_pass:
        raise CapExceeded("links too large to enumerate and not all decomposable", size=M.n_vertices, cap=cap)
    return 1 + sum((closed_form_sigma0(v.k, v.ell) for v in profile.vertices), Fraction(0)), "closed form"


def tightness_criterion_3manifold(M: SimplicialComplex, field: FieldSpec = GF2) -> TightnessReport:
    """Decide tightness of a closed 3-manifold without subset enumeration.

    Odd characteristic and Q: tight iff orientable, neighbourly and stacked,
    where stackedness is read off from local stackedness and
    C(n-4, 2) = 10 b_1.  Characteristic 2: a neighbourly M is tight iff
    b_1 = mu_1; otherwise it is not tight.
    """
    _require_3manifold(M)
    n = M.n_vertices
    trace: list[tuple[str, object]] = []
    neighbourly = is_k_neighbourly(M, 2)
    trace.append(("neighbourly", neighbourly))
    profile = link_profile(M)
    trace.append(("links are sums of S^2_4 and I^2_12", profile.link_screen_pass))
    b1 = betti(M, field)[1]
    trace.append(("beta_1", b1))

    def done(v: Verdict) -> TightnessReport:
        return TightnessReport(v, Method.CRITERION, field, None, tuple(trace))

    if field.p == 2:
        if not neighbourly:
            return done(Verdict.NOT_TIGHT)
        if not profile.link_screen_pass:
            return done(Verdict.NOT_TIGHT)
        m1, how = mu1(M)
        trace.append(("mu_1", m1))
        trace.append(("mu_1 via", how))
        trace.append(("beta_1 == mu_1", b1 == m1))
        return done(Verdict.TIGHT if b1 == m1 else Verdict.NOT_TIGHT)

    orient = orientable(M, field)
    trace.append(("orientable", orient))
    trace.append(("locally stacked", profile.is_locally_stacked))
    lhs, rhs = comb(n - 4, 2), 10 * b1
    trace.append(("C(n-4,2)", lhs))
    trace.append(("10*beta_1", rhs))
    stacked = profile.is_locally_stacked and neighbourly and orient and lhs == rhs
    trace.append(("stacked (by criterion)", stacked))
    return done(Verdict.TIGHT if orient and neighbourly and stacked else Verdict.NOT_TIGHT)


class Stackedness(enum.Enum):
    STACKED = "stacked (by criterion)"
    NOT_STACKED = "not stacked (by criterion)"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class StackednessReport:
    verdict: Stackedness
    details: dict = field(default_factory=dict)


def stackedness_criterion(M: SimplicialComplex, field: FieldSpec = GF2) -> StackednessReport:
    """Under local stackedness, neighbourliness and orientability over
    ``field``: stacked iff C(n-4, 2) = 10 b_1."""
    _require_3manifold(M)
    n = M.n_vertices
    b1 = betti(M, field)[1]
    details = {
        "n": n,
        "beta_1": b1,
        "C(n-4,2)": comb(n - 4, 2),
        "10*beta_1": 10 * b1,
        "locally stacked": link_profile(M).is_locally_stacked,
        "neighbourly": is_k_neighbourly(M, 2),
        "orientable": orientable(M, field),
    }
    if not (details["locally stacked"] and details["neighbourly"] and details["orientable"]):
        return StackednessReport(Stackedness.INCONCLUSIVE, details)
    ok = details["C(n-4,2)"] == details["10*beta_1"]
    return StackednessReport(Stackedness.STACKED if ok else Stackedness.NOT_STACKED, details)


ODD_CHAR_EXCLUDED = frozenset({0, 1, 4, 5, 7, 8, 9, 10})


@dataclass(frozen=True)
class InducedSurface:
    complex: SimplicialComplex
    vertex: int
    cycle: Face
    is_closed_surface: bool
    neighbourly: bool

    @property
    def length(self) -> int:
        return len(self.cycle)

    @property
    def allowed_char2(self) -> bool:
        """Cycle length is not 1 mod 3."""
        return self.length % 3 != 1

    @property
    def allowed_odd_char(self) -> bool:
        """Cycle length avoids 0, 1, 4, 5, 7, 8, 9, 10 mod 12."""
        return self.length % 12 not in ODD_CHAR_EXCLUDED


def _is_induced_cycle(X: SimplicialComplex, cycle: Face) -> bool:
    if len(set(cycle)) != len(cycle) or len(cycle) < 3 or not set(cycle) <= set(X.vertices):
        return False
    Y = induced_subcomplex(X, cycle)
    if not is_cycle(Y) or Y.n_vertices != len(cycle):
        return False
    # the given order must walk along the edges
    return all((min(a, b), max(a, b)) in Y for a, b in zip(cycle, cycle[1:] + cycle[:1]))


def induced_surface(M: SimplicialComplex, x: int, cycle: Iterable[int]) -> InducedSurface:
    """M restricted to the vertices of the cone x * C, for an induced cycle C of the link of x."""
    cycle = tuple(cycle)
    L = link(M, x)
    if not _is_induced_cycle(L, cycle):
        raise ValidationError(f"{cycle} is not an induced cycle in the link of {x}")
    S = induced_subcomplex(M, set(cycle) | {x})
    return InducedSurface(
        S, x, cycle, is_closed_surface(S), S.n_vertices >= 2 and is_k_neighbourly(S, 2)
    )


@dataclass(frozen=True)
class LinkCycleScreen:
    """Induced cycle lengths in every vertex link."""

    lengths: dict
    char2_violations: tuple[tuple[int, Face], ...]
    odd_char_violations: tuple[tuple[int, Face], ...]


def link_cycle_screen(M: SimplicialComplex) -> LinkCycleScreen:
    lengths: dict[int, dict[int, int]] = {}
    bad2, bad_odd = [], []
    for x in M.vertices:
        counts: dict[int, int] = {}
        for c in induced_cycles(link(M, x)):
            counts[len(c)] = counts.get(len(c), 0) + 1
            if len(c) % 3 == 1:
                bad2.append((x, c))
            if len(c) % 12 in ODD_CHAR_EXCLUDED:
                bad_odd.append((x, c))
        lengths[x] = dict(sorted(counts.items()))
    return LinkCycleScreen(lengths, tuple(bad2), tuple(bad_odd))
