import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from conftest import fixture
from test_complex import random_complex
from tighttri.complex import connected_sum, from_facets, induced_subcomplex, is_connected, link
from tighttri.errors import CapExceeded, ValidationError
from tighttri.fixtures import icosahedron, icosian_sum, random_stacked_sphere, simplex_boundary
from tighttri.homology import GF2, Q, FieldSpec, betti, induced_map_injective
from tighttri.tightness import (
    Method,
    Stackedness,
    Verdict,
    binomial_identity,
    brute_force_tight,
    closed_form_sigma0,
    connected_sum_sigma0_star,
    induced_surface,
    link_cycle_screen,
    mu1,
    mu_vector,
    sigma0_star,
    sigma_star_union,
    sigma_vector,
    stackedness_criterion,
    tightness_criterion_3manifold,
    verify_witness,
)

GF3 = FieldSpec(3)


def oracle_sigma(X, field):
    """sigma via betti() on every induced subcomplex, empty set included."""
    n = X.n_vertices
    out = [Fraction(0)] * (X.dim + 1)
    for r in range(n + 1):
        for A in combinations(X.vertices, r):
            if r == 0:
                out[0] -= 1
                continue
            b = betti(induced_subcomplex(X, A), field, reduced=True)
            for i, v in enumerate(b):
                out[i] += Fraction(v, comb(n, r))
    return tuple(out)


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("field", [GF2, GF3, Q])
def test_sigma_vector_matches_oracle(seed, field):
    rng = random.Random(seed)
    X = random_complex(rng, rng.randint(3, 8), rng.randint(3, 10))
    assert sigma_vector(X, field).sigma == oracle_sigma(X, field)


def test_sigma_anchor_values():
    assert sigma0_star(simplex_boundary(2)) == Fraction(-1, 5)
    assert sigma0_star(icosahedron()) == Fraction(47, 429)
    assert sigma_vector(fixture("torus-7"), GF3).sigma_star == (Fraction(-1, 8), Fraction(1), Fraction(1, 8))
    with pytest.raises(ValidationError):
        sigma_vector(from_facets([]))


def test_sigma_cap():
    with pytest.raises(CapExceeded) as exc:
        sigma_vector(simplex_boundary(25))
    assert exc.value.cap == 24
    with pytest.raises(CapExceeded):
        brute_force_tight(random_stacked_sphere(17), GF2)


@pytest.mark.parametrize("k,ell", [(0, 1), (0, 6), (1, 0), (1, 2), (2, 0), (2, 3)])
def test_closed_form_matches_enumeration(k, ell):
    S = icosian_sum(k, ell, seed=k + ell)
    assert sigma0_star(S) == closed_form_sigma0(k, ell)


def test_closed_form_validation():
    with pytest.raises(ValidationError):
        closed_form_sigma0(0, 0)


@pytest.mark.parametrize("seed", range(10))
def test_connected_sum_sigma0(seed):
    rng = random.Random(seed)
    S1 = random_stacked_sphere(rng.randint(4, 8), seed)
    S2 = icosian_sum(rng.randint(0, 1), rng.randint(1, 3), seed)
    S = connected_sum(S1, S1.facets[0], S2, S2.facets[-1])
    assert sigma0_star(S) == connected_sum_sigma0_star(sigma0_star(S1), sigma0_star(S2), 2)


def test_union_recursion_on_cones():
    # two cones over a common triangle boundary that is 2-neighbourly
    base = [(0, 1), (1, 2), (0, 2)]
    X = from_facets([f + (3,) for f in base] + [f + (4,) for f in base])
    for i in (0,):
        for field in (GF2, Q):
            assert sigma_star_union(X, [0, 1, 2, 3], [0, 1, 2, 4], i, field) == sigma_vector(X, field).sigma_star[i]
    with pytest.raises(ValidationError):
        sigma_star_union(X, [0, 1, 2, 3], [0, 1, 2, 4], 1)
    with pytest.raises(ValidationError):
        sigma_star_union(X, [0, 1, 3], [0, 1, 2, 4], 0)


def test_binomial_identity_small():
    assert binomial_identity(0, 0, 0) == (1, 1)
    lhs, rhs = binomial_identity(3, 2, 1)
    assert lhs == rhs


def test_mu_vectors():
    assert mu_vector(fixture("emch-p"), Q).mu == (1, 0, 8, 1)
    S = mu_vector(simplex_boundary(3))
    assert S.mu[0] == 1 and S.neighbourly
    m, how = mu1(fixture("lutz-l"))
    assert m == Fraction(3, 2) and how == "enumeration"
    assert mu_vector(fixture("lutz-l")).mu1_neighbourly == Fraction(3, 2)
    assert mu1(fixture("lutz-l"), cap=5) == (Fraction(3, 2), "closed form")


@pytest.mark.parametrize("name,field,verdict", [
    ("rp2-6", GF2, Verdict.TIGHT),
    ("rp2-6", Q, Verdict.NOT_TIGHT),
    ("emch-p", GF3, Verdict.TIGHT),
    ("example-6-3", GF2, Verdict.TIGHT),
    ("example-6-3", Q, Verdict.TIGHT),
    ("walkup-k", GF3, Verdict.NOT_TIGHT),
    ("std-sphere:3", Q, Verdict.TIGHT),
    ("torus-7", GF2, Verdict.TIGHT),
    ("icosahedron", GF2, Verdict.NOT_TIGHT),
    ("cyclic-bundle:9", GF2, Verdict.TIGHT),
    ("cyclic-bundle:9", Q, Verdict.NOT_TIGHT),
])
def test_brute_force_verdicts(name, field, verdict):
    X = fixture(name)
    rep = brute_force_tight(X, field)
    assert rep.verdict is verdict and rep.method is Method.BRUTE_FORCE
    if verdict is Verdict.NOT_TIGHT:
        assert verify_witness(X, rep)
    else:
        assert rep.witness is None


def test_witness_order():
    X = fixture("rp2-6")
    dec = brute_force_tight(X, Q)
    inc = brute_force_tight(X, Q, order="increasing")
    assert dec.witness.vertices == (1, 2, 3, 4, 5) and dec.witness.degree == 1
    assert len(inc.witness.vertices) == 3 and verify_witness(X, inc)
    with pytest.raises(ValidationError):
        brute_force_tight(X, Q, order="random")


def test_brute_force_on_small_random_complexes_against_definition():
    rng = random.Random(17)
    for _ in range(15):
        X = random_complex(rng, rng.randint(3, 7), rng.randint(3, 8))
        for field in (GF2, Q):
            rep = brute_force_tight(X, field)
            direct = all(
                induced_map_injective(X, A, i, field)
                for r in range(1, X.n_vertices + 1)
                for A in combinations(X.vertices, r)
                for i in range(X.dim + 1)
            )
            assert rep.tight == (direct and is_connected(X))


def test_disconnected_is_not_tight():
    rep = brute_force_tight(from_facets([(0, 1), (2, 3)]), GF2)
    assert rep.verdict is Verdict.NOT_TIGHT and rep.witness is None


@pytest.mark.parametrize("name", ["lutz-l", "walkup-k", "std-sphere:3", "cyclic-bundle:9", "cyclic-bundle:11"])
@pytest.mark.parametrize("field", [GF2, GF3, Q])
def test_criterion_agrees_with_brute_force(name, field):
    M = fixture(name)
    crit = tightness_criterion_3manifold(M, field)
    assert crit.method is Method.CRITERION
    assert crit.verdict is brute_force_tight(M, field).verdict


def test_criterion_rejects_non_manifolds():
    with pytest.raises(ValidationError):
        tightness_criterion_3manifold(fixture("emch-p"))


def test_beta1_at_most_mu1_on_neighbourly_manifolds():
    for name in ("lutz-l", "std-sphere:3", "cyclic-bundle:9"):
        M = fixture(name)
        b1 = betti(M, GF2)[1]
        m = mu1(M)[0]
        assert b1 <= m
        assert (b1 == m) == brute_force_tight(M, GF2).tight


def test_stackedness_criterion():
    L = stackedness_criterion(fixture("lutz-l"))
    assert L.verdict is Stackedness.NOT_STACKED
    assert stackedness_criterion(simplex_boundary(3), Q).verdict is Stackedness.STACKED
    C9 = fixture("cyclic-bundle:9")
    r = stackedness_criterion(C9, GF2)
    assert r.verdict is Stackedness.STACKED and r.details["C(n-4,2)"] == 10
    assert stackedness_criterion(C9, Q).verdict is Stackedness.INCONCLUSIVE
    assert stackedness_criterion(fixture("walkup-k")).verdict is Stackedness.INCONCLUSIVE


def test_induced_surface():
    X = fixture("rp2-6")
    x = 1
    L = link(X, x)
    cyc = [v for v in L.vertices]
    # walk the link cycle in order
    order = [cyc[0]]
    while len(order) < len(cyc):
        order.append(next(v for v in L.neighbours(order[-1]) if v not in order))
    surf = induced_surface(X, x, order)
    assert surf.is_closed_surface and surf.neighbourly and surf.complex == X
    assert surf.length == 5 and surf.allowed_char2 and not surf.allowed_odd_char
    with pytest.raises(ValidationError):
        induced_surface(X, x, order[:3])
    with pytest.raises(ValidationError):
        induced_surface(X, x, [order[0], order[2], order[1], order[3], order[4]])


def test_link_cycle_screen():
    P = link_cycle_screen(fixture("emch-p"))
    assert all(c == {3: 21} for c in P.lengths.values())
    assert P.char2_violations == () and P.odd_char_violations == ()
    assert link_cycle_screen(fixture("walkup-k")).char2_violations == ()
    O = fixture("octahedron")
    susp = from_facets([f + (6,) for f in O.facets] + [f + (7,) for f in O.facets])
    screen = link_cycle_screen(susp)
    assert screen.lengths[6] == {4: 3}
    assert {x for x, _ in screen.char2_violations} >= {6, 7}
    assert {x for x, _ in screen.odd_char_violations} >= {6, 7}
