"""Named example complexes.

Each builder returns a ``SimplicialComplex``; ``get_fixture`` also runs the
entry's self-check so a broken builder or document fails at load time.

Labelling choices (the objects are only canonical up to isomorphism):

* ``icosahedron``: 0 top, 1-5 upper ring, 6-10 lower ring, 11 bottom; upper
  vertex ``i`` sits above the lower edge ``{i+5, i+6}`` (indices mod 5).
* ``torus-7``: Z_7-orbit of 124 and 134 on 0..6.
* ``walkup-j`` / ``lutz-l``: Z_10 acting on 0..9 by i -> i+1.
* ``emch-p``: labels 1..8, generators (12364785), (132645), (16)(23)(45)(78),
  facet representative 1235.  The commonly printed 8-cycle (12345678)
  together with the other two generates all of S_8 and yields every 4-set,
  so it cannot be used as given.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .complex import (
    PermutationSpec,
    SimplicialComplex,
    boundary_complex,
    cone,
    connected_sum,
    from_facets,
    add_faces,
    is_closed_3manifold,
    is_closed_surface,
    is_pseudomanifold,
    orbit_complex,
)
from .errors import ValidationError

EMCH_GENERATORS = ("(12364785)", "(132645)", "(16)(23)(45)(78)")
EMCH_PRINTED_GENERATORS = ("(12345678)", "(132645)", "(16)(23)(45)(78)")
RP2_6_FACETS = ((1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
                (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6))
LUTZ_SEEDS = ((1, 2, 3, 6), (1, 2, 3, 7), (1, 2, 5, 7), (1, 3, 6, 8))


def simplex_boundary(d: int, start: int = 0) -> SimplicialComplex:
    """S^d_{d+2}: boundary of the (d+1)-simplex on ``start .. start+d+1``."""
    if d < 0:
        raise ValidationError("sphere dimension must be non-negative")
    vs = range(start, start + d + 2)
    return from_facets(tuple(v for v in vs if v != w) for w in vs)


def icosahedron() -> SimplicialComplex:
    up = [1, 2, 3, 4, 5]
    lo = [6, 7, 8, 9, 10]
    facets = []
    for i in range(5):
        j = (i + 1) % 5
        facets += [(0, up[i], up[j]), (up[i], up[j], lo[j]), (up[i], lo[i], lo[j]), (11, lo[i], lo[j])]
    return from_facets(facets)


def octahedron() -> SimplicialComplex:
    # antipodal pairs 0/1, 2/3, 4/5
    return from_facets((a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5))


def rp2_6() -> SimplicialComplex:
    return from_facets(RP2_6_FACETS)


def torus_7() -> SimplicialComplex:
    return orbit_complex(PermutationSpec.cyclic(7), [(1, 2, 4), (1, 3, 4)])


def walkup_j() -> SimplicialComplex:
    return orbit_complex(PermutationSpec.cyclic(10), [(1, 2, 3, 4, 5)])


def walkup_k() -> SimplicialComplex:
    return boundary_complex(walkup_j())


def lutz_l() -> SimplicialComplex:
    return orbit_complex(PermutationSpec.cyclic(10), LUTZ_SEEDS)


def emch_p() -> SimplicialComplex:
    return orbit_complex(PermutationSpec.parse(range(1, 9), EMCH_GENERATORS), [(1, 2, 3, 5)])


def example_6_3() -> SimplicialComplex:
    return from_facets([(1, 2, 3), (2, 3, 4), (1, 4)])


def example_6_7() -> SimplicialComplex:
    return add_faces(cone(7, rp2_6()), [(1, 2, 3, 4, 5, 6)])


def cyclic_bundle(n: int) -> SimplicialComplex:
    """Boundary of the Z_n-orbit of the 4-simplex 01234 (n >= 9).

    A stacked closed 3-manifold with n vertices and b_1 = 1: the twisted
    S^2-bundle over S^1 for odd n, S^2 x S^1 for even n.  n = 9 is
    neighbourly; n = 10 is Walkup's K.
    """
    if n < 9:
        raise ValidationError("cyclic-bundle needs n >= 9")
    return boundary_complex(orbit_complex(PermutationSpec.cyclic(n), [(0, 1, 2, 3, 4)]))


def random_sum(parts: list[SimplicialComplex], rng: random.Random) -> SimplicialComplex:
    """Connected sum of ``parts`` in order, gluing along random facets
    with a random bijection each time."""
    if not parts:
        raise ValidationError("need at least one summand")
    S = parts[0]
    for P in parts[1:]:
        sigma = rng.choice(S.facets)
        tau = rng.choice(P.facets)
        image = list(tau)
        rng.shuffle(image)
        S = connected_sum(S, sigma, P, tau, dict(zip(sigma, image)))
    return S


def random_stacked_sphere(n: int, seed: int = 0) -> SimplicialComplex:
    """Stacked 2-sphere with ``n >= 4`` vertices: (n-3) copies of S^2_4."""
    if n < 4:
        raise ValidationError("a stacked 2-sphere has at least 4 vertices")
    rng = random.Random(seed)
    return random_sum([simplex_boundary(2)] * (n - 3), rng)


def icosian_sum(k: int, ell: int = 0, seed: int = 0) -> SimplicialComplex:
    """k copies of I and ``ell`` of S^2_4, shuffled, summed at random facets."""
    if k < 0 or ell < 0 or k + ell == 0:
        raise ValidationError("need at least one summand")
    rng = random.Random(seed)
    parts = [icosahedron()] * k + [simplex_boundary(2)] * ell
    rng.shuffle(parts)
    return random_sum(parts, rng)


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    build: Callable[..., SimplicialComplex]
    check: Callable[[SimplicialComplex], bool]
    param: str | None = None


def _sphere_ok(S: SimplicialComplex) -> bool:
    return is_closed_surface(S) and S.euler_characteristic() == 2


CATALOG: dict[str, Fixture] = {
    f.name: f
    for f in [
        Fixture("std-sphere", "boundary of the (d+1)-simplex, S^d_{d+2}", simplex_boundary,
                lambda X: X.n_vertices == X.dim + 2 and is_pseudomanifold(X), param="d"),
        Fixture("icosahedron", "boundary of the icosahedron, I", icosahedron,
                lambda X: X.f_vector == (12, 30, 20) and _sphere_ok(X)),
        Fixture("octahedron", "boundary of the octahedron", octahedron,
                lambda X: X.f_vector == (6, 12, 8) and _sphere_ok(X)),
        Fixture("rp2-6", "6-vertex real projective plane", rp2_6,
                lambda X: X.f_vector == (6, 15, 10) and is_closed_surface(X) and X.euler_characteristic() == 1),
        Fixture("torus-7", "7-vertex torus", torus_7,
                lambda X: X.f_vector == (7, 21, 14) and is_closed_surface(X) and X.euler_characteristic() == 0),
        Fixture("walkup-j", "Walkup's stacked 4-manifold with boundary", walkup_j,
                lambda X: X.f_vector == (10, 40, 60, 40, 10)),
        Fixture("walkup-k", "Walkup's 10-vertex S^2 x S^1 (boundary of walkup-j)", walkup_k,
                lambda X: X.f_vector == (10, 40, 60, 30) and is_closed_3manifold(X)),
        Fixture("lutz-l", "Lutz's neighbourly locally stacked 10-vertex S^2 x S^1", lutz_l,
                lambda X: X.f_vector == (10, 45, 70, 35) and is_closed_3manifold(X)),
        Fixture("emch-p", "Emch's 8-vertex pseudomanifold with torus links", emch_p,
                lambda X: X.f_vector == (8, 28, 56, 28) and is_pseudomanifold(X)),
        Fixture("example-6-3", "neighbourly complex with maximal faces 123, 234, 14", example_6_3,
                lambda X: X.facets == ((1, 2, 3), (1, 4), (2, 3, 4))),
        Fixture("example-6-7", "cone over rp2-6 with apex 7, plus the face 123456", example_6_7,
                lambda X: X.dim == 5 and X.n_vertices == 7 and not is_pseudomanifold(X)),
        Fixture("cyclic-bundle", "boundary of the Z_n-orbit of 01234 (n >= 9)", cyclic_bundle,
                lambda X: is_closed_3manifold(X) and X.f_vector[3] == 3 * X.n_vertices, param="n"),
        Fixture("random-stacked", "random stacked 2-sphere with n vertices", random_stacked_sphere,
                _sphere_ok, param="n"),
        Fixture("icosian-sum", "connected sum of k icosahedra at random facets", icosian_sum,
                lambda X: _sphere_ok(X) and X.n_vertices == 9 * (X.f_vector[2] // 18) + 3, param="k"),
    ]
}


def fixture_names() -> list[str]:
    return [f"{n}:<{f.param}>" if f.param else n for n, f in CATALOG.items()]


def get_fixture(name: str, seed: int = 0) -> SimplicialComplex:
    """Build and self-check a fixture by name, e.g. ``"emch-p"``, ``"std-sphere:3"``."""
    base, _, arg = name.partition(":")
    entry = CATALOG.get(base)
    if entry is None:
        raise ValidationError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")
    if entry.param:
        if not arg.strip().lstrip("-").isdigit():
            raise ValidationError(f"fixture {base} needs an integer parameter, e.g. {base}:3")
        value = int(arg)
        if base in ("random-stacked",):
            X = entry.build(value, seed)
        elif base == "icosian-sum":
            X = entry.build(value, 0, seed)
        else:
            X = entry.build(value)
    else:
        if arg:
            raise ValidationError(f"fixture {base} takes no parameter")
        X = entry.build()
    if not entry.check(X):
        raise ValidationError(f"fixture {name} failed its self-check")
    return X
