"""Triangulated 2-spheres: stackedness, primitive decomposition, link profiles.

A missing triangle of a 2-sphere S is a 3-set whose three edges lie in S
while the triangle itself does not.  Cutting S along a missing triangle
gives two smaller spheres whose connected sum is S; a sphere with no missing
triangle is primitive.  The only primitive spheres without induced cycles of
length 1 mod 3 are the tetrahedron boundary and the icosahedron, so summands
are classified by vertex count and degrees alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .complex import (
    Face,
    SimplicialComplex,
    _components,
    induced_cycles,
    is_closed_3manifold,
    is_closed_surface,
    link,
)
from .errors import DecompositionError, ValidationError


class SummandClass(enum.Enum):
    STANDARD_S24 = "S^2_4"
    ICOSAHEDRON = "I^2_12"
    OTHER = "other"


def is_2sphere(S: SimplicialComplex) -> bool:
    """Connected closed surface with Euler characteristic 2."""
    return is_closed_surface(S) and S.euler_characteristic() == 2


def _require_sphere(S: SimplicialComplex) -> None:
    if not is_2sphere(S):
        raise ValidationError("input is not a triangulated 2-sphere")


def is_stacked_2sphere(S: SimplicialComplex) -> bool:
    """No induced 4-cycle and no induced 5-cycle."""
    _require_sphere(S)
    return not induced_cycles(S, (4, 5))


def _missing(S: SimplicialComplex) -> Iterator[Face]:
    faces = set(S.faces(2))
    adj = S.adjacency
    vs = S.vertices
    for u, v in S.faces(1):
        iu, iv = S.index[u], S.index[v]
        common = adj[iu] & adj[iv] & ~((1 << (iv + 1)) - 1)
        while common:
            low = common & -common
            common ^= low
            w = vs[low.bit_length() - 1]
            if (u, v, w) not in faces:
                yield (u, v, w)


def missing_facet_sets(S: SimplicialComplex) -> list[Face]:
    """All missing triangles of a 2-sphere, lexicographically sorted."""
    _require_sphere(S)
    return sorted(_missing(S))


def classify_summand(P: SimplicialComplex) -> SummandClass:
    if P.n_vertices == 4:
        return SummandClass.STANDARD_S24
    if P.n_vertices == 12 and all(P.degree(v) == 5 for v in P.vertices):
        return SummandClass.ICOSAHEDRON
    return SummandClass.OTHER


@dataclass(frozen=True)
class ConnectedSumTree:
    """Primitive summands of a 2-sphere and the tree of missing triangles.

    ``edges`` holds ``(i, j, alpha)`` with ``i < j``: nodes ``i`` and ``j``
    were glued along the missing triangle ``alpha``.
    """

    nodes: tuple[SimplicialComplex, ...]
    edges: tuple[tuple[int, int, Face], ...]

    @property
    def classes(self) -> tuple[SummandClass, ...]:
        return tuple(classify_summand(P) for P in self.nodes)

    def count(self, cls: SummandClass) -> int:
        return sum(1 for c in self.classes if c is cls)

    def is_tree(self) -> bool:
        if len(self.edges) != len(self.nodes) - 1:
            return False
        comps = _components(range(len(self.nodes)), [(i, j) for i, j, _ in self.edges])
        return len(comps) == 1

    def leaf_elimination_order(self) -> list[int]:
        """Repeatedly remove the smallest-index leaf; the last node is the root."""
        nbrs: dict[int, set[int]] = {i: set() for i in range(len(self.nodes))}
        for i, j, _ in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        order = []
        alive = set(nbrs)
        while len(alive) > 1:
            leaf = min(v for v in alive if len(nbrs[v] & alive) <= 1)
            order.append(leaf)
            alive.discard(leaf)
        order.extend(alive)
        return order


def _split(P: SimplicialComplex, alpha: Face) -> tuple[SimplicialComplex, SimplicialComplex]:
    facets = P.facets
    cut = {alpha[:j] + alpha[j + 1:] for j in range(3)}
    by_edge: dict[Face, list[int]] = {}
    for i, f in enumerate(facets):
        for j in range(3):
            e = f[:j] + f[j + 1:]
            if e not in cut:
                by_edge.setdefault(e, []).append(i)
    pairs = [tuple(v) for v in by_edge.values() if len(v) == 2]
    comps = _components(range(len(facets)), pairs)
    if len(comps) != 2:
        raise DecompositionError(
            f"cutting along {alpha} gave {len(comps)} pieces; the input is not a valid 2-sphere"
        )
    sides = [
        SimplicialComplex._from_canonical([facets[i] for i in comp] + [alpha]) for comp in comps
    ]
    return sides[0], sides[1]


def primitive_decomposition(S: SimplicialComplex) -> ConnectedSumTree:
    """Cut along missing triangles (lexicographically smallest first) until
    every piece is primitive."""
    _require_sphere(S)
    nodes: list[SimplicialComplex] = []
    raw_edges: list[tuple[int, int, Face]] = []

    def decompose(P: SimplicialComplex) -> list[int]:
        alphas = sorted(_missing(P))
        if not alphas:
            nodes.append(P)
            return [len(nodes) - 1]
        alpha = alphas[0]
        A, B = _split(P, alpha)
        ids_a, ids_b = decompose(A), decompose(B)
        ha = [i for i in ids_a if alpha in nodes[i].facets]
        hb = [i for i in ids_b if alpha in nodes[i].facets]
        if len(ha) != 1 or len(hb) != 1:
            raise DecompositionError(f"triangle {alpha} is not a facet of exactly one summand per side")
        raw_edges.append((ha[0], hb[0], alpha))
        return ids_a + ids_b

    decompose(S)
    order = sorted(range(len(nodes)), key=lambda i: (nodes[i].vertices[0], nodes[i].facets))
    new = {old: k for k, old in enumerate(order)}
    edges = sorted((min(new[a], new[b]), max(new[a], new[b]), al) for a, b, al in raw_edges)
    return ConnectedSumTree(tuple(nodes[i] for i in order), tuple(edges))


def is_icosian(S: SimplicialComplex) -> bool:
    tree = primitive_decomposition(S)
    return bool(tree.nodes) and all(c is SummandClass.ICOSAHEDRON for c in tree.classes)


@dataclass(frozen=True)
class VertexLink:
    vertex: int
    k: int
    ell: int
    other: int

    @property
    def stacked(self) -> bool:
        return self.k == 0 and self.other == 0

    @property
    def icosian(self) -> bool:
        return self.ell == 0 and self.other == 0 and self.k > 0


@dataclass(frozen=True)
class LinkProfile:
    vertices: tuple[VertexLink, ...]

    @property
    def k(self) -> int:
        return sum(v.k for v in self.vertices)

    @property
    def is_locally_stacked(self) -> bool:
        return all(v.stacked for v in self.vertices)

    @property
    def is_locally_icosian(self) -> bool:
        return all(v.icosian for v in self.vertices)

    @property
    def link_screen_pass(self) -> bool:
        """Every link is a sum of tetrahedron boundaries and icosahedra."""
        return all(v.other == 0 for v in self.vertices)

    def count_relation_holds(self, n: int) -> bool:
        """n - 1 = 9 k(x) + 3 + l(x) at every vertex."""
        return all(n - 1 == 9 * v.k + 3 + v.ell for v in self.vertices)


def link_profile(M: SimplicialComplex) -> LinkProfile:
    if not is_closed_3manifold(M):
        raise ValidationError("link profiles need a closed 3-manifold")
    out = []
    for x in M.vertices:
        tree = primitive_decomposition(link(M, x))
        cls = tree.classes
        out.append(VertexLink(
            x,
            cls.count(SummandClass.ICOSAHEDRON),
            cls.count(SummandClass.STANDARD_S24),
            cls.count(SummandClass.OTHER),
        ))
    return LinkProfile(tuple(out))
