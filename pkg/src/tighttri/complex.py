"""Finite abstract simplicial complexes and their combinatorics.

A complex is stored by its facets (inclusion-maximal faces), each a strictly
increasing tuple of non-negative integer labels.  The full face lattice is
derived on first use and cached.  Internally faces are also kept as vertex
bitmasks, bit ``i`` standing for the ``i``-th smallest label, which is what
the subset kernels consume.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import CapExceeded, ValidationError

Face = tuple[int, ...]

# refuse to materialise face lattices larger than this
LATTICE_CAP = 2_000_000


def make_face(vertices: Iterable[int]) -> Face:
    """Canonical face from an iterable of labels; rejects repeats."""
    if isinstance(vertices, str):
        vertices = parse_face(vertices)
    vs = tuple(vertices)
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ValidationError(f"vertex labels must be non-negative integers, got {v!r}")
    face = tuple(sorted(vs))
    if len(set(face)) != len(face):
        raise ValidationError(f"duplicate vertex in face {vs}")
    return face


def parse_face(text: str) -> Face:
    """Parse ``"1235"`` (single-digit labels) or ``"1,2,3"`` / ``"1 2 3"``."""
    text = text.strip()
    if re.fullmatch(r"\d+", text):
        return make_face(int(c) for c in text)
    parts = [p for p in re.split(r"[,\s]+", text) if p]
    return make_face(int(p) for p in parts)


class SimplicialComplex:
    """Immutable finite abstract simplicial complex.

    Equality is structural: two complexes are equal iff they have the same
    facets with the same labels.
    """

    def __init__(self, facets: Iterable[Iterable[int]] = ()) -> None:
        faces = {make_face(f) for f in facets}
        faces.discard(())
        self._facets = _maximal(faces)

    @classmethod
    def _from_canonical(cls, facets: Iterable[Face]) -> "SimplicialComplex":
        obj = cls.__new__(cls)
        fs = set(facets)
        fs.discard(())
        obj._facets = _maximal(fs)
        return obj

    @property
    def facets(self) -> tuple[Face, ...]:
        return self._facets

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self._facets for v in f}))

    @cached_property
    def index(self) -> dict[int, int]:
        """Label -> bit position."""
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self._facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self._facets

    def mask(self, vertices: Iterable[int]) -> int:
        idx = self.index
        m = 0
        for v in vertices:
            try:
                m |= 1 << idx[v]
            except KeyError:
                raise ValidationError(f"{v} is not a vertex") from None
        return m

    def labels_of(self, mask: int) -> Face:
        vs = self.vertices
        out = []
        while mask:
            low = mask & -mask
            out.append(vs[low.bit_length() - 1])
            mask ^= low
        return tuple(out)

    @cached_property
    def _lattice(self) -> tuple[tuple[Face, ...], ...]:
        bound = sum(2 ** len(f) for f in self._facets)
        if bound > LATTICE_CAP and len({f for fs in _bounded_faces(self._facets) for f in fs}) > LATTICE_CAP:
            raise CapExceeded(
                f"face lattice has more than {LATTICE_CAP} faces", size=bound, cap=LATTICE_CAP
            )
        by_dim: list[set[Face]] = [set() for _ in range(self.dim + 1)]
        for f in self._facets:
            for s in range(1, len(f) + 1):
                by_dim[s - 1].update(combinations(f, s))
        return tuple(tuple(sorted(fs)) for fs in by_dim)

    @cached_property
    def _face_set(self) -> frozenset[Face]:
        return frozenset(f for fs in self._lattice for f in fs)

    def faces(self, k: int) -> tuple[Face, ...]:
        """All faces of dimension ``k`` in lexicographic order."""
        if k == -1:
            return ((),)
        if k < -1 or k > self.dim:
            return ()
        return self._lattice[k]

    def all_faces(self) -> Iterable[Face]:
        yield ()
        for fs in self._lattice:
            yield from fs

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(fs) for fs in self._lattice)

    def __contains__(self, face: object) -> bool:
        if not isinstance(face, (tuple, list, set, frozenset)):
            return False
        f = tuple(sorted(face))
        return f == () or f in self._face_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex(f_vector={self.f_vector}, facets={len(self._facets)})"

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.f_vector))

    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) <= 1

    def relabel(self, mapping: Mapping[int, int]) -> "SimplicialComplex":
        return SimplicialComplex(tuple(mapping.get(v, v) for v in f) for f in self._facets)

    @cached_property
    def chain_data(self) -> tuple[list[list[int]], list[list[int]]]:
        """Face bitmasks and boundary incidence in the kernel layout."""
        idx = self.index
        masks: list[list[int]] = []
        positions: list[dict[Face, int]] = []
        for k, fs in enumerate(self._lattice):
            ms = []
            for f in fs:
                m = 0
                for v in f:
                    m |= 1 << idx[v]
                ms.append(m)
            masks.append(ms)
            positions.append({f: g for g, f in enumerate(fs)})
        bnd: list[list[int]] = [[]]
        for k in range(1, len(self._lattice)):
            below = positions[k - 1]
            flat = []
            for f in self._lattice[k]:
                for j in range(k + 1):
                    flat.append(below[f[:j] + f[j + 1:]])
            bnd.append(flat)
        return masks, bnd

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbour bitmask of each vertex (by bit position)."""
        idx = self.index
        adj = [0] * self.n_vertices
        for u, v in self.faces(1):
            adj[idx[u]] |= 1 << idx[v]
            adj[idx[v]] |= 1 << idx[u]
        return tuple(adj)

    def neighbours(self, v: int) -> Face:
        return self.labels_of(self.adjacency[self.index[v]])

    def degree(self, v: int) -> int:
        return bin(self.adjacency[self.index[v]]).count("1")

    def kernel(self, p: int, backend: str | None = None):
        """Subset kernel over GF(p) (``p == 0``: rationals), cached per field."""
        from . import kernels

        cache = self.__dict__.setdefault("_kernels", {})
        key = (p, backend)
        if key not in cache:
            masks, bnd = self.chain_data
            cache[key] = kernels.chain_kernel(masks, bnd, p, self.n_vertices, backend)
        return cache[key]


def _bounded_faces(facets: Sequence[Face]) -> Iterable[set[Face]]:
    # counts distinct faces, giving up once the cap is passed
    seen: set[Face] = set()
    for f in facets:
        for s in range(1, len(f) + 1):
            seen.update(combinations(f, s))
            if len(seen) > LATTICE_CAP:
                yield seen
                return
    yield seen


def _maximal(faces: set[Face]) -> tuple[Face, ...]:
    ordered = sorted(faces, key=len, reverse=True)
    kept: list[frozenset[int]] = []
    out = []
    for f in ordered:
        s = frozenset(f)
        if any(s <= k for k in kept):
            continue
        kept.append(s)
        out.append(f)
    return tuple(sorted(out))


EMPTY = SimplicialComplex()


def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex generated by ``facets``; dominated input faces are absorbed."""
    facets = list(facets)
    if not facets:
        raise ValidationError("at least one facet is required")
    canon = [make_face(f) for f in facets]
    if all(f == () for f in canon):
        raise ValidationError("at least one nonempty facet is required")
    return SimplicialComplex._from_canonical(canon)


def _check_vertices(X: SimplicialComplex, A: Iterable[int]) -> frozenset[int]:
    A = frozenset(A)
    missing = A - set(X.vertices)
    if missing:
        raise ValidationError(f"not vertices of the complex: {sorted(missing)}")
    return A


def induced_subcomplex(X: SimplicialComplex, A: Iterable[int]) -> SimplicialComplex:
    """X[A]: the faces of X contained in A."""
    A = _check_vertices(X, A)
    return SimplicialComplex._from_canonical(tuple(v for v in f if v in A) for f in X.facets)


def link(X: SimplicialComplex, x: int) -> SimplicialComplex:
    """Faces not containing x whose union with x is a face."""
    _check_vertices(X, (x,))
    return SimplicialComplex._from_canonical(tuple(v for v in f if v != x) for f in X.facets if x in f)


def antistar(X: SimplicialComplex, x: int) -> SimplicialComplex:
    _check_vertices(X, (x,))
    return induced_subcomplex(X, set(X.vertices) - {x})


def star(X: SimplicialComplex, x: int) -> SimplicialComplex:
    _check_vertices(X, (x,))
    return SimplicialComplex._from_canonical(f for f in X.facets if x in f)


def skeleton(X: SimplicialComplex, k: int) -> SimplicialComplex:
    if not 0 <= k <= X.dim:
        raise ValidationError(f"skeleton dimension {k} outside 0..{X.dim}")
    out: set[Face] = set()
    for f in X.facets:
        if len(f) <= k + 1:
            out.add(f)
        else:
            out.update(combinations(f, k + 1))
    return SimplicialComplex._from_canonical(out)


def cone(apex: int, X: SimplicialComplex) -> SimplicialComplex:
    if apex in X.vertices:
        raise ValidationError(f"apex {apex} is already a vertex")
    make_face((apex,))
    if X.is_empty():
        return SimplicialComplex._from_canonical([(apex,)])
    return SimplicialComplex._from_canonical(tuple(sorted(f + (apex,))) for f in X.facets)


def union(*complexes: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex._from_canonical(f for X in complexes for f in X.facets)


def add_faces(X: SimplicialComplex, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex._from_canonical(list(X.facets) + [make_face(f) for f in faces])


def boundary_complex(X: SimplicialComplex) -> SimplicialComplex:
    """Complex generated by the codimension-one faces lying in exactly one facet."""
    if not X.is_pure():
        raise ValidationError("boundary is only defined here for pure complexes")
    count: dict[Face, int] = {}
    for f in X.facets:
        for j in range(len(f)):
            r = f[:j] + f[j + 1:]
            count[r] = count.get(r, 0) + 1
    return SimplicialComplex._from_canonical(r for r, c in count.items() if c == 1)


def is_k_neighbourly(X: SimplicialComplex, k: int) -> bool:
    """Every k vertices span a face, i.e. f_{k-1} = C(f_0, k)."""
    if k < 2:
        raise ValidationError("neighbourliness is defined for k >= 2")
    fk = X.f_vector[k - 1] if k - 1 < len(X.f_vector) else 0
    return fk == comb(X.n_vertices, k)


def neighbourliness(X: SimplicialComplex) -> int:
    """Largest k <= f_0 such that X is k-neighbourly (1 if not neighbourly)."""
    k = 1
    while k + 1 <= X.n_vertices and is_k_neighbourly(X, k + 1):
        k += 1
    return k


def _components(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> list[set[int]]:
    parent = {v: v for v in vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, set[int]] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return sorted(groups.values(), key=min)


def components(X: SimplicialComplex) -> list[set[int]]:
    return _components(X.vertices, X.faces(1))


def is_connected(X: SimplicialComplex) -> bool:
    return len(components(X)) == 1


def c_count(X: SimplicialComplex, x: int, y: int) -> int:
    """Components of the link of y with x deleted that meet a neighbour of x.

    Neighbours of x are taken inside the link of y.
    """
    if x == y:
        raise ValidationError("c_count needs two distinct vertices")
    _check_vertices(X, (x, y))
    Ly = link(X, y)
    rest = [v for v in Ly.vertices if v != x]
    edges = [(u, v) for u, v in Ly.faces(1) if x not in (u, v)]
    near = {v for e in Ly.faces(1) if x in e for v in e if v != x}
    return sum(1 for comp in _components(rest, edges) if comp & near)


def _identify(faces: Iterable[Face], mapping: Mapping[int, int]) -> list[Face]:
    out = []
    for f in faces:
        g = tuple(sorted({mapping.get(v, v) for v in f}))
        if len(g) != len(f):
            raise ValidationError("identification collapses a face")
        out.append(g)
    return out


def _check_gluing(X: SimplicialComplex, sigma: Face, tau: Face, psi: Mapping[int, int]) -> None:
    if sigma not in X.facets or tau not in X.facets:
        raise ValidationError("sigma and tau must be facets")
    if len(sigma) != len(tau):
        raise ValidationError("sigma and tau have different dimensions")
    if set(sigma) & set(tau):
        raise ValidationError("sigma and tau must be disjoint")
    if sorted(psi) != list(sigma) or sorted(psi.values()) != list(tau):
        raise ValidationError("psi must be a bijection from sigma onto tau")
    for v in sigma:
        common = set(link(X, v).vertices) & set(link(X, psi[v]).vertices)
        if common:
            raise ValidationError(
                f"links of {v} and {psi[v]} share vertices {sorted(common)}; identification is not allowed"
            )


def _glue(X: SimplicialComplex, sigma: Face, tau: Face, psi: Mapping[int, int]) -> SimplicialComplex:
    # remove exactly the two facets, keep every other face, then identify
    keep = [f for f in X.all_faces() if f not in (sigma, tau) and f]
    inverse = {w: v for v, w in psi.items()}
    return SimplicialComplex._from_canonical(_identify(keep, inverse))


def connected_sum(
    X1: SimplicialComplex,
    sigma: Iterable[int],
    X2: SimplicialComplex,
    tau: Iterable[int],
    psi: Mapping[int, int] | None = None,
) -> SimplicialComplex:
    """Connected sum along facets ``sigma`` of X1 and ``tau`` of X2.

    X2 is first relabelled into labels above ``max(V(X1))``; ``psi`` is given
    on the original labels (default: sorted order).  Vertex ``psi(v)`` of X2
    is identified with ``v`` of X1, so the result keeps X1's labels.
    """
    sigma, tau = make_face(sigma), make_face(tau)
    if sigma not in X1.facets or tau not in X2.facets:
        raise ValidationError("sigma and tau must be facets of their complexes")
    if len(sigma) != len(tau):
        raise ValidationError("sigma and tau have different dimensions")
    if psi is None:
        psi = dict(zip(sigma, tau))
    psi = dict(psi)
    if sorted(psi) != list(sigma) or sorted(psi.values()) != list(tau):
        raise ValidationError("psi must be a bijection from sigma onto tau")
    offset = (max(X1.vertices) + 1) if X1.vertices else 0
    shift = {v: v + offset for v in X2.vertices}
    X2s = X2.relabel(shift)
    tau_s = make_face(shift[v] for v in tau)
    psi_s = {v: shift[w] for v, w in psi.items()}
    joint = union(X1, X2s)
    _check_gluing(joint, sigma, tau_s, psi_s)
    glued = _glue(joint, sigma, tau_s, psi_s)
    # compact X2's surviving labels to a contiguous range above X1's
    rest = sorted(set(glued.vertices) - set(X1.vertices))
    return glued.relabel({v: offset + i for i, v in enumerate(rest)})


def handle_addition(
    X: SimplicialComplex, sigma: Iterable[int], tau: Iterable[int], psi: Mapping[int, int] | None = None
) -> SimplicialComplex:
    """Remove facets sigma, tau of one complex and identify v with psi(v)."""
    sigma, tau = make_face(sigma), make_face(tau)
    if psi is None:
        psi = dict(zip(sigma, tau))
    psi = dict(psi)
    _check_gluing(X, sigma, tau, psi)
    return _glue(X, sigma, tau, psi)


@dataclass(frozen=True)
class PermutationSpec:
    """Permutations of a label set, used to generate orbit complexes.

    Each generator is stored as a full mapping on ``labels``.
    """

    labels: tuple[int, ...]
    generators: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def degree(self) -> int:
        return len(self.labels)

    def maps(self) -> list[dict[int, int]]:
        return [dict(g) for g in self.generators]

    @classmethod
    def from_maps(cls, labels: Iterable[int], maps: Iterable[Mapping[int, int]]) -> "PermutationSpec":
        labels = tuple(sorted(labels))
        gens = []
        for m in maps:
            full = {v: m.get(v, v) for v in labels}
            if sorted(full.values()) != list(labels) or set(m) - set(labels):
                raise ValidationError(f"generator {dict(m)} is not a bijection on {labels}")
            gens.append(tuple(sorted(full.items())))
        return cls(labels, tuple(gens))

    @classmethod
    def parse(cls, labels: Iterable[int], generators: Iterable[str | Sequence[int]]) -> "PermutationSpec":
        """Generators in cycle notation (``"(132645)"``, ``"(1,3)(2,4)"``) or
        one-line form (a list of images of the sorted labels)."""
        labels = tuple(sorted(labels))
        maps = []
        for g in generators:
            if isinstance(g, str):
                maps.append(parse_cycles(g))
            else:
                images = list(g)
                if len(images) != len(labels):
                    raise ValidationError(f"one-line permutation {images} has wrong length")
                maps.append(dict(zip(labels, images)))
        return cls.from_maps(labels, maps)

    @classmethod
    def cyclic(cls, n: int, start: int = 0) -> "PermutationSpec":
        """The rotation i -> i+1 on ``start .. start+n-1`` (mod n)."""
        labels = range(start, start + n)
        return cls.from_maps(labels, [{start + i: start + (i + 1) % n for i in range(n)}])


def parse_cycles(text: str) -> dict[int, int]:
    text = text.strip()
    if not text or text in ("()", "id"):
        return {}
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles or re.sub(r"\([^()]*\)", "", text).strip():
        raise ValidationError(f"cannot parse permutation {text!r}")
    out: dict[int, int] = {}
    for c in cycles:
        c = c.strip()
        if re.fullmatch(r"\d+", c):
            elems = [int(ch) for ch in c]
        else:
            elems = [int(t) for t in re.split(r"[,\s]+", c) if t]
        if len(set(elems)) != len(elems):
            raise ValidationError(f"repeated element in cycle ({c})")
        for a, b in zip(elems, elems[1:] + elems[:1]):
            if a in out:
                raise ValidationError(f"element {a} appears in two cycles of {text!r}")
            out[a] = b
    return out


def orbit_complex(
    spec: PermutationSpec, seeds: Iterable[Iterable[int]], cap: int = 10**6
) -> SimplicialComplex:
    """Close ``seeds`` under the generators and build the complex."""
    maps = spec.maps()
    labels = set(spec.labels)
    seen: set[Face] = set()
    queue: deque[Face] = deque()
    for s in seeds:
        f = make_face(s)
        if not set(f) <= labels:
            raise ValidationError(f"seed {f} uses labels outside {sorted(labels)}")
        if f not in seen:
            seen.add(f)
            queue.append(f)
    while queue:
        f = queue.popleft()
        for m in maps:
            g = tuple(sorted(m[v] for v in f))
            if g not in seen:
                seen.add(g)
                if len(seen) > cap:
                    raise ValidationError(f"orbit closure exceeds {cap} faces")
                queue.append(g)
    return from_facets(seen)


def induced_cycles(
    X: SimplicialComplex, length_filter: Iterable[int] | None = None
) -> list[Face]:
    """All induced cycles of X, each as a vertex sequence.

    A cycle of length >= 4 is induced iff it is chordless in the 1-skeleton;
    a 3-cycle additionally must not bound a 2-face.  Each cycle starts at its
    smallest vertex and runs towards the smaller of that vertex's two cycle
    neighbours.  Output is sorted by vertex set, then by the sequence.
    """
    wanted = None if length_filter is None else set(length_filter)
    max_len = max(wanted) if wanted else X.n_vertices
    adj = X.adjacency
    n = X.n_vertices
    found: list[tuple[int, ...]] = []

    def extend(path: list[int], interior: int) -> None:
        last = path[-1]
        root = path[0]
        cand = adj[last] & ~((1 << (root + 1)) - 1) & ~interior & ~(1 << last)
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if adj[v] & interior:
                continue
            if adj[v] >> root & 1:
                if len(path) >= 2 and path[1] < v:
                    found.append(tuple(path) + (v,))
                continue
            if len(path) + 1 < max_len:
                extend(path + [v], interior | (1 << last) if len(path) >= 2 else interior)

    for root in range(n):
        nb = adj[root] & ~((1 << (root + 1)) - 1)
        while nb:
            low = nb & -nb
            nb ^= low
            extend([root, low.bit_length() - 1], 0)

    vs = X.vertices
    out = []
    for cyc in found:
        if wanted is not None and len(cyc) not in wanted:
            continue
        labels = tuple(vs[i] for i in cyc)
        if len(labels) == 3 and labels in X:
            continue
        out.append(labels)
    out.sort(key=lambda c: (tuple(sorted(c)), c))
    return out


@dataclass(frozen=True)
class ManifoldReport:
    dimension: int
    f_vector: tuple[int, ...]
    is_pure: bool
    is_connected: bool
    is_pseudomanifold: bool
    is_closed_surface: bool
    is_closed_3manifold: bool
    euler_characteristic: int
    dehn_sommerville: bool | None = field(default=None)


def _ridge_counts(X: SimplicialComplex) -> dict[Face, int]:
    count: dict[Face, int] = {}
    for f in X.facets:
        for j in range(len(f)):
            r = f[:j] + f[j + 1:]
            count[r] = count.get(r, 0) + 1
    return count


def is_pseudomanifold(X: SimplicialComplex) -> bool:
    """Pure, every ridge in at most two facets, strongly connected."""
    if X.is_empty() or not X.is_pure():
        return False
    counts = _ridge_counts(X)
    if any(c > 2 for c in counts.values()):
        return False
    by_ridge: dict[Face, list[int]] = {}
    for i, f in enumerate(X.facets):
        for j in range(len(f)):
            by_ridge.setdefault(f[:j] + f[j + 1:], []).append(i)
    edges = [tuple(v) for v in by_ridge.values() if len(v) == 2]
    return len(_components(range(len(X.facets)), edges)) == 1


def is_cycle(X: SimplicialComplex) -> bool:
    """1-dimensional, connected, every vertex of degree two."""
    return (
        X.dim == 1
        and X.n_vertices >= 3
        and all(X.degree(v) == 2 for v in X.vertices)
        and is_connected(X)
    )


def is_closed_surface(X: SimplicialComplex) -> bool:
    if X.dim != 2 or not X.is_pure() or not is_connected(X):
        return False
    if any(c != 2 for r, c in _ridge_counts(X).items()):
        return False
    if len(_ridge_counts(X)) != X.f_vector[1]:
        return False
    return all(is_cycle(link(X, v)) for v in X.vertices)


def _is_2sphere(S: SimplicialComplex) -> bool:
    # connected closed surface with Euler characteristic 2 (surface classification)
    return is_closed_surface(S) and S.euler_characteristic() == 2


def is_closed_3manifold(X: SimplicialComplex) -> bool:
    if X.dim != 3 or not X.is_pure() or not is_connected(X):
        return False
    counts = _ridge_counts(X)
    if any(c != 2 for c in counts.values()) or len(counts) != X.f_vector[2]:
        return False
    return all(_is_2sphere(link(X, v)) for v in X.vertices)


def manifold_check(X: SimplicialComplex) -> ManifoldReport:
    closed3 = is_closed_3manifold(X)
    ds = None
    if X.dim == 3:
        f = X.f_vector
        ds = f[2] == 2 * f[3] and X.euler_characteristic() == 0
    return ManifoldReport(
        dimension=X.dim,
        f_vector=X.f_vector,
        is_pure=X.is_pure(),
        is_connected=bool(X.vertices) and is_connected(X),
        is_pseudomanifold=is_pseudomanifold(X),
        is_closed_surface=is_closed_surface(X),
        is_closed_3manifold=closed3,
        euler_characteristic=X.euler_characteristic(),
        dehn_sommerville=ds,
    )


def find_isomorphism(X: SimplicialComplex, Y: SimplicialComplex) -> dict[int, int] | None:
    """A label bijection carrying X onto Y, or None.

    Backtracking over vertex assignments with degree and face-count pruning;
    intended for small test complexes (at most 13 vertices).
    """
    if X.f_vector != Y.f_vector or X.n_vertices != Y.n_vertices:
        return None
    if X.n_vertices > 13:
        raise ValidationError("isomorphism search is limited to 13 vertices")

    def profile(Z: SimplicialComplex, v: int) -> tuple[int, ...]:
        return tuple(sum(1 for f in Z.faces(k) if v in f) for k in range(Z.dim + 1))

    px = {v: profile(X, v) for v in X.vertices}
    py = {v: profile(Y, v) for v in Y.vertices}
    if sorted(px.values()) != sorted(py.values()):
        return None
    order = sorted(X.vertices, key=lambda v: (-X.degree(v), v))
    xfaces = [f for f in X.all_faces() if f]
    yset = set(f for f in Y.all_faces() if f)
    by_max: dict[int, list[Face]] = {}
    pos = {v: i for i, v in enumerate(order)}
    for f in xfaces:
        by_max.setdefault(max(pos[v] for v in f), []).append(f)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def go(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in Y.vertices:
            if w in used or py[w] != px[v]:
                continue
            mapping[v] = w
            if all(tuple(sorted(mapping[u] for u in f)) in yset for f in by_max.get(i, ())):
                used.add(w)
                if go(i + 1):
                    return True
                used.discard(w)
            del mapping[v]
        return False

    return dict(mapping) if go(0) else None
