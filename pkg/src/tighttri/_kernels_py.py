"""Pure-Python implementation of the subset kernels.

Mirrors ``_kernels.pyx`` function for function.  It is used when the compiled
extension is missing, for rational coefficients (``p == 0``), and for
complexes with more than 64 vertices (masks are arbitrary-size ints here).

Chain data layout, shared with the compiled backend:

``masks[k]``
    vertex bitmasks of the k-faces in canonical order;
``bnd[k]``
    for ``k >= 1`` a flat list of length ``len(masks[k]) * (k + 1)``; entry
    ``g * (k + 1) + j`` is the index in ``masks[k - 1]`` of the face obtained
    by deleting the j-th smallest vertex of k-face ``g`` (sign ``(-1) ** j``).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .linalg import rank_gf2_bits, rank_mod_p, rank_rational

BACKEND = "python"


class ChainKernel:
    def __init__(self, masks: Sequence[Sequence[int]], bnd: Sequence[Sequence[int]], p: int) -> None:
        self.masks = [list(m) for m in masks]
        self.bnd = [list(b) for b in bnd]
        self.p = p
        self.dim = len(self.masks) - 1
        self._full: list[int] | None = None

    def _rank(self, k: int, rows: dict[int, int], cols: Iterable[int]) -> int:
        """Rank of the boundary block of degree ``k``.

        ``rows`` maps global (k-1)-face index to local row; faces absent
        from ``rows`` are dropped.  ``cols`` lists global k-face indices.
        """
        b = self.bnd[k]
        w = k + 1
        if self.p == 2:
            vecs = []
            for g in cols:
                bits = 0
                for j in range(w):
                    r = rows.get(b[g * w + j])
                    if r is not None:
                        bits |= 1 << r
                if bits:
                    vecs.append(bits)
            return rank_gf2_bits(vecs)
        nr = len(rows)
        mat = []
        for g in cols:
            col = [0] * nr
            nz = False
            for j in range(w):
                r = rows.get(b[g * w + j])
                if r is not None:
                    col[r] = -1 if j & 1 else 1
                    nz = True
            if nz:
                mat.append(col)
        if not mat:
            return 0
        # rank of the transpose equals rank of the block
        if self.p == 0:
            return rank_rational(mat)
        return rank_mod_p(mat, self.p)

    def _local(self, subset: int) -> list[list[int]]:
        return [[g for g, m in enumerate(ms) if m & ~subset == 0] for ms in self.masks]

    def full_ranks(self) -> list[int]:
        """``r[k]`` = rank of the full boundary map C_k -> C_{k-1}; r[0] = 0."""
        if self._full is None:
            r = [0] * (self.dim + 2)
            for k in range(1, self.dim + 1):
                rows = {g: g for g in range(len(self.masks[k - 1]))}
                r[k] = self._rank(k, rows, range(len(self.masks[k])))
            self._full = r
        return self._full

    def subset_betti(self, subset: int) -> list[int]:
        """Reduced Betti numbers of the subcomplex induced on ``subset``."""
        local = self._local(subset)
        d = self.dim
        r = [0] * (d + 2)
        for k in range(1, d + 1):
            if local[k]:
                rows = {g: i for i, g in enumerate(local[k - 1])}
                r[k] = self._rank(k, rows, local[k])
        betti = [len(local[k]) - r[k] - r[k + 1] for k in range(d + 1)]
        if d >= 0:
            betti[0] -= 1
        return betti

    def size_sums(self, n: int) -> list[list[int]]:
        """Sums of reduced Betti numbers over all vertex subsets, by size.

        Entry ``[s][i]`` is the sum of the reduced i-th Betti numbers over
        all subsets of cardinality ``s`` of the ``n`` vertices.
        """
        d = self.dim
        out = [[0] * (d + 1) for _ in range(n + 1)]
        for subset in range(1 << n):
            row = out[bin(subset).count("1")]
            for i, b in enumerate(self.subset_betti(subset)):
                row[i] += b
        return out

    def injective_at(self, subset: int, degree: int) -> bool:
        """Whether H_degree(X[subset]) -> H_degree(X) is injective.

        Boundaries of X that are supported on the subcomplex form
        ``B_X ∩ C(Y)``; its dimension is rank(∂) minus the rank of the rows
        outside Y.  Injectivity is equality with rank(∂_Y).
        """
        k = degree + 1
        if k > self.dim:
            return True
        full = self.full_ranks()[k]
        inside_rows = [g for g, m in enumerate(self.masks[k - 1]) if m & ~subset == 0]
        inside_set = set(inside_rows)
        outside = {g: i for i, g in enumerate(g for g in range(len(self.masks[k - 1])) if g not in inside_set)}
        r_out = self._rank(k, outside, range(len(self.masks[k])))
        cols_y = [g for g, m in enumerate(self.masks[k]) if m & ~subset == 0]
        r_y = self._rank(k, {g: i for i, g in enumerate(inside_rows)}, cols_y)
        return full - r_out == r_y

    def first_noninjective(self, subsets: Sequence[int]) -> tuple[int, int]:
        """First (position, degree) in ``subsets`` where injectivity fails.

        Returns ``(-1, -1)`` when every map is injective.
        """
        for pos, s in enumerate(subsets):
            for degree in range(self.dim):
                if not self.injective_at(s, degree):
                    return pos, degree
        return -1, -1


def b0_size_sums(adjacency: Sequence[int], n: int) -> list[int]:
    """Sum of reduced zeroth Betti numbers of induced subgraphs, by size.

    ``adjacency[v]`` is the neighbour bitmask of vertex ``v``.  The empty
    subset contributes -1 at size 0.
    """
    out = [0] * (n + 1)
    for subset in range(1 << n):
        comps = 0
        rest = subset
        while rest:
            comps += 1
            frontier = rest & -rest
            seen = frontier
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = adjacency[v] & subset & ~seen
                seen |= new
                frontier |= new
            rest &= ~seen
        out[bin(subset).count("1")] += comps - 1
    return out


def subsets_by_size(n: int, decreasing: bool) -> list[int]:
    """All subsets of ``range(n)`` as bitmasks: by size, then lexicographic."""
    sizes = range(n, -1, -1) if decreasing else range(n + 1)
    out = []
    for s in sizes:
        for combo in combinations(range(n), s):
            m = 0
            for v in combo:
                m |= 1 << v
            out.append(m)
    return out
