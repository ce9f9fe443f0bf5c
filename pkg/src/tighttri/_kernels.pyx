# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset kernels over GF(p).

Same interface and chain-data layout as ``_kernels_py``; restricted to prime
``p < 2**31`` and at most 64 vertices.  Rationals always go through the
Python backend.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset

ctypedef unsigned long long u64
ctypedef long long i64

BACKEND = "cython"


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline i64 _inv(i64 a, i64 p) nogil:
    cdef i64 t = 0, nt = 1, r = p, nr = a % p, q, tmp
    while nr:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef int _rank(i64* m, int nr, int nc, i64 p) nogil:
    """Row-echelon rank of an ``nr x nc`` row-major matrix; destroys ``m``."""
    cdef int rank = 0, c, r, piv, j
    cdef i64 inv, f, tmp
    cdef i64* prow
    cdef i64* row
    if nr == 0 or nc == 0:
        return 0
    for c in range(nc):
        piv = -1
        for r in range(rank, nr):
            if m[r * nc + c] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(c, nc):
                tmp = m[piv * nc + j]
                m[piv * nc + j] = m[rank * nc + j]
                m[rank * nc + j] = tmp
        prow = m + rank * nc
        if p != 2:
            inv = _inv(prow[c], p)
            for j in range(c, nc):
                prow[j] = (prow[j] * inv) % p
        for r in range(rank + 1, nr):
            row = m + r * nc
            f = row[c]
            if f != 0:
                if p == 2:
                    for j in range(c, nc):
                        row[j] ^= prow[j]
                else:
                    for j in range(c, nc):
                        row[j] = (row[j] - f * prow[j]) % p
                        if row[j] < 0:
                            row[j] += p
        rank += 1
        if rank == nr:
            break
    return rank


def rank_mod_p(rows, i64 p):
    """Rank modulo prime ``p`` of a list-of-lists integer matrix."""
    cdef int nr = len(rows), nc, i, j
    if nr == 0:
        return 0
    nc = len(rows[0])
    cdef i64* m = <i64*>malloc(max(1, nr * nc) * sizeof(i64))
    cdef i64 a
    try:
        for i in range(nr):
            row = rows[i]
            for j in range(nc):
                a = row[j] % p
                m[i * nc + j] = a
        return _rank(m, nr, nc, p)
    finally:
        free(m)


cdef class ChainKernel:
    cdef int dim
    cdef i64 p
    cdef int* nf
    cdef u64** masks
    cdef int** bnd
    cdef i64* buf
    cdef int* loc
    cdef int* cols
    cdef int maxf
    cdef object _full

    def __cinit__(self, masks, bnd, i64 p):
        cdef int k, g, w, nk
        self.dim = len(masks) - 1
        self.p = p
        self._full = None
        nd = self.dim + 1
        self.nf = <int*>calloc(max(nd, 1), sizeof(int))
        self.masks = <u64**>calloc(max(nd, 1), sizeof(u64*))
        self.bnd = <int**>calloc(max(nd, 1), sizeof(int*))
        self.maxf = 1
        cdef size_t maxcell = 1
        for k in range(nd):
            nk = len(masks[k])
            self.nf[k] = nk
            if nk > self.maxf:
                self.maxf = nk
            self.masks[k] = <u64*>malloc(max(nk, 1) * sizeof(u64))
            for g in range(nk):
                self.masks[k][g] = masks[k][g]
            if k >= 1:
                w = k + 1
                self.bnd[k] = <int*>malloc(max(nk * w, 1) * sizeof(int))
                for g in range(nk * w):
                    self.bnd[k][g] = bnd[k][g]
                if <size_t>nk * <size_t>self.nf[k - 1] > maxcell:
                    maxcell = <size_t>nk * <size_t>self.nf[k - 1]
        self.buf = <i64*>malloc(maxcell * sizeof(i64))
        self.loc = <int*>malloc(self.maxf * sizeof(int))
        self.cols = <int*>malloc(self.maxf * sizeof(int))

    def __dealloc__(self):
        cdef int k
        if self.masks != NULL:
            for k in range(self.dim + 1):
                free(self.masks[k])
                if k >= 1:
                    free(self.bnd[k])
        free(self.masks)
        free(self.bnd)
        free(self.nf)
        free(self.buf)
        free(self.loc)
        free(self.cols)

    cdef int _block_rank(self, int k, u64 row_keep, bint rows_inside, u64 col_keep, bint cols_all) nogil:
        """Rank of ∂_k with rows inside (or outside) ``row_keep`` and columns
        inside ``col_keep`` (or all columns)."""
        cdef int nr = 0, nc = 0, g, j, w = k + 1, r
        cdef u64 m
        cdef int* b = self.bnd[k]
        cdef u64* rm = self.masks[k - 1]
        cdef u64* cm = self.masks[k]
        for g in range(self.nf[k - 1]):
            m = rm[g]
            if ((m & ~row_keep) == 0) == rows_inside:
                self.loc[g] = nr
                nr += 1
            else:
                self.loc[g] = -1
        if nr == 0:
            return 0
        for g in range(self.nf[k]):
            if cols_all or (cm[g] & ~col_keep) == 0:
                self.cols[nc] = g
                nc += 1
        if nc == 0:
            return 0
        # rows of the buffer are columns of ∂ (transpose has equal rank)
        memset(self.buf, 0, <size_t>nc * <size_t>nr * sizeof(i64))
        for g in range(nc):
            for j in range(w):
                r = self.loc[b[self.cols[g] * w + j]]
                if r >= 0:
                    if j & 1:
                        self.buf[g * nr + r] = self.p - 1 if self.p != 2 else 1
                    else:
                        self.buf[g * nr + r] = 1
        return _rank(self.buf, nc, nr, self.p)

    cdef void _betti(self, u64 subset, i64* out) nogil:
        cdef int k, g, d = self.dim
        cdef int r_lo = 0, r_hi
        cdef int count
        for k in range(d + 1):
            count = 0
            for g in range(self.nf[k]):
                if (self.masks[k][g] & ~subset) == 0:
                    count += 1
            if k < d and count > 0:
                r_hi = self._block_rank(k + 1, subset, True, subset, False)
            else:
                r_hi = 0
            out[k] = count - r_lo - r_hi
            r_lo = r_hi
        if d >= 0:
            out[0] -= 1

    def full_ranks(self):
        cdef int k
        if self._full is None:
            r = [0] * (self.dim + 2)
            for k in range(1, self.dim + 1):
                r[k] = self._block_rank(k, ~(<u64>0), True, 0, True)
            self._full = r
        return self._full

    def subset_betti(self, u64 subset):
        cdef i64* out = <i64*>malloc((self.dim + 1) * sizeof(i64))
        try:
            self._betti(subset, out)
            return [out[k] for k in range(self.dim + 1)]
        finally:
            free(out)

    def size_sums(self, int n):
        if n > 40:
            raise ValueError("too many vertices for exhaustive subset sums")
        cdef int d = self.dim, k
        cdef u64 s, total = (<u64>1) << n
        cdef i64* out = <i64*>malloc((d + 1) * sizeof(i64))
        cdef i64* acc = <i64*>calloc((n + 1) * (d + 1), sizeof(i64))
        cdef int pc
        try:
            with nogil:
                s = 0
                while s < total:
                    self._betti(s, out)
                    pc = __builtin_popcountll(s)
                    for k in range(d + 1):
                        acc[pc * (d + 1) + k] += out[k]
                    s += 1
            return [[acc[pc * (d + 1) + k] for k in range(d + 1)] for pc in range(n + 1)]
        finally:
            free(out)
            free(acc)

    cdef bint _injective(self, u64 subset, int degree, int full) nogil:
        cdef int k = degree + 1
        cdef int r_out, r_y
        r_out = self._block_rank(k, subset, False, 0, True)
        r_y = self._block_rank(k, subset, True, subset, False)
        return full - r_out == r_y

    def injective_at(self, u64 subset, int degree):
        if degree + 1 > self.dim:
            return True
        full = self.full_ranks()[degree + 1]
        return bool(self._injective(subset, degree, full))

    def first_noninjective(self, subsets):
        cdef int pos, degree, n = len(subsets), d = self.dim
        full = self.full_ranks()
        cdef int* fr = <int*>malloc((d + 2) * sizeof(int))
        cdef u64* ss = <u64*>malloc(max(n, 1) * sizeof(u64))
        cdef int res_pos = -1, res_deg = -1
        try:
            for pos in range(d + 2):
                fr[pos] = full[pos]
            for pos in range(n):
                ss[pos] = subsets[pos]
            with nogil:
                for pos in range(n):
                    for degree in range(d):
                        if not self._injective(ss[pos], degree, fr[degree + 1]):
                            res_pos = pos
                            res_deg = degree
                            break
                    if res_pos >= 0:
                        break
            return res_pos, res_deg
        finally:
            free(fr)
            free(ss)


def b0_size_sums(adjacency, int n):
    """Sum of reduced zeroth Betti numbers of induced subgraphs, by size."""
    if n > 40:
        raise ValueError("too many vertices for exhaustive subset sums")
    cdef u64* adj = <u64*>malloc(max(n, 1) * sizeof(u64))
    cdef i64* acc = <i64*>calloc(n + 1, sizeof(i64))
    cdef u64 s, total = (<u64>1) << n, rest, frontier, seen, new
    cdef int v, comps, i
    try:
        for i in range(n):
            adj[i] = adjacency[i]
        with nogil:
            s = 0
            while s < total:
                comps = 0
                rest = s
                while rest:
                    comps += 1
                    frontier = rest & (~rest + 1)
                    seen = frontier
                    while frontier:
                        v = __builtin_ctzll(frontier)
                        frontier &= frontier - 1
                        new = adj[v] & s & ~seen
                        seen |= new
                        frontier |= new
                    rest &= ~seen
                acc[__builtin_popcountll(s)] += comps - 1
                s += 1
        return [acc[i] for i in range(n + 1)]
    finally:
        free(adj)
        free(acc)
