"""Exact dense linear algebra over GF(p), the rationals and the integers.

Matrices are plain lists of rows of Python ints.  Nothing here uses floating
point.  ``p == 0`` selects the rationals wherever a characteristic is taken.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def rank_gf2_bits(vectors: Sequence[int]) -> int:
    """Rank over GF(2) of vectors packed as integer bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for v in vectors:
        while v:
            low = v & -v
            other = pivots.get(low)
            if other is None:
                pivots[low] = v
                rank += 1
                break
            v ^= other
    return rank


def rank_mod_p(rows: Matrix, p: int) -> int:
    """Rank of an integer matrix reduced modulo the prime ``p``."""
    if p == 2:
        packed = []
        for row in rows:
            bits = 0
            for j, a in enumerate(row):
                if a & 1:
                    bits |= 1 << j
            packed.append(bits)
        return rank_gf2_bits(packed)
    m = [[a % p for a in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        prow = [(a * inv) % p for a in m[rank]]
        m[rank] = prow
        for r in range(rank + 1, len(m)):
            f = m[r][c]
            if f:
                row = m[r]
                m[r] = [(a - f * b) % p for a, b in zip(row, prow)]
        rank += 1
        if rank == len(m):
            break
    return rank


def rank_rational(rows: Matrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integers."""
    m = [list(row) for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[c]
        for r in range(rank + 1, len(m)):
            row = m[r]
            f = row[c]
            if f:
                m[r] = [(pv * a - f * b) // prev for a, b in zip(row, pr)]
            elif pv != prev:
                m[r] = [(pv * a) // prev for a in row]
        prev = pv
        rank += 1
        if rank == len(m):
            break
    return rank


def rank(rows: Matrix, p: int) -> int:
    """Rank over GF(p) for prime ``p``, or over Q when ``p == 0``."""
    if p == 0:
        return rank_rational(rows)
    return rank_mod_p(rows, p)


def nullspace(rows: Matrix, ncols: int, p: int) -> list[list]:
    """Basis of the right null space ``{v : M v = 0}``.

    Entries are ``Fraction`` for ``p == 0`` and ints in ``[0, p)`` otherwise.
    Uses textbook reduced row echelon form; kept deliberately naive because it
    serves as an independent check on the rank-only routines.
    """
    if p == 0:
        m = [[Fraction(a) for a in row] for row in rows]
        zero, one = Fraction(0), Fraction(1)

        def inv(a):
            return 1 / a

        def red(a):
            return a
    else:
        m = [[a % p for a in row] for row in rows]
        zero, one = 0, 1

        def inv(a):
            return pow(a, p - 2, p)

        def red(a):
            return a % p

    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != zero), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        s = inv(m[r][c])
        m[r] = [red(a * s) for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != zero:
                f = m[i][c]
                m[i] = [red(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = red(-m[i][fc])
        basis.append(v)
    return basis


def smith_invariants(rows: Matrix) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Elementary row/column reduction with the smallest-magnitude entry as
    pivot; the diagonal is then normalised with gcd/lcm swaps so that each
    factor divides the next.
    """
    m = [list(row) for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    diag: list[int] = []
    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            row = m[i]
            for j in range(t, nc):
                a = row[j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        m[t], m[i] = m[i], m[t]
        if j != t:
            for row in m:
                row[t], row[j] = row[j], row[t]
        while True:
            pv = m[t][t]
            done = True
            for i in range(t + 1, nr):
                f = m[i][t]
                if f:
                    q = f // pv
                    ri, rt = m[i], m[t]
                    for j in range(t, nc):
                        ri[j] -= q * rt[j]
                    if ri[t]:
                        done = False
            for j in range(t + 1, nc):
                f = m[t][j]
                if f:
                    q = f // pv
                    for i in range(t, nr):
                        m[i][j] -= q * m[i][t]
                    if m[t][j]:
                        done = False
            if done:
                break
            # move the smallest remaining entry of row/column t to the pivot
            cands = [(abs(m[i][t]), i, t) for i in range(t, nr) if m[i][t]]
            cands += [(abs(m[t][j]), t, j) for j in range(t, nc) if m[t][j]]
            _, i, j = min(cands)
            if i != t:
                m[t], m[i] = m[i], m[t]
            if j != t:
                for row in m:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(m[t][t]))
        t += 1
    # enforce the divisibility chain
    from math import gcd

    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = gcd(a, b)
            diag[i], diag[j] = g, a * b // g
    return diag
