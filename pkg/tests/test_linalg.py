import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form

from conftest import oracle_rank
from tighttri import kernels
from tighttri.linalg import is_prime, nullspace, rank, rank_gf2_bits, rank_mod_p, smith_invariants

PRIMES = [2, 3, 5, 7, 101]


def random_matrix(rng, nr, nc, lo=-3, hi=3, density=0.5):
    return [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(nc)] for _ in range(nr)]


@pytest.mark.parametrize("p", [0] + PRIMES)
def test_rank_matches_sympy_on_random_20x20(p):
    rng = random.Random(1000 + p)
    for _ in range(40):
        m = random_matrix(rng, 20, 20, density=rng.choice([0.1, 0.3, 0.7]))
        assert rank(m, p) == oracle_rank(m, p)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.sampled_from(PRIMES), st.randoms(use_true_random=False))
def test_rank_mod_p_property(nr, nc, p, rng):
    m = random_matrix(rng, nr, nc)
    assert rank_mod_p(m, p) == oracle_rank(m, p)


def test_compiled_rank_agrees():
    rng = random.Random(7)
    for p in PRIMES:
        for _ in range(20):
            m = random_matrix(rng, 15, 18)
            assert kernels.rank_mod_p(m, p) == oracle_rank(m, p)
            assert kernels.rank_mod_p(m, p, backend="python") == oracle_rank(m, p)


def test_gf2_bit_rank():
    assert rank_gf2_bits([0b011, 0b110, 0b101]) == 2
    assert rank_gf2_bits([]) == 0


def test_is_prime():
    assert [q for q in range(20) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("p", [0, 2, 3, 7])
def test_nullspace_is_kernel(p):
    rng = random.Random(p)
    for _ in range(20):
        m = random_matrix(rng, 6, 9)
        basis = nullspace(m, 9, p)
        assert len(basis) == 9 - oracle_rank(m, p)
        for v in basis:
            for row in m:
                s = sum(Fraction(a) * b for a, b in zip(row, v))
                assert (s == 0) if p == 0 else (s % p == 0)


def test_smith_matches_sympy():
    rng = random.Random(3)
    for _ in range(30):
        m = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        snf = smith_normal_form(Matrix(m))
        diag = [abs(snf[i, i]) for i in range(min(snf.shape)) if snf[i, i] != 0]
        assert smith_invariants(m) == diag


def test_smith_divisibility_chain():
    assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]
    assert smith_invariants([[0, 0], [0, 0]]) == []
    inv = smith_invariants([[4, 6, 2], [8, 2, 6], [2, 4, 0]])
    assert all(b % a == 0 for a, b in zip(inv, inv[1:]))
