from fractions import Fraction

import pytest

from tighttri.errors import ValidationError
from tighttri.feasibility import (
    check_parameters,
    min_beta1,
    cor514_topology_list,
    enumerate_table1,
    enumerate_table2,
    enumerate_table3,
    feasible_beta1,
    spreer_min_beta,
    lower_bound_ratio,
)


def brute_feasible(n):
    """Every b_1 (with k >= 1) meeting the constraints, by scanning b_1 directly."""
    q = (n - 4) * (n - 5)
    t = (n - 4) // 9
    out = []
    for b in range(q // 20 + 1):
        num = 429 * (q - 20 * b)
        if num % 776:
            continue
        k = num // 776
        if 1 <= k <= n * t and (n - 4) * (617 * n - 3861) <= 15444 * b:
            out.append(b)
    return out


@pytest.mark.parametrize("n", list(range(5, 140)) + [500, 825, 1408])
def test_feasible_beta1_matches_scan(n):
    assert feasible_beta1(n) == brute_feasible(n)


def test_table2_rows_are_minimal_feasible():
    for row in enumerate_table2(200):
        assert row.beta1 == min(brute_feasible(row.n))
        assert check_parameters(row.n, row.beta1).feasible
    assert enumerate_table2(71) == []


def test_table2_verbose_superset():
    assert enumerate_table2(133, verbose=True) == enumerate_table2(133)
    short = enumerate_table2(600)
    full = enumerate_table2(600, verbose=True)
    assert set(short) <= set(full) and len(full) > len(short)


def test_table3_rows_attain_equality():
    rows = enumerate_table3(3276)
    assert [r.n for r in rows][:3] == [825, 1296, 1408]
    for r in rows:
        rep = check_parameters(r.n, r.beta1)
        assert rep.upper_bound_b_equality and rep.congruence_776
        assert rep.k == r.n * ((r.n - 4) // 9)
    assert enumerate_table3(824) == []


def test_table1_rows_attain_equality():
    for r in enumerate_table1(20000):
        assert r.n % 9 == 4
        rep = check_parameters(r.n, r.beta1)
        assert rep.upper_bound_b_equality and rep.icosian_equality
        assert rep.feasible


def test_table1_periodicity():
    rows = enumerate_table1(15448 + 15444)
    ns = {r.n for r in rows}
    for r in rows:
        if r.n <= 15448:
            assert r.n + 15444 in ns


def test_check_parameters_examples():
    rep = check_parameters(72, 189)
    assert rep.k == 429 and rep.feasible
    rep = check_parameters(9, 1)
    # the stacked case: k = 0 is in range, so every necessary condition holds
    assert rep.k == 0 and rep.lower_bound_stacked_equality and rep.feasible
    assert feasible_beta1(9) == [] and feasible_beta1(9, require_k_positive=False) == [1]
    assert not check_parameters(10, 1).congruence_776
    with pytest.raises(ValidationError):
        check_parameters(4, 0)
    with pytest.raises(ValidationError):
        check_parameters(10, -1)


def test_topology_list():
    entries = cor514_topology_list(188)
    assert [(e.k, e.n) for e in entries][:3] == [(0, 5), (1, 9), (12, 20)]
    for e in entries:
        assert (e.n - 4) * (e.n - 5) == 20 * e.k
    assert entries[0].labels == ("S^3",)
    with pytest.raises(ValidationError):
        cor514_topology_list(-1)


def test_beta1_lower_bound():
    assert spreer_min_beta(9, 1) == 1
    assert spreer_min_beta(72, 1) == 143
    assert lower_bound_ratio(9, 1) == Fraction(9, 14)
    assert lower_bound_ratio(10, 1) == Fraction(1)
    with pytest.raises(ValidationError):
        spreer_min_beta(5, 1)


def test_min_beta1_bound():
    assert min_beta1(72) == 179
    assert min_beta1(5) == 0
    for n in range(5, 300):
        b = min_beta1(n)
        assert (n - 4) * (617 * n - 3861) <= 15444 * b
        if b > 0:
            assert (n - 4) * (617 * n - 3861) > 15444 * (b - 1)
