import itertools
import math

import pytest
from hypothesis import given, strategies as st

from csp_lab.qpoly import Q, IntPolynomial, q_binomial, q_factorial, reduce_cyclic
from csp_lab.symfunc import (
    CycleTypeFunction,
    NonIntegralExpansion,
    Partition,
    SymFunc,
    class_size,
    cycle_values_to_schur,
    dim_partition,
    fake_degree,
    fake_degree_maj,
    fake_degree_module,
    matchings_schur_sum,
    mn_character,
    partitions,
    q_derangement,
    q_rencontre,
    rencontre_series,
    standard_tableaux,
    tableau_maj,
    z,
)

ZERO = IntPolynomial(())


def perm_maj(w):
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def maj_sum(n, fixed):
    """sum of q^maj over permutations of 1..n with the given number of fixed points."""
    out = [0] * (n * (n - 1) // 2 + 1)
    for w in itertools.permutations(range(1, n + 1)):
        if sum(w[i] == i + 1 for i in range(n)) == fixed:
            out[perm_maj(w)] += 1
    return IntPolynomial(out)


def S(d):
    return {Partition(k): v for k, v in d.items()}


partition_st = st.integers(0, 9).flatmap(lambda n: st.sampled_from(list(partitions(n))))


def test_partition_basics():
    lam = Partition([3, 1])
    assert lam.size == 4
    assert lam.conjugate() == (2, 1, 1)
    assert sorted(lam.hooks()) == [1, 1, 2, 4]
    assert lam.b() == 1
    with pytest.raises(ValueError):
        Partition([1, 2])
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert len(list(partitions(8))) == 22


@given(partition_st)
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam


@given(partition_st)
def test_dim_counts_tableaux(lam):
    assert dim_partition(lam) == sum(1 for _ in standard_tableaux(lam))


def test_fake_degree_examples():
    assert fake_degree([2, 2]) == Q**2 + Q**4
    assert fake_degree([3]) == IntPolynomial([1])
    assert fake_degree([1, 1, 1]) == Q**3
    assert tableau_maj(((1, 2), (3, 4))) == 2
    assert tableau_maj(((1,), (2,), (3,), (4,))) == 6


@pytest.mark.parametrize("n", range(11))
def test_hook_formula_equals_maj(n):
    for lam in partitions(n):
        assert fake_degree(lam) == fake_degree_maj(lam)


@pytest.mark.parametrize("r", range(9))
def test_dimension_weighted_sum_is_q_factorial(r):
    total = sum((fake_degree(lam) * dim_partition(lam) for lam in partitions(r)), ZERO)
    assert total == q_factorial(r)


@pytest.mark.parametrize("n", range(1, 8))
def test_character_orthogonality(n):
    parts = list(partitions(n))
    for lam in parts:
        for nu in parts:
            s = sum(mn_character(lam, mu) * mn_character(nu, mu) * class_size(mu) for mu in parts)
            assert s == (math.factorial(n) if lam == nu else 0)


@pytest.mark.parametrize("n", range(2, 8))
def test_known_characters(n):
    for mu in partitions(n):
        sign = (-1) ** (n - len(mu))
        assert mn_character((n,), mu) == 1
        assert mn_character((1,) * n, mu) == sign
        assert mn_character((n - 1, 1), mu) == mu.count(1) - 1
    assert mn_character(Partition([n - 1, 1]), (1,) * n) == n - 1


def test_mn_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2, 1), (2,))


def test_z_and_class_sizes():
    assert z(Partition([2, 1, 1])) == 4
    for n in range(1, 8):
        assert sum(class_size(mu) for mu in partitions(n)) == math.factorial(n)


def test_schur_roundtrip_via_cycle_values():
    f = SymFunc.schur(S({(4, 2): 1, (2, 2, 2): 3, (6,): 1}))
    assert cycle_values_to_schur(f.cycle_values()) == f


def test_non_integral_expansion():
    vals = {mu: (1 if mu == (1, 1) else 0) for mu in partitions(2)}
    with pytest.raises(NonIntegralExpansion):
        cycle_values_to_schur(CycleTypeFunction(2, vals))


def test_h_schur_conversion():
    h22 = SymFunc.h(S({(2, 2): 1}))
    assert h22.to_schur().terms == S({(4,): 1, (3, 1): 1, (2, 2): 1})
    assert h22.to_schur().to_homogeneous() == h22
    h2 = SymFunc.h(S({(2,): 1}))
    assert h2 * h2 == h22
    assert (h2 * h2).dimension() == 6


def test_symfunc_json_and_str():
    f = SymFunc.schur(S({(4,): 4, (3, 1): 1}))
    assert SymFunc.from_json(f.to_json()) == f
    assert str(f) == "4s[4] + s[3,1]"


def test_fake_degree_module_examples():
    assert fake_degree_module(S({(2, 2): 1})) == Q**2 + Q**4
    # the n = 4 row of the sl(n) adjoint table at r = 4
    stable = fake_degree_module(S({(4,): 2, (2, 2): 2, (2, 1, 1): 1}))
    assert stable == IntPolynomial([2, 0, 2, 1, 3, 1])
    assert reduce_cyclic(stable, 4) == IntPolynomial([5, 1, 2, 1])
    # the sl3 row
    sl3 = fake_degree_module(S({(4,): 1, (2, 2): 2, (2, 1, 1): 1}))
    assert sl3 == IntPolynomial([1, 0, 2, 1, 3, 1])
    assert reduce_cyclic(sl3, 4) == IntPolynomial([4, 1, 2, 1])
    g2 = fake_degree_module(S({(4,): 1, (2, 2): 1, (1, 1, 1, 1): 1}), False)
    assert g2 == IntPolynomial([1, 0, 1, 0, 1, 0, 1])
    assert fake_degree_module(S({(2, 1): 1}), True) == fake_degree([2, 1])


def test_matchings_schur_sum():
    assert matchings_schur_sum(1).terms == S({(2,): 1})
    assert matchings_schur_sum(2).terms == S({(4,): 1, (2, 2): 1})
    assert matchings_schur_sum(3).terms == S({(6,): 1, (4, 2): 1, (2, 2, 2): 1})
    for r in range(1, 6):
        assert matchings_schur_sum(r).dimension() == math.prod(range(2 * r - 1, 0, -2))


def test_rencontre_series_table():
    F = rencontre_series(6)
    assert F[1, 0].terms == {}
    assert F[2, 0].terms == S({(2,): 1})
    assert F[4, 0].to_homogeneous().terms == S({(4,): 3, (2, 2): 1})
    assert F[4, 0].to_schur().terms == S({(4,): 4, (3, 1): 1, (2, 2): 1})
    for n in range(7):
        assert sum(F[n, k].dimension() for k in range(n + 1)) == math.factorial(n)
        for k in range(n + 1):
            assert F[n, k].dimension() == math.comb(n, k) * F[n - k, 0].dimension()


def test_q_derangement_small():
    assert q_derangement(0) == IntPolynomial([1])
    assert q_derangement(1) == ZERO
    assert q_derangement(4)(1) == 9


@pytest.mark.parametrize("n", range(7))
def test_q_rencontre_matches_maj_enumeration(n):
    for k in range(n + 1):
        assert q_rencontre(n, k) == maj_sum(n, k)
    assert q_rencontre(n, n) == IntPolynomial([1])
    if n:
        assert q_rencontre(n, n - 1) == ZERO


def test_q_rencontre_relation():
    assert q_rencontre(4, 2) == q_binomial(4, 2) * q_derangement(2)
    with pytest.raises(ValueError):
        q_rencontre(3, 4)
