import math

import pytest
from hypothesis import given, settings, strategies as st

from csp_lab.liechar import (
    NotWeylInvariant,
    RootSystemMismatch,
    UnsupportedRootSystem,
    adams,
    char_mul,
    decompose,
    frobenius_invariants,
    irreducible_character,
    root_system,
    trivial_character,
    trivial_multiplicity,
    trivial_multiplicity_of_product,
    two_rho_pairing,
)
from csp_lab.symfunc import Partition, fake_degree

WEYL = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "A5": 720, "B3": 48, "C2": 8, "C3": 48, "G2": 12}
POSITIVE = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "A5": 15, "B3": 9, "C2": 4, "C3": 9, "G2": 6}
ADJOINT_DIM = {"A1": 3, "A2": 8, "A3": 15, "A4": 24, "A5": 35, "B3": 21, "C2": 10, "C3": 21, "G2": 14}


@pytest.mark.parametrize("name", sorted(WEYL))
def test_weyl_group_and_roots(name):
    R = root_system(name)
    assert R.weyl_order() == WEYL[name]
    assert len(R.positive_roots) == POSITIVE[name]
    assert irreducible_character(R, R.highest_root).dimension() == ADJOINT_DIM[name]


def test_unsupported():
    for bad in ["E8", "A6", "A0", "D4", "x"]:
        with pytest.raises(UnsupportedRootSystem):
            root_system(bad)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(WEYL)), st.data())
def test_character_dimension_equals_weyl_formula(name, data):
    R = root_system(name)
    top = 2 if R.rank <= 2 else 1
    lam = tuple(data.draw(st.integers(0, top)) for _ in range(R.rank))
    if sum(lam) > 3:
        lam = lam[:3] + (0,) * (R.rank - 3)
    chi = irreducible_character(R, lam)
    assert chi.dimension() == R.weyl_dimension(lam)
    assert chi.is_weyl_invariant()
    assert chi[lam] == 1


def test_small_dimensions():
    assert irreducible_character(root_system("G2"), (1, 0)).dimension() == 7
    assert irreducible_character(root_system("B3"), (0, 0, 1)).dimension() == 8
    assert irreducible_character(root_system("B3"), (1, 0, 0)).dimension() == 7
    assert irreducible_character(root_system("C2"), (1, 0)).dimension() == 4
    assert irreducible_character(root_system("A3"), (0, 1, 0)).dimension() == 6


@pytest.mark.parametrize("a,b", [(a, b) for a in range(5) for b in range(5)])
def test_sl2_clebsch_gordan(a, b):
    R = root_system("A1")
    prod = irreducible_character(R, (a,)) * irreducible_character(R, (b,))
    expect = {(a + b - 2 * k,): 1 for k in range(min(a, b) + 1)}
    assert decompose(prod) == expect


def test_g2_square_of_seven():
    R = root_system("G2")
    V = irreducible_character(R, (1, 0))
    dec = decompose(V * V)
    dims = sorted(irreducible_character(R, w).dimension() * m for w, m in dec.items())
    assert dims == [1, 7, 14, 27]
    assert trivial_multiplicity(V * V) == 1
    assert trivial_multiplicity(V * V * V) == 1


def test_trivial_multiplicity_of_product_agrees():
    R = root_system("A2")
    V = irreducible_character(R, (1, 0))
    W = irreducible_character(R, (0, 1))
    factors = [V, W, V, W]
    full = V * W * V * W
    assert trivial_multiplicity_of_product(factors) == trivial_multiplicity(full) == 2
    assert trivial_multiplicity_of_product([V, V, V]) == 1


def test_adams_sl2():
    R = root_system("A1")
    V = irreducible_character(R, (1,))
    assert adams(V, 2) == irreducible_character(R, (2,)) - trivial_character(R)
    assert adams(V, 1) == V
    with pytest.raises(ValueError):
        adams(V, 0)


def test_errors():
    A, G = root_system("A1"), root_system("G2")
    with pytest.raises(RootSystemMismatch):
        char_mul(trivial_character(A), trivial_character(G))
    lopsided = irreducible_character(A, (1,)) - irreducible_character(A, (1,)) + trivial_character(A)
    assert trivial_multiplicity(lopsided) == 1
    from csp_lab.liechar import Character

    with pytest.raises(NotWeylInvariant):
        trivial_multiplicity(Character(A, {(1,): 1}))
    with pytest.raises(NotWeylInvariant):
        decompose(Character(A, {(1,): 1}))
    with pytest.raises(ValueError):
        frobenius_invariants(A, (1,), 9)


@pytest.mark.parametrize("n", range(2, 7))
def test_two_rho_pairing_vector_rep(n):
    R = root_system(f"A{n - 1}")
    assert two_rho_pairing(R, R.fundamental_weight(1)) == n - 1
    # the adjoint pairing is 2(h - 1), always even
    assert two_rho_pairing(R, R.highest_root) == 2 * (n - 1)


@pytest.mark.parametrize("r", range(0, 9))
def test_sl2_invariants_are_two_row_rectangle(r):
    R = root_system("A1")
    inv = frobenius_invariants(R, (1,), r)
    if r % 2:
        assert inv.schur.terms == {}
    else:
        assert inv.schur.terms == {Partition([r // 2] * 2 if r else []): 1}
        assert inv.dimension() == math.comb(r, r // 2) // (r // 2 + 1)
    assert inv.twisted


def test_frobenius_twist_selects_conjugate():
    inv = frobenius_invariants(root_system("A1"), (1,), 6)
    assert inv.twisted
    assert inv.fake_degree() == fake_degree((2, 2, 2))
    assert inv.fake_degree() != fake_degree((3, 3))
    g2 = frobenius_invariants(root_system("G2"), (1, 0), 4)
    assert not g2.twisted
    assert g2.fake_degree() == g2.schur.fake_degree()


@pytest.mark.parametrize("name", ["A1", "A2", "C2", "G2"])
def test_frobenius_values_are_trivial_multiplicities(name):
    R = root_system(name)
    lam = R.fundamental_weight(1)
    V = irreducible_character(R, lam)
    for r in range(1, 5):
        inv = frobenius_invariants(R, lam, r)
        assert inv.dimension() == trivial_multiplicity_of_product([V] * r)
        assert inv.schur.dimension() == inv.dimension()


def test_frobenius_json():
    import json

    d = json.loads(frobenius_invariants(root_system("G2"), (1, 0), 3).to_json())
    assert d["degree"] == 3 and d["parity"] == 0
    assert d["schur"] == [{"partition": [1, 1, 1], "coeff": 1}]
