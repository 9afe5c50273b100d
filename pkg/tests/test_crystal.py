import itertools

import pytest
from hypothesis import given, settings, strategies as st

from csp_lab.crystal import (
    CrystalError,
    apply_e,
    apply_f,
    builtin,
    crystal_weights,
    enumerate_invariants,
    is_invariant,
    load_crystal,
    promote,
    promotion_action,
    promotion_orbits,
    string_data,
    words_to_json,
)
from csp_lab.diagrams import RectTableau, jdt_promote, tl_word_promote
from csp_lab.liechar import frobenius_invariants, irreducible_character, root_system

A2_TEXT = """\
# vector crystal of sl3
name a2vec
labels 2
vertices 3
edge 1 1 2
edge 2 2 3
"""

# (builtin, parameter, root system, highest weight)
CASES = [
    ("typeA_vector", 2, "A1", (1,)),
    ("typeA_vector", 3, "A2", (1, 0)),
    ("typeA_vector", 4, "A3", (1, 0, 0)),
    ("typeA_vector", 5, "A4", (1, 0, 0, 0)),
    ("sl2", 1, "A1", (1,)),
    ("sl2", 2, "A1", (2,)),
    ("sl2", 3, "A1", (3,)),
    ("g2_fund7", None, "G2", (1, 0)),
    ("b3_spin", None, "B3", (0, 0, 1)),
    ("so_vector", 7, "B3", (1, 0, 0)),
]


def brute_invariants(X, r):
    return [w for w in itertools.product(X.vertices, repeat=r) if is_invariant(X, w)]


def test_load_and_roundtrip():
    X = load_crystal(A2_TEXT)
    assert (X.name, X.rank, X.size) == ("a2vec", 2, 3)
    assert X.source == 1 and X.sink == 3
    assert X.lowering_path() == (1, 2)
    assert X.H[2] == (1, 0) and X.D[2] == (0, 1)
    assert X.weight(1) == (1, 0)
    assert load_crystal(X.to_text()).edges == X.edges


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("vertices 2\nedge 1 1 3\n", "out of range"),
        ("labels 1\nvertices 2\nedge 1 2 2\n", "label out of range"),
        ("vertices 3\nedge 1 1 2\nedge 1 1 3\n", "two outgoing"),
        ("vertices 3\nedge 1 1 3\nedge 2 1 3\n", "two incoming"),
        ("vertices 3\nedge 1 1 2\n", "disconnected"),
        ("vertices 2\nedge 1 1 1\n", "self loop"),
        ("vertices 2\nedge 1 1 x\n", "line 2"),
        ("bogus line\n", "line 1"),
        ("vertices 3\nedge 1 1 2\nedge 3 2 2\n", "source"),
        ("vertices 2\nedge 1 1 2\nedge 2 1 1\n", "cycle"),
    ],
)
def test_load_errors(text, fragment):
    with pytest.raises(CrystalError, match=fragment):
        load_crystal(text)


def test_builtin_errors():
    for name, param in [("typeA_vector", 7), ("sl2", 0), ("so_vector", 9), ("nope", None)]:
        with pytest.raises(ValueError):
            builtin(name, param)


@pytest.mark.parametrize("name,param,rs,lam", CASES)
def test_builtin_character_is_irreducible(name, param, rs, lam):
    X = builtin(name, param)
    R = root_system(rs)
    assert X.character(R) == irreducible_character(R, lam)
    assert X.weight(X.source) == lam


@pytest.mark.parametrize("name,param,rs,lam", CASES)
def test_invariant_counts_match_frobenius_dimension(name, param, rs, lam):
    X = builtin(name, param)
    R = root_system(rs)
    for r in range(7):
        if X.size**r > 3 * 10**5:
            break
        words = enumerate_invariants(X, r)
        assert len(words) == frobenius_invariants(R, lam, r).dimension()
        assert len(set(words)) == len(words)


@pytest.mark.parametrize("name,param", [("typeA_vector", 3), ("sl2", 2), ("g2_fund7", None), ("b3_spin", None)])
def test_enumeration_matches_brute_force(name, param):
    X = builtin(name, param)
    for r in range(5):
        assert sorted(enumerate_invariants(X, r)) == brute_invariants(X, r)


def test_known_counts():
    g2 = builtin("g2_fund7")
    assert [len(enumerate_invariants(g2, r)) for r in range(8)] == [1, 0, 1, 1, 4, 10, 35, 120]
    spin = builtin("b3_spin")
    assert [len(enumerate_invariants(spin, r)) for r in range(7)] == [1, 0, 1, 0, 4, 0, 30]


word_st = st.lists(st.integers(1, 7), min_size=0, max_size=8)


@settings(max_examples=200)
@given(word_st, st.integers(1, 2))
def test_e_and_f_are_partial_inverses(w, i):
    X = builtin("g2_fund7")
    w = tuple(w)
    up = apply_e(X, w, i)
    if up is not None:
        assert apply_f(X, up, i) == w
    down = apply_f(X, w, i)
    if down is not None:
        assert apply_e(X, down, i) == w


@settings(max_examples=200)
@given(word_st, st.integers(1, 2))
def test_string_lengths_count_operator_steps(w, i):
    X = builtin("g2_fund7")
    H, D = string_data(X, tuple(w))
    ups, cur = 0, tuple(w)
    while (cur := apply_e(X, cur, i)) is not None:
        ups += 1
    downs, cur = 0, tuple(w)
    while (cur := apply_f(X, cur, i)) is not None:
        downs += 1
    assert (ups, downs) == (H[i - 1], D[i - 1])


def test_worked_promotion_type_a():
    X = builtin("typeA_vector", 3)
    assert promote(X, (1, 2, 3)) == (1, 2, 3)
    assert promote(X, (1, 1, 2, 3, 2, 3)) == jdt_promote(RectTableau.from_word((1, 1, 2, 3, 2, 3))).word()


@pytest.mark.parametrize("n,k", [(2, 3), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_type_a_promotion_is_tableau_promotion(n, k):
    X = builtin("typeA_vector", n)
    for w in enumerate_invariants(X, n * k):
        assert promote(X, w) == jdt_promote(RectTableau.from_word(w)).word()


def test_sl2_promotion_is_word_promotion():
    X = builtin("sl2", 1)
    for r in range(0, 11, 2):
        for w in enumerate_invariants(X, r):
            assert X.format_word(promote(X, w)) == tl_word_promote(X.format_word(w))


@pytest.mark.parametrize("name,param,r", [("g2_fund7", None, 6), ("b3_spin", None, 6), ("sl2", 2, 6), ("so_vector", 7, 4)])
def test_promotion_has_order_r(name, param, r):
    X = builtin(name, param)
    act = promotion_action(X, r)
    assert act.power(r) == list(range(len(act)))
    for w in act.elements:
        assert is_invariant(X, promote(X, w))


def test_promotion_orbits():
    g2 = builtin("g2_fund7")
    assert promotion_orbits(g2, 2).counts == {1: 1}
    assert promotion_orbits(g2, 4).counts == {2: 2}
    assert promotion_orbits(g2, 5).counts == {5: 2}
    assert promotion_orbits(g2, 6).counts == {6: 3, 3: 4, 2: 2, 1: 1}
    assert promotion_orbits(builtin("b3_spin"), 4).counts == {2: 2}
    assert promotion_orbits(builtin("b3_spin"), 6).counts == {6: 3, 3: 3, 2: 1, 1: 1}


def test_promote_rejects_non_invariant():
    X = builtin("typeA_vector", 3)
    with pytest.raises(ValueError):
        promote(X, (1, 1, 2))
    assert promote(X, ()) == ()


def test_word_io():
    X = builtin("sl2", 1)
    assert X.parse_word("UUDD") == (1, 1, 2, 2)
    assert X.format_word((1, 2)) == "UD"
    with pytest.raises(ValueError):
        X.parse_word("UX")
    assert builtin("typeA_vector", 3).parse_word("1 2,3") == (1, 2, 3)
    assert words_to_json([(1, 2)]) == "[[1, 2]]"
    assert sum(crystal_weights(builtin("b3_spin")).values()) == 8
