"""Unit and property tests for the finite root system layer."""

import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from affgrass.rootsys import (
    ConsistencyError,
    WeylElement,
    parse_coweight,
    root_system,
)


def coweights(rank, lo=-5, hi=5):
    return st.tuples(*[st.integers(lo, hi) for _ in range(rank)])


def test_positive_root_counts():
    expected = {"A1": 1, "A2": 3, "B2": 4, "C2": 4, "G2": 6, "A3": 6,
                "B3": 9, "C3": 9, "D4": 12, "F4": 24, "E6": 36}
    for name, count in expected.items():
        assert len(root_system(name).positive_roots) == count


def test_cartan_matrices():
    assert root_system("B2").cartan == ((2, -1), (-2, 2))
    assert root_system("C2").cartan == ((2, -2), (-1, 2))
    assert root_system("G2").cartan == ((2, -3), (-1, 2))
    assert root_system("A2").cartan == ((2, -1), (-1, 2))
    assert root_system("F4").cartan == (
        (2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2))


def test_cartan_sign_pattern():
    for name in ["A1", "A2", "B2", "G2", "C3", "D4", "F4", "E6"]:
        c = root_system(name).cartan
        for i, row in enumerate(c):
            for j, v in enumerate(row):
                if i == j:
                    assert v == 2
                else:
                    assert v <= 0


def test_highest_root_and_kac_labels():
    assert root_system("A2").highest_root.vec == (1, 1)
    assert root_system("B2").highest_root.vec == (1, 2)
    assert root_system("G2").highest_root.vec == (3, 2)
    assert root_system("C3").highest_root.vec == (2, 2, 1)
    assert root_system("A2").kac_labels == (1, 1, 1)
    assert root_system("B2").kac_labels == (1, 1, 2)
    assert root_system("G2").kac_labels == (1, 3, 2)
    assert root_system("F4").kac_labels == (1, 2, 3, 4, 2)
    assert root_system("E6").kac_labels == (1, 1, 2, 2, 3, 2, 1)
    assert root_system("D4").kac_labels == (1, 1, 2, 1, 1)


def test_highest_root_is_long():
    for name in ["B2", "C3", "G2", "F4"]:
        rs = root_system(name)
        assert rs.root_length_index(rs.highest_root.vec) == 1
        # normalization check: the highest coroot has squared norm 2
        tc = rs.coroot_coweight(rs.highest_root.vec)
        assert rs.bilinear(tc, tc) == 2


def test_symmetrizer():
    assert root_system("A2").root_lengths == (1, 1)
    assert root_system("B2").root_lengths == (1, 2)
    assert root_system("C3").root_lengths == (2, 2, 1)
    assert root_system("G2").root_lengths == (3, 1)
    assert root_system("F4").root_lengths == (1, 1, 2, 2)


def test_simple_coroot_rows():
    # the j-th simple coroot as a coweight is the j-th row of the Cartan matrix
    for name in ["A2", "B2", "G2", "C3"]:
        rs = root_system(name)
        for j in range(rs.rank):
            vec = tuple(1 if k == j else 0 for k in range(rs.rank))
            assert rs.coroot_coweight(vec) == rs.cartan[j]


def test_pair_examples():
    rs = root_system("A2")
    assert rs.pair((2, -1), (1, 0)) == 2
    assert rs.pair((2, -1), (1, 1)) == 1
    b2 = root_system("B2")
    # alpha short, beta long; lambda with the pairings (0, -1)
    lam = (-1, 0)  # <lam, alpha_1> = -1 = <lam, beta>, <lam, alpha_2> = 0
    assert b2.pair(lam, (1, 1)) == -1


def test_reflect_examples():
    rs = root_system("A2")
    assert rs.reflect((2, -1), (1, 0)) == (-2, 1)
    assert rs.reflect((-6, 3), (0, 1)) == (-3, -3)
    # reflecting -3*alpha_1 in the highest root of A2
    assert rs.reflect((-6, 3), (1, 1)) == (-3, 6)


def test_dominant_translate_example():
    rs = root_system("A2")
    lam_plus, w = rs.dominant_translate((-6, 3))
    assert lam_plus == (3, 3)
    assert rs.reduced_word(w) == (1, 2)
    assert w.act(lam_plus) == (-6, 3)
    assert rs.length(w) == 2


def test_dominant_translate_is_minimal():
    rs = root_system("B2")
    for a in range(-3, 3):
        for b in range(-3, 3):
            lam = (a, b)
            lam_plus, w = rs.dominant_translate(lam)
            assert rs.is_dominant(lam_plus)
            assert w.act(lam_plus) == lam
            best = min(
                (rs.length(u) for u in rs.weyl_elements() if u.act(lam_plus) == lam),
            )
            assert rs.length(w) == best


def test_rho_pair():
    rs = root_system("A2")
    assert rs.rho_pair((3, 3)) == 12
    assert rs.rho_pair((1, 1)) == 4
    b2 = root_system("B2")
    assert b2.rho_pair((1, 1)) == sum(b2.pair((1, 1), r.vec) for r in b2.positive_roots)


def test_weyl_group_orders():
    orders = {"A1": 2, "A2": 6, "B2": 8, "G2": 12, "A3": 24, "B3": 48, "D4": 192}
    for name, order in orders.items():
        assert len(root_system(name).weyl_elements()) == order


def test_longest_element_lengths():
    lengths = {"A2": 3, "B2": 4, "G2": 6, "C3": 9, "D4": 12}
    for name, l in lengths.items():
        rs = root_system(name)
        w0 = rs.longest_element()
        assert rs.length(w0) == l
        assert (w0 * w0).is_identity()
    rs = root_system("A2")
    assert rs.longest_element([1]) == rs.simple_reflection(1)


def test_weyl_orbit_sizes():
    rs = root_system("A2")
    assert len(rs.weyl_orbit((1, 0))) == 3
    assert len(rs.weyl_orbit((1, 1))) == 6
    assert len(rs.weyl_orbit((0, 0))) == 1


def test_coroot_coords_and_lattice():
    rs = root_system("A2")
    assert rs.coroot_coords((2, -1)) == (Fraction(1), Fraction(0))
    assert rs.in_coroot_lattice((2, -1))
    assert not rs.in_coroot_lattice((1, 0))
    assert rs.in_coroot_lattice((1, 1))


def test_positive_sum_in_chamber():
    rs = root_system("A2")
    e = rs.identity()
    w0 = rs.longest_element()
    assert rs.positive_sum_in_chamber((1, 1), e)
    assert not rs.positive_sum_in_chamber((-2, 1), e)
    assert rs.positive_sum_in_chamber((-1, -1), w0)
    assert not rs.positive_sum_in_chamber((1, 0), e)


def test_bilinear_values():
    a1 = root_system("A1")
    assert a1.bilinear((2,), (2,)) == 2
    assert a1.bilinear((-4,), (-4,)) == 8
    b2 = root_system("B2")
    short = b2.coroot_coweight((0, 1))
    assert b2.bilinear(short, short) == 4


def test_parse_errors():
    for bad in ["H3", "A0", "D3", "E9", "bogus", "B1", "F5"]:
        with pytest.raises(ValueError):
            root_system(bad)
    with pytest.raises(ValueError):
        parse_coweight("1,bogus", 2)
    with pytest.raises(ValueError):
        parse_coweight("1,2,3", 2)
    assert parse_coweight("-6,3", 2) == (-6, 3)


@given(coweights(2))
def test_reflect_involution(lam):
    rs = root_system("B2")
    for r in rs.positive_roots:
        assert rs.reflect(rs.reflect(lam, r.vec), r.vec) == lam


@given(st.lists(st.integers(1, 2), max_size=8))
def test_length_vs_word(word):
    rs = root_system("G2")
    w = rs.element_from_word(word)
    red = rs.reduced_word(w)
    assert rs.element_from_word(red) == w
    assert rs.length(w) == len(red)
    assert rs.length(w) <= len(word)


@given(st.lists(st.integers(1, 3), max_size=10))
def test_word_roundtrip_rank3(word):
    rs = root_system("C3")
    w = rs.element_from_word(word)
    assert rs.element_from_word(rs.reduced_word(w)) == w


@given(st.lists(st.integers(1, 2), max_size=6))
def test_coroot_equivariance(word):
    # w(coroot of beta) is the coroot of w(beta)
    rs = root_system("B2")
    w = rs.element_from_word(word)
    for r in rs.positive_roots:
        img = w.act_root(r.vec)
        assert rs.coroot_coweight(img) == w.act(rs.coroot_coweight(r.vec))


@given(coweights(2, -6, 6))
def test_dominant_translate_properties(lam):
    rs = root_system("G2")
    lam_plus, w = rs.dominant_translate(lam)
    assert rs.is_dominant(lam_plus)
    assert w.act(lam_plus) == lam
    # the length matches the number of positive roots paired negatively
    neg = sum(1 for r in rs.positive_roots if rs.pair(lam, r.vec) < 0)
    assert rs.length(w) == neg
