from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mckay_lab import group_from_generators, parse_group_spec
from mckay_lab.errors import EmptyGenerators, NotInLattice, NotInSL3
from mckay_lab.groups import mono_str


def test_order_from_picture_group():
    assert parse_group_spec("13:1,5,7").order == 13


def test_trivial_group():
    g = group_from_generators([(1, (0, 0, 0))])
    assert g.order == 1
    assert g.weight_basis == tuple(
        tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3)
    )
    assert g.invariant_basis == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_product_group_order():
    g = group_from_generators([(2, (1, 1, 0)), (2, (0, 1, 1))])
    assert g.order == 4
    # non-cyclic: every nontrivial character has order 2
    assert all(
        g.character_order(c) == 2 for c in g.characters if not c.is_trivial
    )


def test_rejects_non_sl3():
    with pytest.raises(NotInSL3):
        group_from_generators([(5, (1, 1, 2))])


def test_rejects_empty():
    with pytest.raises(EmptyGenerators):
        group_from_generators([])


def test_redundant_generators_are_idempotent():
    g1 = group_from_generators([(3, (1, 1, 1))])
    g2 = group_from_generators([(3, (1, 1, 1)), (3, (2, 2, 2))])
    assert g1.order == g2.order == 3
    assert g1.weight_basis == g2.weight_basis
    assert g1.invariant_basis == g2.invariant_basis


def test_kappa_examples():
    g3 = parse_group_spec("3:1,1,1")
    assert g3.kappa((1, 0, 0)).residues == (1,)
    assert g3.kappa((1, 1, 1)).is_trivial
    g2 = parse_group_spec("2:1,1,0")
    assert g2.kappa((0, 0, 1)).is_trivial  # z is invariant


def test_age_examples():
    g = parse_group_spec("13:1,5,7")
    assert g.age((Fraction(1, 13), Fraction(5, 13), Fraction(7, 13))) == 1
    assert g.age((0, 0, 0)) == 0
    assert g.age((Fraction(5, 13), Fraction(12, 13), Fraction(9, 13))) == 2
    with pytest.raises(NotInLattice):
        g.age((Fraction(1, 2), Fraction(1, 2), 0))
    with pytest.raises(NotInLattice):
        g.age((Fraction(14, 13), 0, 0))


def test_character_group_structure():
    g = parse_group_spec("4:1,1,2")
    assert len(g.characters) == 4
    chi1 = g.kappa((1, 0, 0))
    chi2 = g.kappa((0, 0, 1))
    assert chi1.residues == (1,) and chi2.residues == (2,)
    assert (chi1 * chi2).residues == (3,)
    assert chi1.inverse().residues == (3,)


def test_mono_str():
    assert mono_str((2, 1, 0)) == "x^2y"
    assert mono_str((0, 0, 0)) == "1"
    assert mono_str((0, 0, 3)) == "z^3"


def test_spec_string_roundtrip():
    for spec in ("3:1,1,1", "13:1,5,7", "2:1,1,0+2:0,1,1"):
        g = parse_group_spec(spec)
        assert parse_group_spec(g.spec_string()).order == g.order


# -- randomized properties ---------------------------------------------------

def sl3_cyclic():
    def build(draw_tuple):
        r, a, b = draw_tuple
        return (r, (a % r, b % r, (-a - b) % r))

    return st.tuples(
        st.integers(min_value=2, max_value=12),
        st.integers(min_value=0, max_value=11),
        st.integers(min_value=0, max_value=11),
    ).map(build)


@given(sl3_cyclic(), st.tuples(*[st.integers(0, 6)] * 3), st.tuples(*[st.integers(0, 6)] * 3))
def test_kappa_is_a_monoid_homomorphism(gen, m1, m2):
    g = group_from_generators([gen])
    prod = tuple(a + b for a, b in zip(m1, m2))
    assert g.kappa(prod) == g.kappa(m1) * g.kappa(m2)


@given(sl3_cyclic())
def test_kappa_box_surjectivity_and_power_triviality(gen):
    g = group_from_generators([gen])
    n = g.order
    hit = {
        g.kappa((i, j, k))
        for i in range(n)
        for j in range(n)
        for k in range(n)
        if min(i, j, k) == 0
    }
    assert len(hit) == n
    for unit in ((n, 0, 0), (0, n, 0), (0, 0, n)):
        assert g.kappa(unit).is_trivial


@given(sl3_cyclic())
def test_element_count_matches_order(gen):
    g = group_from_generators([gen])
    assert len(g.elements) == g.order
    ages = {g.age(el) for el in g.elements}
    assert ages <= {0, 1, 2}
