from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from ckcohomology.algebra import OmegaSequence, StructureTable, abelian_table, all_pairs, structure_table
from ckcohomology.oracle import (
    NotALieAlgebra,
    OneCochain,
    TwoCochain,
    coboundary,
    coboundary_preimage,
    cocycle_space,
    cohomology,
    equation_census,
    expected_census,
    h2_dimension,
    h2_representatives,
    is_coboundary,
    is_cocycle,
)
from strategies import nonzero_rationals, sequences

small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


# Frozen by hand: so(3) is simple, and the 1+1 Galilei and flag values follow from
# writing out their brackets.
@pytest.mark.parametrize(
    "omegas, z2, b2, h2",
    [
        ((1, 1), 3, 3, 0),
        ((0, 0), 3, 1, 2),
        ((1, 1, 1), 6, 6, 0),
        ((0, 0, 0), 8, 3, 5),
    ],
)
def test_frozen_small_cases(omegas, z2, b2, h2):
    report = cohomology(structure_table(OmegaSequence.of(*omegas)))
    assert (report.z2, report.b2, report.h2) == (z2, b2, h2)


def test_galilei_1_1_by_hand():
    # [P01, P02] = 0, [P01, P12] = -P02, [P02, P12] = 0: Z^2 is all of the 3-dim space,
    # B^2 is spanned by delta(mu_02), which only hits the (P01, P12) slot.
    seq = OmegaSequence.of(0, 0)
    p01, p02, p12 = all_pairs(2)
    alpha = TwoCochain(tuple(all_pairs(2)), {(p01, p12): 5})
    assert is_coboundary(structure_table(seq), alpha)
    assert not is_coboundary(structure_table(seq), TwoCochain(alpha.generators, {(p01, p02): 1}))


def test_heisenberg_and_two_dimensional_algebras():
    heis = StructureTable(("x", "y", "z"), {("x", "y"): {"z": 1}})
    assert h2_dimension(heis) == 2
    aff = StructureTable(("x", "y"), {("x", "y"): {"y": 1}})
    assert h2_dimension(aff) == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_abelian_algebra(n):
    assert h2_dimension(abelian_table(range(n))) == comb(n, 2)


def test_flag_dimension_n5():
    assert h2_dimension(structure_table(OmegaSequence.of(0, 0, 0, 0, 0))) == 14


def test_non_lie_table_is_rejected():
    bad = StructureTable(("x", "y", "z"), {("x", "y"): {"x": 1}, ("y", "z"): {"y": 1}, ("x", "z"): {"z": 1}})
    with pytest.raises(NotALieAlgebra):
        cocycle_space(bad)


def test_two_cochain_is_antisymmetric():
    a = TwoCochain(("x", "y", "z"), {("y", "x"): 2, ("x", "z"): 0})
    assert a("x", "y") == -2
    assert a("y", "x") == 2
    assert a("x", "x") == 0
    assert a.values == {("x", "y"): Fraction(-2)}
    with pytest.raises(ValueError):
        TwoCochain(("x",), {("x", "x"): 1})
    with pytest.raises(ValueError):
        a + TwoCochain(("x", "y"), {})


@given(st.lists(small, min_size=6, max_size=6))
def test_vector_round_trip(vec):
    gens = ("a", "b", "c", "d")
    a = TwoCochain.from_vector(gens, vec)
    assert a.to_vector() == vec
    assert (a - a).is_zero()
    assert a.scale(2) == a + a


@given(sequences(2, 4), st.data())
def test_coboundaries_are_cocycles_with_preimages(seq, data):
    table = structure_table(seq)
    mu = OneCochain({g: data.draw(small) for g in table.generators})
    beta = coboundary(table, mu)
    assert is_cocycle(table, beta)
    pre = coboundary_preimage(table, beta)
    assert pre is not None
    assert coboundary(table, pre) == beta


@given(sequences(2, 3))
def test_representatives_complete_the_basis(seq):
    table = structure_table(seq)
    reps = h2_representatives(table)
    assert len(reps) == h2_dimension(table)
    for r in reps:
        assert is_cocycle(table, r)
        assert not is_coboundary(table, r)


@given(st.lists(nonzero_rationals, min_size=2, max_size=4))
def test_whitehead_for_nonzero_sequences(omegas):
    assert h2_dimension(structure_table(OmegaSequence(tuple(omegas)))) == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_equation_census(n):
    table = structure_table(OmegaSequence((Fraction(1),) * n))
    census = equation_census(table)
    assert dict(census) == expected_census(n)
    assert sum(census.values()) == comb(comb(n + 1, 2), 3)


def test_census_needs_omega_generators():
    with pytest.raises(TypeError):
        equation_census(abelian_table("xyz"))
