from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ckcohomology.algebra import OmegaSequence, check_jacobi, pair, structure_table
from ckcohomology.classify import (
    ConstraintError,
    ExtensionAssignment,
    Kind,
    alpha_f,
    alpha_l,
    beta,
    classify_nontrivial,
    derive_full_cochain,
    enumerate_basic,
    tau,
)
from ckcohomology.extensions import (
    XI,
    commutator_table,
    extend,
    generic_extension,
    group_compactness_filter,
    trivialize,
)
from ckcohomology.oracle import coboundary
from helpers import random_valid_assignment
from strategies import sequences, standard_sequences

W = OmegaSequence.of


@given(sequences(2, 5), st.randoms(use_true_random=False))
def test_extension_is_a_lie_algebra(seq, rng):
    ext = extend(seq, random_valid_assignment(seq, rng))
    assert check_jacobi(ext.table) == []
    assert ext.table.generators[-1] is XI
    assert ext.table.dim_n == seq.n * (seq.n + 1) // 2 + 1
    for g in ext.table.generators:
        assert ext.table.bracket(XI, g) == {}
    assert ext.table.without([XI]) == structure_table(seq)


def test_extension_rejects_violations_unless_forced():
    seq, bad = W(1, 1, 1), ExtensionAssignment({beta(1, 3): 1})
    with pytest.raises(ConstraintError):
        extend(seq, bad)
    assert check_jacobi(extend(seq, bad, force=True).table)


@given(sequences(3, 4), st.data())
def test_forced_type_ii_violations_break_jacobi(seq, data):
    p = data.draw(st.integers(1, seq.n - 2))
    if seq[p + 2] == 0:
        return
    # alpha^F alone violates w_{p+2} alpha^F = w_p alpha^L
    ext = extend(seq, ExtensionAssignment({alpha_f(p): 1}), force=True)
    assert check_jacobi(ext.table)


def test_zero_assignment_is_a_direct_sum():
    ext = extend(W(1, 0, -1), ExtensionAssignment())
    assert ext.cochain.is_zero()
    assert all(XI not in comb for _, comb in ext.table.nonzero())


def test_so3_reduces_completely():
    seq = W(1, 1)
    assign = ExtensionAssignment({alpha_l(0): 3, alpha_f(1): Fraction(-1, 2), tau(0, 2): 2})
    result = trivialize(seq, assign)
    assert result.reduced.values == {}
    assert result.shifts[pair(0, 1)] == 3
    assert result.shifts[pair(1, 2)] == Fraction(-1, 2)
    assert result.shifts[pair(0, 2)] == -2


def test_flag_keeps_type_ii_and_iii():
    seq = W(0, 0, 0)
    assign = ExtensionAssignment.unit(enumerate_basic(3, include_tau=False))
    result = trivialize(seq, assign)
    assert result.reduced == assign
    assert result.shifts.is_zero()


def test_single_shift_absorbs_both_pair_members():
    w1, w2, w3, c = Fraction(2), Fraction(-1), Fraction(3, 5), Fraction(7)
    seq = W(w1, w2, w3)
    assign = ExtensionAssignment({alpha_f(1): c, alpha_l(1): w3 * c / w1})
    result = trivialize(seq, assign)
    assert result.reduced.values == {}
    assert result.shifts.values == {pair(1, 2): c / w1}


def test_trivialize_requires_valid_input():
    with pytest.raises(ConstraintError):
        trivialize(W(1, 1, 1), ExtensionAssignment({alpha_f(1): 1}))


@given(sequences(2, 5), st.randoms(use_true_random=False))
def test_reduction_is_cohomologous_and_idempotent(seq, rng):
    assign = random_valid_assignment(seq, rng)
    result = trivialize(seq, assign)
    difference = derive_full_cochain(seq, assign) - derive_full_cochain(seq, result.reduced)
    assert difference == coboundary(structure_table(seq), result.shifts)
    again = trivialize(seq, result.reduced)
    assert again.reduced == result.reduced
    assert again.shifts.is_zero()
    assert not any(c.kind is Kind.TAU for c in result.reduced.support())


@given(standard_sequences(2, 6))
def test_support_of_generic_reduction_is_the_classification(seq):
    # all-ones on every free coefficient: nonzero wherever the classification allows
    free = [c for c in enumerate_basic(seq.n) if c.kind is not Kind.BETA]
    free += classify_nontrivial(seq)
    values = {}
    for c in free:
        values[c] = Fraction(1)
    for p in range(1, seq.n - 1):
        wf, wl = seq[p], seq[p + 2]
        if wf:
            values[alpha_l(p)] = wl / wf
        elif wl:
            values[alpha_f(p)] = 0
    result = trivialize(seq, ExtensionAssignment(values))
    assert set(result.reduced.support()) == set(classify_nontrivial(seq))


def test_compactness_filter_on_galilei():
    seq = W(0, 0, 1)
    kept = group_compactness_filter(seq, classify_nontrivial(seq))
    assert [c.name() for c in kept] == ["alpha^L_01", "alpha^F_23"]


def test_compactness_filter_keeps_noncompact_betas():
    seq = W(0, -1, 0, 0)
    nontrivial = classify_nontrivial(seq)
    assert group_compactness_filter(seq, nontrivial) == nontrivial
    flag = W(0, 0, 0, 0)
    assert group_compactness_filter(flag, classify_nontrivial(flag)) == classify_nontrivial(flag)
    with pytest.raises(ValueError):
        group_compactness_filter(W(0, 2, 0), [])


@given(standard_sequences(2, 6))
def test_compactness_filter_is_monotone(seq):
    nontrivial = classify_nontrivial(seq)
    kept = group_compactness_filter(seq, nontrivial)
    assert set(kept) <= set(nontrivial)
    assert [c for c in nontrivial if c.kind.is_type_ii] == [c for c in kept if c.kind.is_type_ii]
    if all(w <= 0 for w in seq):
        assert kept == nontrivial


def test_listing_n2_generic():
    ext = extend(W(1, 1), ExtensionAssignment.unit([alpha_l(0), alpha_f(1)]))
    assert commutator_table(ext, symbolic=True).lines() == [
        "[Omega01, Omega02] = omega1*Omega12 + alpha^F_12*Xi",
        "[Omega01, Omega12] = -Omega02",
        "[Omega02, Omega12] = omega2*Omega01 + alpha^L_01*Xi",
    ]
    assert commutator_table(ext).lines()[0] == "[Omega01, Omega02] = Omega12 + alpha^F_12*Xi"


def test_listing_n3_generic_symbolic():
    flag = W(0, 0, 0)
    ext = generic_extension(flag, classify_nontrivial(flag))
    lines = commutator_table(ext, symbolic=True).lines()
    assert len(lines) == 14
    assert lines[:3] == [
        "[Omega01, Omega02] = omega1*Omega12 + alpha^F_12*Xi",
        "[Omega01, Omega12] = -Omega02",
        "[Omega02, Omega12] = omega2*Omega01 + alpha^L_01*Xi",
    ]
    assert "[Omega02, Omega13] = -omega2*beta_13*Xi" in lines
    assert "[Omega01, Omega23] = beta_13*Xi" in lines
    assert not any(line.startswith("[Omega03, Omega12]") for line in lines)


def test_listing_flag_n2_shows_only_assigned_charges():
    ext = extend(W(0, 0), ExtensionAssignment({alpha_l(0): Fraction(1, 2)}))
    assert commutator_table(ext).lines() == [
        "[Omega01, Omega12] = -Omega02",
        "[Omega02, Omega12] = alpha^L_01*Xi",
    ]


def test_listing_numeric_values_and_unicode():
    ext = extend(W(Fraction(1, 2), 0), ExtensionAssignment({alpha_f(1): 1}))
    lines = commutator_table(ext).lines()
    assert lines == ["[Omega01, Omega02] = (1/2)*Omega12 + alpha^F_12*Xi", "[Omega01, Omega12] = -Omega02"]
    uni = commutator_table(ext, symbolic=True, unicode=True).lines()
    assert uni[0] == "[Ω₀₁, Ω₀₂] = ω₁*Ω₁₂ + α^F₁₂*Ξ"
