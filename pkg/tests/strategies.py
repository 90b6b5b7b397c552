"""Hypothesis strategies for omega sequences."""

from fractions import Fraction

from hypothesis import strategies as st

from ckcohomology.algebra import OmegaSequence

nonzero_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=4).filter(bool)
omegas = st.one_of(st.just(Fraction(0)), nonzero_rationals)
standard_omegas = st.sampled_from([Fraction(0), Fraction(1), Fraction(-1)])


def sequences(min_n: int = 2, max_n: int = 4, values=omegas):
    return st.lists(values, min_size=min_n, max_size=max_n).map(lambda v: OmegaSequence(tuple(v)))


def standard_sequences(min_n: int = 2, max_n: int = 5):
    return sequences(min_n, max_n, standard_omegas)
