from fractions import Fraction

from hypothesis import settings, strategies as st

from orbitkit.scalar import QTau

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
qtaus = st.builds(QTau, small_fractions, small_fractions)
nonzero_qtaus = qtaus.filter(lambda x: not x.is_zero())


def points_of(rank, elements=st.integers(0, 3)):
    return st.lists(elements, min_size=rank, max_size=rank).map(tuple)


def tau_coords():
    """Nonnegative Z[tau] coordinates a + b*t with small a, b."""
    return st.builds(lambda a, b: QTau(a, b), st.integers(0, 2), st.integers(0, 2))


__all__ = ["qtaus", "nonzero_qtaus", "small_fractions", "points_of", "tau_coords", "Fraction"]
