from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def rationals(bound=20, nonzero=False):
    s = st.fractions(min_value=-bound, max_value=bound, max_denominator=bound)
    return s.filter(bool) if nonzero else s


def corner_sequences(min_n=5, max_n=9):
    """Strategy for (x, y) pairs of equal length with nonzero entries."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(
            st.lists(rationals(nonzero=True), min_size=n, max_size=n),
            st.lists(rationals(nonzero=True), min_size=n, max_size=n),
        )
    )


def p_vectors(min_n=5, max_n=9):
    good = rationals(12).filter(lambda v: v not in (Fraction(0), Fraction(1)))
    return st.integers(min_n, max_n).flatmap(lambda n: st.lists(good, min_size=n, max_size=n))
