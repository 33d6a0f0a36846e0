"""Hypothesis property checks shared by the unit suites and the acceptance run.

Each ``check_*`` factory returns a hypothesis-driven callable, so callers can
pick the example budget.
"""

from fractions import Fraction

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from qwatson.phi import PhiSeries, phi_sum
from qwatson.qalg import HalfMonomial, ParamPoint, eval_half_monomial, qpoch
from qwatson.scalar import PoleError, ipow

small = st.fractions(min_value=-4, max_value=4, max_denominator=9)
nonzero = small.filter(lambda x: x != 0)
base_q = nonzero.filter(lambda x: abs(x) != 1)
exponent = st.integers(min_value=-6, max_value=6)


def _settings(budget):
    return settings(
        max_examples=budget,
        deadline=None,
        derandomize=True,
        suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
    )


def check_splitting_law(budget=1000):
    @_settings(budget)
    @given(x=small, q=base_q, m=st.integers(0, 7), n=st.integers(0, 7))
    def prop(x, q, m, n):
        assert qpoch(x, q, m + n) == qpoch(x, q, m) * qpoch(x * q**m, q, n)

    return prop


def check_phi_termination(budget=1000):
    @_settings(budget)
    @given(
        q=base_q,
        big_n=st.integers(0, 5),
        extra=st.integers(1, 4),
        nums=st.lists(nonzero, min_size=0, max_size=3),
        dens=st.lists(nonzero, min_size=1, max_size=3),
        z=nonzero,
    )
    def prop(q, big_n, extra, nums, dens, z):
        numerators = (q**-big_n, *nums)
        short = PhiSeries(numerators, tuple(dens), z, big_n + 1)
        long = PhiSeries(numerators, tuple(dens), z, big_n + 1 + extra)
        try:
            expected = phi_sum(long, q)
        except PoleError:
            assume(False)
        assert phi_sum(short, q) == expected

    return prop


monomials = st.builds(
    HalfMonomial,
    sign=st.sampled_from((1, -1)),
    e_rho=exponent,
    e_alpha=exponent,
    e_gamma=exponent,
)
points = st.builds(
    ParamPoint,
    rho=base_q,
    alpha=nonzero,
    gamma=nonzero,
    n=st.just(0),
    ell=st.just(0),
    m=st.just(0),
)


def check_monomial_multiplicativity(budget=1000):
    @_settings(budget)
    @given(x=monomials, y=monomials, p=points)
    def prop(x, y, p):
        assert eval_half_monomial(x * y, p) == eval_half_monomial(x, p) * eval_half_monomial(y, p)
        assert eval_half_monomial(-x, p) == -eval_half_monomial(x, p)

    return prop


def check_power_laws(budget=1000):
    @_settings(budget)
    @given(x=nonzero, j=exponent, k=exponent)
    def prop(x, j, k):
        assert ipow(x, j + k) == ipow(x, j) * ipow(x, k)
        assert ipow(ipow(x, j), k) == ipow(x, j * k)
        assert ipow(x, -j) * ipow(x, j) == Fraction(1)

    return prop
