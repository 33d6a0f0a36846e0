"""Classical summation and transformation formulas the extensions build on."""

from __future__ import annotations

from fractions import Fraction

from ..phi import PhiSeries, phi_sum
from ..scalar import ZERO
from . import relations
from ._notation import F, P, binom2, chi, env
from .families import dixon_a, dixon_b, lhs_of, watson_a, watson_b, whipple_a, whipple_b
from .spec import IdentitySpec, SearPoint, cited


def andrews_watson(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    if not chi(n):
        return ZERO
    return sc**n * F([q, q2 * a / c], [q2 * a, q * c], n // 2, q2)


def jain_watson(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return F([q * a, q * c], [q, q * a * c], n, q2)


def bailey_dixon(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    if not chi(n):
        return ZERO
    return F([-a, c * c], [-a * c, c], n, q) * F(
        [q, Q(n) * a * a * c * c], [q * c * c, Q(n) * a * a], n // 2, q2
    )


def another_dixon(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return F([Q(1 + n), -q * a / c], [Q(1 + n) * a, -q / c], n, q) * F(
        [q * a, q2 * a / c**2], [q, q2 * a * a / c**2], n, q2
    )


def andrews_whipple(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return (
        P(Q(1 - n) * a, n, q2) * P(Q(1 - n) * c, n, q2)
        / (P(q * a, n, q) * P(q * c, n, q))
        * Q(binom2(n + 1))
    )


def jain_whipple(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return P(a * c, n, q2) * P(q * c / a, n, q2) / P(c, 2 * n, q)


def _sear_lhs(sp: SearPoint) -> Fraction:
    q, n = sp.q, sp.n
    a, b, c, d, e = sp.a, sp.b, sp.c, sp.d, sp.e
    return phi_sum(PhiSeries((q ** -n, a, b, c), (d, e, q ** (1 - n) * a * b * c / (d * e)), q, n + 1), q)


def _sear_rhs(sp: SearPoint) -> Fraction:
    q, n = sp.q, sp.n
    a, b, c, d, e = sp.a, sp.b, sp.c, sp.d, sp.e
    pref = F([d / a, d * e / (b * c)], [d, d * e / (a * b * c)], n, q)
    inner = PhiSeries((q ** -n, a, e / b, e / c), (e, d * e / (b * c), q ** (1 - n) * a / d), q, n + 1)
    return pref * phi_sum(inner, q)


def _six_phi_five_lhs(sp: SearPoint) -> Fraction:
    # sp.a is the square root of the series parameter a; sp.n plays the role of m
    q, m = sp.q, sp.n
    sa, b, c = sp.a, sp.b, sp.c
    a = sa * sa
    series = PhiSeries(
        (a, q * sa, -q * sa, b, c, q ** -m),
        (sa, -sa, q * a / b, q * a / c, q ** (1 + m) * a),
        q ** (1 + m) * a / (b * c),
        m + 1,
    )
    return phi_sum(series, q)


def _six_phi_five_rhs(sp: SearPoint) -> Fraction:
    q, m = sp.q, sp.n
    a, b, c = sp.a * sp.a, sp.b, sp.c
    return F([q * a, q * a / (b * c)], [q * a / b, q * a / c], m, q)


def _zero_shift(relation, cited_id):
    return lambda p: relation(p, cited(cited_id))


ENTRIES = [
    IdentitySpec(
        "sear", "Sear's transformation formula", "base",
        lhs=_sear_lhs, rhs_closed=_sear_rhs, point_kind="sear", order=10,
    ),
    IdentitySpec(
        "andrews-watson", "q-Watson formula due to Andrews", "base",
        lhs=lhs_of(watson_a), rhs_closed=andrews_watson, order=20,
    ),
    IdentitySpec(
        "jain-watson", "q-Watson formula due to Jain", "base",
        lhs=lhs_of(watson_b), rhs_closed=jain_watson, order=30,
    ),
    IdentitySpec(
        "bailey-dixon", "The q-Bailey-Dixon formula", "base",
        lhs=lhs_of(dixon_a), rhs_closed=bailey_dixon,
        rhs_derived=_zero_shift(relations.dixon_relation_a, "andrews-watson"), order=40,
    ),
    IdentitySpec(
        "another-dixon", "another q-Dixon formula (Sear + Jain q-Watson)", "base",
        lhs=lhs_of(dixon_b), rhs_closed=another_dixon,
        rhs_derived=_zero_shift(relations.dixon_relation_b, "jain-watson"), order=50,
    ),
    IdentitySpec(
        "andrews-whipple", "q-Whipple formula due to Andrews", "base",
        lhs=lhs_of(whipple_a), rhs_closed=andrews_whipple,
        rhs_derived=_zero_shift(relations.whipple_relation_a, "jain-watson"), order=60,
    ),
    IdentitySpec(
        "jain-whipple", "q-Whipple formula due to Jain", "base",
        lhs=lhs_of(whipple_b), rhs_closed=jain_whipple,
        rhs_derived=_zero_shift(relations.whipple_relation_b, "jain-watson"), order=70,
    ),
    IdentitySpec(
        "terminating-65", "terminating 6phi5 summation", "base",
        lhs=_six_phi_five_lhs, rhs_closed=_six_phi_five_rhs, point_kind="six-phi-five", order=80,
    ),
]
