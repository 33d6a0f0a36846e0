"""Extensions of the Andrews and Jain q-Whipple formulas."""

from __future__ import annotations

from ..scalar import ZERO
from . import relations
from ._notation import F, binom2, env
from .families import lhs_of, watson_b, whipple_a, whipple_b
from .spec import IdentitySpec, cited


def _andrews_prefactor(p, u):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1) * sa / sc
    return (
        F([Q(-n) * s, -Q(m - n) * s, Q(1 + u + n)], [Q(1 + u + m) * a, Q(-n) / c, -q], n, q)
        * F([Q(m - n) * a, R(1) * sa * sc], [Q(m) * a * c, Q(-n) * s], m, q)
    )


def _andrews_j(p, j):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return (
        Q(n * j) * R(5 * j) * (sc / sa) ** j
        * (1 - Q(2 * m - 2 * j) * a * c) / (1 - Q(2 * m) * a * c)
        * F([Q(-m), Q(-n) / c, Q(-2 * m) / (a * c)], [q, Q(1 - 2 * m + n) / a, Q(1 - m) / (a * c)], j, q)
    )


def thm_k(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1) * sa / sc
    total = ZERO
    for j in range(m + 1):
        outer = _andrews_j(p, j)
        for i in range(l + 1):
            total += (
                outer * (-1) ** i * Q(binom2(i + 1) - n * i)
                * F(
                    [Q(-l), Q(-l - n), -Q(-l - n), Q(2 * m - n - j) * a, Q(j - n) / c],
                    [q, Q(m - n) * s, -Q(m - n) * s, Q(-l - 2 * n), Q(i - 2 * l - 2 * n - 1)],
                    i, q,
                )
                * F([Q(1 + 2 * m - n + i - j) * a, Q(1 - n + i + j) / c], [q, Q(1 + 2 * m - 2 * n + 2 * i) * a / c],
                    l + n - i, q2)
            )
    return _andrews_prefactor(p, l) * total


def thm_l(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1) * sa / sc
    total = ZERO
    for j in range(m + 1):
        outer = _andrews_j(p, j)
        for i in range(min(l, n) + 1):
            total += (
                outer * Q((l - n) * i + binom2(i + 1))
                * F(
                    [Q(-l), Q(-n), -Q(-n), Q(2 * m - n - j) * a, Q(j - n) / c],
                    [q, Q(m - n) * s, -Q(m - n) * s, Q(l - 2 * n), Q(i - 2 * n - 1)],
                    i, q,
                )
                * F([Q(1 + 2 * m - n + i - j) * a, Q(1 - n + i + j) / c], [q, Q(1 + 2 * m - 2 * n + 2 * i) * a / c],
                    n - i, q2)
            )
    return _andrews_prefactor(p, -l) * total


def _jain_sum(p, outer, shift, minus):
    """Double sum shared by thm-m..thm-p; ``shift`` is 0 for m/n and ell for o/p."""
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    total = ZERO
    for i in range(l + 1):
        o = outer(p, i)
        for j in range(m + 1):
            if minus:
                coef = (-1) ** j * Q(binom2(j + 1) - n * j)
                tops, bots, length = [Q(-m), Q(-m - n), -Q(-m - n)], [Q(-m - 2 * n), Q(j - 2 * m - 2 * n - 1)], m + n - j
            else:
                coef = Q((m - n) * j + binom2(j + 1))
                tops, bots, length = [Q(-m), Q(-n), -Q(-n)], [Q(m - 2 * n), Q(j - 2 * n - 1)], n - j
            bracket = F(
                tops + [Q(2 * shift - i - 1) * a * c, Q(i) * c / a],
                [q, Q(shift) * c, -Q(shift) * c] + bots,
                j, q,
            )
            tail = F([Q(2 * shift - i + j) * a * c, Q(1 + i + j) * c / a], [q, Q(2 * shift + 2 * j) * c * c], length, q2)
            total += o * coef * bracket * tail
    return total


def _mn_outer(p, i):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return (
        (-1) ** i * Q((l + 1) * i) / c**i
        * (1 - Q(1 + 2 * i) / (a * a)) / (1 - q / (a * a))
        * F([Q(-l), c / a, q / (a * a)], [q, q2 / (a * c), Q(2 + l) / (a * a)], i, q)
    )


def _op_outer(p, i):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return (
        Q(i) / c**i
        * (1 - Q(1 - 2 * l + 2 * i) / (a * a)) / (1 - Q(1 - 2 * l) / (a * a))
        * F([Q(-l), c / a, Q(1 - 2 * l) / (a * a)], [q, Q(2 - 2 * l) / (a * c), Q(2 - l) / (a * a)], i, q)
    )


def thm_m(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = (
        F([q2 / (a * c), -q / a], [q2 / (a * a), -q / c], l, q)
        * F([Q(1 - m + n), -Q(-l) * c], [Q(n - m - l) * c, -q], n, q)
    )
    return pref * _jain_sum(p, _mn_outer, 0, minus=False)


def thm_n(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = (
        F([q2 / (a * c), -q / a], [q2 / (a * a), -q / c], l, q)
        * F([Q(1 + m + n), -Q(-l) * c], [Q(n + m - l) * c, -q], n, q)
    )
    return pref * _jain_sum(p, _mn_outer, 0, minus=True)


def thm_o(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = (
        F([a, Q(l - 1) * a * c], [c, Q(l - 1) * a * a], l, q)
        * F([Q(1 - m + n), -Q(l) * c], [Q(n - m + l) * c, -q], n, q)
    )
    return pref * _jain_sum(p, _op_outer, l, minus=False)


def thm_p(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = (
        F([a, Q(l - 1) * a * c], [c, Q(l - 1) * a * a], l, q)
        * F([Q(1 + m + n), -Q(l) * c], [Q(l + m + n) * c, -q], n, q)
    )
    return pref * _jain_sum(p, _op_outer, l, minus=True)


def _pipeline(relation, cited_id):
    return lambda p: relation(p, cited(cited_id))


def _relation(relation, builder):
    series = lhs_of(builder)
    return lambda p: relation(p, series)


_FREE = dict(ell_fixed=None, m_fixed=None)


def _theorem(ident, label, builder, closed, relation, inner, signs, order, **kw):
    return IdentitySpec(
        ident, label, "whipple", lhs=lhs_of(builder), rhs_closed=closed,
        rhs_derived=_pipeline(relation, inner), signs=signs, order=order, **_FREE, **kw,
    )


ENTRIES = [
    IdentitySpec(
        "whipple-relation-a", "double Sear transform of the Andrews q-Whipple type series", "relation",
        lhs=lhs_of(whipple_a), rhs_closed=_relation(relations.whipple_relation_a, watson_b),
        rhs_derived=_pipeline(relations.whipple_relation_a, "thm-c"),
        signs=(1, 1), order=500, **_FREE,
    ),
    _theorem("thm-k", "Theorem: Andrews q-Whipple with u=ell, v=m", whipple_a, thm_k,
             relations.whipple_relation_a, "thm-c", (1, 1), 510),
    _theorem("thm-l", "Theorem: Andrews q-Whipple with u=-ell, v=m, ell <= n", whipple_a, thm_l,
             relations.whipple_relation_a, "thm-b", (-1, 1), 520, ell_le_n=True),
    IdentitySpec(
        "whipple-relation-b", "Sear transform of the Jain q-Whipple type series", "relation",
        lhs=lhs_of(whipple_b), rhs_closed=_relation(relations.whipple_relation_b, watson_b),
        rhs_derived=_pipeline(relations.whipple_relation_b, "equivalence-e"),
        signs=(1, 1), order=600, **_FREE,
    ),
    _theorem("thm-m", "Theorem: Jain q-Whipple with u=ell, v=m, m <= n", whipple_b, thm_m,
             relations.whipple_relation_b, "equivalence-e", (1, 1), 610, m_le_n=True),
    _theorem("thm-n", "Theorem: Jain q-Whipple with u=ell, v=-m", whipple_b, thm_n,
             relations.whipple_relation_b, "equivalence-f", (1, -1), 620),
    _theorem("thm-o", "Theorem: Jain q-Whipple with u=-ell, v=m, m <= n", whipple_b, thm_o,
             relations.whipple_relation_b, "thm-b", (-1, 1), 630, m_le_n=True),
    _theorem("thm-p", "Theorem: Jain q-Whipple with u=-ell, v=-m", whipple_b, thm_p,
             relations.whipple_relation_b, "thm-c", (-1, -1), 640),
]
