"""Extensions of the q-Bailey-Dixon formula and a second q-Dixon formula.

Here ``a`` and ``c`` enter without square roots, so the closed forms use the
squared quantities directly.
"""

from __future__ import annotations

from ..scalar import ZERO
from . import relations
from ._notation import F, binom2, chi, env
from .families import dixon_a, dixon_b, lhs_of, watson_a, watson_b
from .spec import IdentitySpec, cited


def _bailey_outer(p, i):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return (
        a**i * c ** (n - i)
        * (1 - Q(2 * i - 2 * l - 1) * a * a) / (1 - Q(-2 * l - 1) * a * a)
        * F([Q(-l), Q(-n), Q(-2 * l - 1) * a * a], [q, Q(n - 2 * l) * a * a, Q(-l) * a * a], i, q)
    )


def _bailey_pref(p, sign_m):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    k = sign_m * m
    return (
        F([Q(1 + l - n) / (a * a), -q / a], [Q(1 + l) / (a * a), -Q(1 - n) / a], l, q)
        * F([-a, Q(k) * c * c], [-a * c, Q(k) * c], n, q)
    )


def thm_d(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    total = ZERO
    for i in range(min(l, n) + 1):
        outer = _bailey_outer(p, i)
        for j in range(min(m, n - i) + 1):
            if not chi(n - i - j):
                continue
            total += (
                outer * (-1) ** (i + j) * Q(n * i + (n - i - j) * (j - m) + binom2(j + 1))
                * F(
                    [Q(-m), Q(i - n), Q(1 + 2 * l - n - i) / (a * a), Q(-m) * c, -Q(-m) * c],
                    [q, Q(1 + l - n) / a, -Q(1 + l - n) / a, Q(-m) * c * c, Q(j - 2 * m - 1) * c * c],
                    j, q,
                )
                * F(
                    [q, Q(2 + 2 * l + 2 * m - 2 * n) / (a * a * c * c)],
                    [Q(2 + 2 * l - 2 * n + 2 * j) / (a * a), Q(1 - 2 * m + 2 * j) * c * c],
                    (n - i - j) // 2, q2,
                )
            )
    return _bailey_pref(p, -1) * total


def thm_e(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    total = ZERO
    for i in range(min(l, n) + 1):
        outer = _bailey_outer(p, i)
        for j in range(min(m, n - i) + 1):
            if not chi(n - i - j):
                continue
            total += (
                outer * (-1) ** i * Q(n * i + (m + n - i) * j - binom2(j))
                * F(
                    [Q(-m), Q(i - n), Q(1 + 2 * l - n - i) / (a * a), c, -c],
                    [q, Q(1 + l - n) / a, -Q(1 + l - n) / a, Q(m) * c * c, Q(j - 1) * c * c],
                    j, q,
                )
                * F(
                    [q, Q(2 + 2 * l - 2 * n) / (a * a * c * c)],
                    [Q(2 + 2 * l - 2 * n + 2 * j) / (a * a), Q(1 + 2 * j) * c * c],
                    (n - i - j) // 2, q2,
                )
            )
    return _bailey_pref(p, 1) * total


def thm_f(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = F([a, Q(n) * a * a], [a * a, Q(n) * a], l, q) * F([-a, Q(m) * c * c], [-a * c, Q(m) * c], n, q)
    total = ZERO
    for i in range(min(l, n) + 1):
        outer = (
            Q((l + n) * i) * a**i * c ** (n - i)
            * (1 - Q(2 * i - 1) * a * a) / (1 - a * a / q)
            * F([Q(-l), Q(-n), a * a / q], [q, Q(n) * a * a, Q(l) * a * a], i, q)
        )
        for j in range(min(m, n - i) + 1):
            if not chi(n - i - j):
                continue
            total += (
                outer * Q((m + n - i) * j - binom2(j))
                * F(
                    [Q(-m), Q(i - n), Q(1 - n - i) / (a * a), c, -c],
                    [q, Q(1 - n) / a, -Q(1 - n) / a, Q(m) * c * c, Q(j - 1) * c * c],
                    j, q,
                )
                * F(
                    [q, Q(2 - 2 * n) / (a * a * c * c)],
                    [Q(2 - 2 * n + 2 * j) / (a * a), Q(1 + 2 * j) * c * c],
                    (n - i - j) // 2, q2,
                )
            )
    return pref * total


def _second_pref(p, sign_m):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    k = 1 + sign_m * m + n
    return F([Q(k), -q * a / c], [Q(k) * a, -q / c], n, q)


def _g_outer(p, i):
    # shared by thm-g and thm-h
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return (
        (-1) ** i * (c / a) ** i
        * (1 - Q(1 + 2 * i) / (c * c)) / (1 - q / (c * c))
        * F([Q(-l), Q(1 + l) * a / (c * c), q / (c * c)], [q, Q(1 - l) / a, Q(2 + l) / (c * c)], i, q)
    )


def _i_outer(p, i):
    # shared by thm-i and thm-j
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return (
        Q(l * i) * (c / a) ** i
        * (1 - Q(1 - 2 * l + 2 * i) / (c * c)) / (1 - Q(1 - 2 * l) / (c * c))
        * F([Q(-l), Q(1 - l) * a / (c * c), Q(1 - 2 * l) / (c * c)], [q, Q(1 - l) / a, Q(2 - l) / (c * c)], i, q)
    )


def _second_sum(p, outer, e, s, minus):
    """Double sum shared by thm-g..thm-j.

    ``e`` is the signed ell carried by the a/c^2 parameters and ``s`` the
    power of q on a/c in the j-bracket (1 + ell for g/h, 1 for i/j).
    """
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
                tops + [Q(l - i) * a, Q(1 + e + i) * a / (c * c)],
                [q, Q(s) * a / c, -Q(s) * a / c] + bots,
                j, q,
            )
            tail = F(
                [Q(1 + l - i + j) * a, Q(2 + e + i + j) * a / (c * c)],
                [q, Q(2 * s + 2 * j) * a * a / (c * c)],
                length, q2,
            )
            total += o * coef * bracket * tail
    return total


def thm_g(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = F([a, -Q(-l) * c], [Q(-l - 1) * c * c, -q * a / c], l, q) * _second_pref(p, 1)
    return pref * _second_sum(p, _g_outer, l, 1 + l, minus=True)


def thm_h(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = F([a, -Q(-l) * c], [Q(-l - 1) * c * c, -q * a / c], l, q) * _second_pref(p, -1)
    return pref * _second_sum(p, _g_outer, l, 1 + l, minus=False)


def thm_i(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = F([a, c], [Q(l - 1) * c * c, Q(1 - l) * a / c], l, q) * _second_pref(p, 1)
    return pref * _second_sum(p, _i_outer, -l, 1, minus=True)


def thm_j(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = F([a, c], [Q(l - 1) * c * c, Q(1 - l) * a / c], l, q) * _second_pref(p, -1)
    return pref * _second_sum(p, _i_outer, -l, 1, minus=False)


def _pipeline(relation, cited_id):
    return lambda p: relation(p, cited(cited_id))


def _relation(relation, builder):
    series = lhs_of(builder)
    return lambda p: relation(p, series)


_FREE = dict(ell_fixed=None, m_fixed=None)


def _theorem(ident, label, builder, closed, relation, inner, signs, order, **kw):
    return IdentitySpec(
        ident, label, "dixon", lhs=lhs_of(builder), rhs_closed=closed,
        rhs_derived=_pipeline(relation, inner), signs=signs, order=order, **_FREE, **kw,
    )


ENTRIES = [
    IdentitySpec(
        "dixon-relation-a", "Sear transform of the Bailey-Dixon type series", "relation",
        lhs=lhs_of(dixon_a), rhs_closed=_relation(relations.dixon_relation_a, watson_a),
        rhs_derived=_pipeline(relations.dixon_relation_a, "equivalence-b"),
        signs=(1, 1), order=300, **_FREE,
    ),
    _theorem("thm-d", "Theorem: q-Bailey-Dixon with u=ell, v=m", dixon_a, thm_d,
             relations.dixon_relation_a, "equivalence-b", (1, 1), 310),
    _theorem("thm-e", "Theorem: q-Bailey-Dixon with u=ell, v=-m", dixon_a, thm_e,
             relations.dixon_relation_a, "thm-a", (1, -1), 320),
    _theorem("thm-f", "Theorem: q-Bailey-Dixon with u=-ell, v=-m", dixon_a, thm_f,
             relations.dixon_relation_a, "equivalence-a", (-1, -1), 330),
    IdentitySpec(
        "dixon-relation-b", "Sear transform of the second q-Dixon type series", "relation",
        lhs=lhs_of(dixon_b), rhs_closed=_relation(relations.dixon_relation_b, watson_b),
        rhs_derived=_pipeline(relations.dixon_relation_b, "thm-c"),
        signs=(1, 1), order=400, **_FREE,
    ),
    _theorem("thm-g", "Theorem: second q-Dixon with u=ell, v=m", dixon_b, thm_g,
             relations.dixon_relation_b, "thm-c", (1, 1), 410),
    _theorem("thm-h", "Theorem: second q-Dixon with u=ell, v=-m, m <= n", dixon_b, thm_h,
             relations.dixon_relation_b, "thm-b", (1, -1), 420, m_le_n=True),
    _theorem("thm-i", "Theorem: second q-Dixon with u=-ell, v=m", dixon_b, thm_i,
             relations.dixon_relation_b, "equivalence-f", (-1, 1), 430),
    _theorem("thm-j", "Theorem: second q-Dixon with u=-ell, v=-m, m <= n", dixon_b, thm_j,
             relations.dixon_relation_b, "equivalence-e", (-1, -1), 440, m_le_n=True),
]
