"""Extensions of the Andrews and Jain q-Watson formulas by two integers."""

from __future__ import annotations

from dataclasses import replace

from ..scalar import ZERO
from . import relations
from ._notation import F, binom2, chi, env
from .families import lhs_of, watson_a, watson_b
from .spec import IdentitySpec, cited


def prop_a(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    total = ZERO
    for j in range(min(m, n) + 1):
        if not chi(n - j):
            continue
        total += (
            Q((m + n) * j - binom2(j)) * sc**n
            * F([Q(-m), Q(-n), Q(1 + n) * a, sc, -sc], [q, q * sa, -q * sa, Q(m) * c, Q(j - 1) * c], j, q)
            * F([q, q2 * a / c], [Q(2 + 2 * j) * a, Q(1 + 2 * j) * c], (n - j) // 2, q2)
        )
    return total


def thm_a_prefactor(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return F([Q(1 + l + n) * a, Q(1 + n) * sa], [Q(1 + l + 2 * n) * a, q * sa], l, q)


def thm_a_double_sum(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    total = ZERO
    for i in range(min(l, n) + 1):
        outer = (
            sc ** (n - i) / sa**i
            * (1 - Q(1 + 2 * l + 2 * n - 2 * i) * a) / (1 - Q(1 + 2 * l + 2 * n) * a)
            * F([Q(-l), Q(-n), Q(-2 * l - 2 * n - 1) / a], [q, Q(-l - 2 * n) / a, Q(-2 * l - n) / a], i, q)
        )
        for j in range(min(m, n - i) + 1):
            if not chi(n - i - j):
                continue
            total += (
                outer * Q(2 * i + (m + n - i) * j - binom2(j))
                * F(
                    [Q(-m), Q(i - n), Q(1 + 2 * l + n - i) * a, sc, -sc],
                    [q, Q(1 + l) * sa, -Q(1 + l) * sa, Q(m) * c, Q(j - 1) * c],
                    j, q,
                )
                * F([q, Q(2 + 2 * l) * a / c], [Q(2 + 2 * l + 2 * j) * a, Q(1 + 2 * j) * c], (n - i - j) // 2, q2)
            )
    return total


def thm_a(p):
    # the printed statement chains "= prefactor = double sum"; the proof shows a product
    return thm_a_prefactor(p) * thm_a_double_sum(p)


def equivalence_a(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = F([Q(-n) / a, -Q(-n) / sa], [Q(-2 * n) / a, -1 / sa], l, q)
    total = ZERO
    for i in range(min(l, n) + 1):
        outer = (
            (-1) ** i * sc ** (n - i) / sa**i
            * (1 - Q(1 + 2 * n - 2 * i) * a) / (1 - Q(1 + 2 * n) * a)
            * F([Q(-l), Q(-n), Q(-2 * n - 1) / a], [q, Q(-n) / a, Q(l - 2 * n) / a], i, q)
        )
        for j in range(min(m, n - i) + 1):
            if not chi(n - i - j):
                continue
            total += (
                outer * Q((l + 2) * i + (m + n - i) * j - binom2(j))
                * F(
                    [Q(-m), Q(i - n), Q(1 + n - i) * a, sc, -sc],
                    [q, q * sa, -q * sa, Q(m) * c, Q(j - 1) * c],
                    j, q,
                )
                * F([q, q2 * a / c], [Q(2 + 2 * j) * a, Q(1 + 2 * j) * c], (n - i - j) // 2, q2)
            )
    return pref * total


def equivalence_b(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = F([Q(1 + l + n) * a, Q(1 + n) * sa], [Q(1 + l + 2 * n) * a, q * sa], l, q)
    total = ZERO
    for i in range(min(l, n) + 1):
        outer = (
            sc ** (n - i) / sa**i
            * (1 - Q(1 + 2 * l + 2 * n - 2 * i) * a) / (1 - Q(1 + 2 * l + 2 * n) * a)
            * F([Q(-l), Q(-n), Q(-2 * l - 2 * n - 1) / a], [q, Q(-l - 2 * n) / a, Q(-2 * l - n) / a], i, q)
        )
        for j in range(min(m, n - i) + 1):
            if not chi(n - i - j):
                continue
            total += (
                outer * (-1) ** j * Q(2 * i + (n - i - j) * (j - m) + binom2(j + 1))
                * F(
                    [Q(-m), Q(i - n), Q(1 + 2 * l + n - i) * a, Q(-m) * sc, -Q(-m) * sc],
                    [q, Q(1 + l) * sa, -Q(1 + l) * sa, Q(-m) * c, Q(j - 2 * m - 1) * c],
                    j, q,
                )
                * F(
                    [q, Q(2 + 2 * l + 2 * m) * a / c],
                    [Q(2 + 2 * l + 2 * j) * a, Q(1 - 2 * m + 2 * j) * c],
                    (n - i - j) // 2, q2,
                )
            )
    return pref * total


def equivalence_c(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pref = F([Q(-n) / a, -Q(-n) / sa], [Q(-2 * n) / a, -1 / sa], l, q)
    total = ZERO
    for i in range(min(l, n) + 1):
        outer = (
            sc ** (n - i) / sa**i
            * (1 - Q(1 + 2 * n - 2 * i) * a) / (1 - Q(1 + 2 * n) * a)
            * F([Q(-l), Q(-n), Q(-2 * n - 1) / a], [q, Q(-n) / a, Q(l - 2 * n) / a], i, q)
        )
        for j in range(min(m, n - i) + 1):
            if not chi(n - i - j):
                continue
            total += (
                outer * (-1) ** (i + j) * Q((l + 2) * i + (n - i - j) * (j - m) + binom2(j + 1))
                * F(
                    [Q(-m), Q(i - n), Q(1 + n - i) * a, Q(-m) * sc, -Q(-m) * sc],
                    [q, q * sa, -q * sa, Q(-m) * c, Q(j - 2 * m - 1) * c],
                    j, q,
                )
                * F([q, Q(2 + 2 * m) * a / c], [Q(2 + 2 * j) * a, Q(1 - 2 * m + 2 * j) * c], (n - i - j) // 2, q2)
            )
    return pref * total


def prop_b(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1) * sa * sc
    total = ZERO
    for j in range(min(m, n) + 1):
        total += (
            Q((m - n) * j + binom2(j + 1))
            * F([Q(-m), Q(-n), -Q(-n), a, c], [q, s, -s, Q(m - 2 * n), Q(j - 2 * n - 1)], j, q)
            * F([Q(1 + j) * a, Q(1 + j) * c], [q, Q(1 + 2 * j) * a * c], n - j, q2)
        )
    return total


def prop_c(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1) * sa * sc
    total = ZERO
    for j in range(m + 1):
        total += (
            (-1) ** j * Q(binom2(j + 1) - n * j)
            * F([Q(-m), Q(-m - n), -Q(-m - n), a, c], [q, s, -s, Q(-m - 2 * n), Q(j - 2 * m - 2 * n - 1)], j, q)
            * F([Q(1 + j) * a, Q(1 + j) * c], [q, Q(1 + 2 * j) * a * c], m + n - j, q2)
        )
    return total


def _thm_bc_outer(p, i):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return (
        R(5 * i) / (sa * sc) ** i
        * (1 - Q(2 * l - 2 * i) * a / c) / (1 - Q(2 * l) * a / c)
        * F([Q(-l), c, Q(-2 * l) * c / a], [q, Q(1 - 2 * l) / a, Q(1 - l) * c / a], i, q)
    )


def thm_b(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1) * sa * sc
    pref = F([Q(l) * a, R(1) * sa / sc], [Q(l) * a / c, s], l, q)
    total = ZERO
    for i in range(l + 1):
        outer = _thm_bc_outer(p, i)
        for j in range(min(m, n) + 1):
            total += (
                outer * Q((m - n) * j + binom2(j + 1))
                * F(
                    [Q(-m), Q(-n), -Q(-n), Q(2 * l - i) * a, Q(i) * c],
                    [q, Q(l) * s, -Q(l) * s, Q(m - 2 * n), Q(j - 2 * n - 1)],
                    j, q,
                )
                * F([Q(1 + 2 * l - i + j) * a, Q(1 + i + j) * c], [q, Q(1 + 2 * l + 2 * j) * a * c], n - j, q2)
            )
    return pref * total


def thm_c(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1) * sa * sc
    pref = F([Q(l) * a, R(1) * sa / sc], [Q(l) * a / c, s], l, q)
    total = ZERO
    for i in range(l + 1):
        outer = _thm_bc_outer(p, i)
        for j in range(m + 1):
            total += (
                outer * (-1) ** j * Q(-n * j + binom2(j + 1))
                * F(
                    [Q(-m), Q(-m - n), -Q(-m - n), Q(2 * l - i) * a, Q(i) * c],
                    [q, Q(l) * s, -Q(l) * s, Q(-m - 2 * n), Q(j - 2 * m - 2 * n - 1)],
                    j, q,
                )
                * F([Q(1 + 2 * l - i + j) * a, Q(1 + i + j) * c], [q, Q(1 + 2 * l + 2 * j) * a * c], m + n - j, q2)
            )
    return pref * total


def _equiv_ef_outer(p, i):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return (
        (-1) ** i * R((1 + 2 * l) * i) / (sa * sc) ** i
        * (1 - Q(2 * i) * c / a) / (1 - c / a)
        * F([Q(-l), c, c / a], [q, q / a, Q(1 + l) * c / a], i, q)
    )


def equivalence_e(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1) * sa * sc
    pref = F([q / a, -R(1) * sc / sa], [q * c / a, -R(1) / (sa * sc)], l, q)
    total = ZERO
    for i in range(l + 1):
        outer = _equiv_ef_outer(p, i)
        for j in range(min(m, n) + 1):
            total += (
                outer * Q((m - n) * j + binom2(j + 1))
                * F(
                    [Q(-m), Q(-n), -Q(-n), Q(-i) * a, Q(i) * c],
                    [q, s, -s, Q(m - 2 * n), Q(j - 2 * n - 1)],
                    j, q,
                )
                * F([Q(1 - i + j) * a, Q(1 + i + j) * c], [q, Q(1 + 2 * j) * a * c], n - j, q2)
            )
    return pref * total


def equivalence_f(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1) * sa * sc
    pref = F([q / a, -R(1) * sc / sa], [q * c / a, -R(1) / (sa * sc)], l, q)
    total = ZERO
    for i in range(l + 1):
        outer = _equiv_ef_outer(p, i)
        for j in range(m + 1):
            total += (
                outer * (-1) ** j * Q(-n * j + binom2(j + 1))
                * F(
                    [Q(-m), Q(-m - n), -Q(-m - n), Q(-i) * a, Q(i) * c],
                    [q, s, -s, Q(-m - 2 * n), Q(j - 2 * m - 2 * n - 1)],
                    j, q,
                )
                * F([Q(1 - i + j) * a, Q(1 + i + j) * c], [q, Q(1 + 2 * j) * a * c], m + n - j, q2)
            )
    return pref * total


def _substituted(closed_id, flip_a=False, flip_c=False):
    """Closed form of ``closed_id`` after sqrt(a) -> -q^-ell sqrt(a) and/or sqrt(c) -> -q^-m sqrt(c)."""
    inner = cited(closed_id)

    def evaluate(p):
        alpha = -p.rho ** (-2 * p.ell) * p.alpha if flip_a else p.alpha
        gamma = -p.rho ** (-2 * p.m) * p.gamma if flip_c else p.gamma
        return inner(replace(p, alpha=alpha, gamma=gamma, u=p.ell, v=p.m))

    return evaluate


def _pipeline(relation, cited_id):
    return lambda p: relation(p, cited(cited_id))


def _relation(relation, builder):
    series = lhs_of(builder)
    return lambda p: relation(p, series)


ENTRIES = [
    IdentitySpec(
        "prop-a", "Proposition: Andrews q-Watson with extra m", "watson",
        lhs=lhs_of(watson_a), rhs_closed=prop_a,
        rhs_derived=_pipeline(relations.equation_a, "andrews-watson"),
        signs=(0, 1), m_fixed=None, order=100,
    ),
    IdentitySpec(
        "equation-a", "proof of Proposition prop-a: interchanged double sum", "relation",
        lhs=lhs_of(watson_a), rhs_closed=_relation(relations.equation_a, watson_a),
        rhs_derived=_pipeline(relations.equation_a, "andrews-watson"),
        signs=(0, 1), m_fixed=None, order=110,
    ),
    IdentitySpec(
        "thm-a", "Theorem: Andrews q-Watson with extra ell, m", "watson",
        lhs=lhs_of(watson_a), rhs_closed=thm_a,
        rhs_derived=_pipeline(relations.equation_c, "prop-a"),
        signs=(1, 1), ell_fixed=None, m_fixed=None, order=120,
    ),
    IdentitySpec(
        "equation-c", "proof of Theorem thm-a: expansion over i", "relation",
        lhs=lhs_of(watson_a), rhs_closed=_relation(relations.equation_c, watson_a),
        rhs_derived=_pipeline(relations.equation_c, "prop-a"),
        signs=(1, 1), ell_fixed=None, m_fixed=None, order=130,
    ),
    IdentitySpec(
        "equivalence-a", "thm-a with sqrt(a) -> -q^-ell sqrt(a)", "equivalence",
        lhs=lhs_of(watson_a), rhs_closed=equivalence_a,
        rhs_derived=_substituted("thm-a", flip_a=True),
        signs=(-1, 1), ell_fixed=None, m_fixed=None, order=140,
    ),
    IdentitySpec(
        "equivalence-b", "thm-a with sqrt(c) -> -q^-m sqrt(c)", "equivalence",
        lhs=lhs_of(watson_a), rhs_closed=equivalence_b,
        rhs_derived=_substituted("thm-a", flip_c=True),
        signs=(1, -1), ell_fixed=None, m_fixed=None, order=150,
    ),
    IdentitySpec(
        "equivalence-c", "thm-a with both square roots substituted", "equivalence",
        lhs=lhs_of(watson_a), rhs_closed=equivalence_c,
        rhs_derived=_substituted("thm-a", flip_a=True, flip_c=True),
        signs=(-1, -1), ell_fixed=None, m_fixed=None, order=160,
    ),
    IdentitySpec(
        "equivalence-d", "equation-a after a -> q^(-1-n) a", "relation",
        lhs=lambda p: lhs_of(watson_a)(replace(p, alpha=p.rho ** (-1 - p.n) * p.alpha)),
        rhs_closed=_relation(relations.equivalence_d, watson_a),
        rhs_derived=_pipeline(relations.equivalence_d, "andrews-watson"),
        signs=(0, 1), m_fixed=None, order=200,
    ),
    IdentitySpec(
        "prop-b", "Proposition: Jain q-Watson with extra m, m <= n", "watson",
        lhs=lhs_of(watson_b), rhs_closed=prop_b,
        rhs_derived=_pipeline(relations.jain_split_plus, "jain-watson"),
        signs=(0, 1), m_fixed=None, m_le_n=True, order=210,
    ),
    IdentitySpec(
        "prop-c", "Proposition: Jain q-Watson with extra -m", "watson",
        lhs=lhs_of(watson_b), rhs_closed=prop_c,
        rhs_derived=_pipeline(relations.jain_split_minus, "jain-watson"),
        signs=(0, -1), m_fixed=None, order=220,
    ),
    IdentitySpec(
        "equation-aa", "proof of Theorem thm-b: expansion over i", "relation",
        lhs=lhs_of(watson_b), rhs_closed=_relation(relations.equation_aa, watson_b),
        rhs_derived=_pipeline(relations.equation_aa, "prop-b"),
        signs=(1, 1), ell_fixed=None, m_fixed=None, order=230,
    ),
    IdentitySpec(
        "thm-b", "Theorem: Jain q-Watson with extra ell, m, m <= n", "watson",
        lhs=lhs_of(watson_b), rhs_closed=thm_b,
        rhs_derived=_pipeline(relations.equation_aa, "prop-b"),
        signs=(1, 1), ell_fixed=None, m_fixed=None, m_le_n=True, order=240,
    ),
    IdentitySpec(
        "thm-c", "Theorem: Jain q-Watson with extra ell, -m", "watson",
        lhs=lhs_of(watson_b), rhs_closed=thm_c,
        rhs_derived=_pipeline(relations.equation_aa, "prop-c"),
        signs=(1, -1), ell_fixed=None, m_fixed=None, order=250,
    ),
    IdentitySpec(
        "equivalence-e", "thm-b with sqrt(a) -> -q^-ell sqrt(a)", "equivalence",
        lhs=lhs_of(watson_b), rhs_closed=equivalence_e,
        rhs_derived=_substituted("thm-b", flip_a=True),
        signs=(-1, 1), ell_fixed=None, m_fixed=None, m_le_n=True, order=260,
    ),
    IdentitySpec(
        "equivalence-f", "thm-c with sqrt(a) -> -q^-ell sqrt(a)", "equivalence",
        lhs=lhs_of(watson_b), rhs_closed=equivalence_f,
        rhs_derived=_substituted("thm-c", flip_a=True),
        signs=(-1, -1), ell_fixed=None, m_fixed=None, order=270,
    ),
]
