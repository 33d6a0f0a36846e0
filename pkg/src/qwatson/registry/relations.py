"""Proof pipelines: each rewrites a series as a finite combination of simpler ones.

Every function takes the outer point and an ``inner`` evaluator.  The inner
series is always one of the general families at a transformed point built with
:func:`moved`, so passing the family's series evaluator checks the relation
itself, while passing a cited closed form reproduces the theorem the proof
derives.
"""

from __future__ import annotations

from ..scalar import ZERO
from ._notation import F, binom2, env, moved


def equation_a(p, inner):
    """watson_a(0, m) as a sum over j of shifted watson_a(0, 0) series."""
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    total = ZERO
    for j in range(min(m, n) + 1):
        coef = Q(m * j + binom2(j + 1)) * sc**j * F(
            [Q(-m), Q(-n), Q(1 + n) * a, sc, -sc],
            [q, q * sa, -q * sa, Q(m) * c, Q(j - 1) * c],
            j, q,
        )
        total += coef * inner(moved(p, alpha=R(2 * j) * sa, gamma=R(2 * j) * sc, n=n - j))
    return total


def equation_c(p, inner):
    """watson_a(ell, v) as a sum over i of watson_a(0, v) series with a -> q^(2 ell) a."""
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    v = p.v
    pref = F([Q(1 + l + n) * a, Q(1 + n) * sa], [Q(1 + l + 2 * n) * a, q * sa], l, q)
    total = ZERO
    for i in range(min(l, n) + 1):
        coef = (
            Q(2 * i) / sa**i
            * (1 - Q(1 + 2 * l + 2 * n - 2 * i) * a) / (1 - Q(1 + 2 * l + 2 * n) * a)
            * F([Q(-l), Q(-n), Q(-2 * l - 2 * n - 1) / a], [q, Q(-l - 2 * n) / a, Q(-2 * l - n) / a], i, q)
        )
        total += coef * inner(moved(p, alpha=R(2 * l) * sa, n=n - i, v=v))
    return pref * total


def equivalence_d(p, inner):
    """equation_a after a -> q^(-1-n) a."""
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1 - n) * sa
    total = ZERO
    for j in range(min(m, n) + 1):
        coef = Q(m * j + binom2(j + 1)) * sc**j * F(
            [Q(-m), Q(-n), a, sc, -sc],
            [q, s, -s, Q(m) * c, Q(j - 1) * c],
            j, q,
        )
        total += coef * inner(moved(p, alpha=R(2 * j - 1 - n) * sa, gamma=R(2 * j) * sc, n=n - j))
    return total


def jain_split_plus(p, inner):
    """watson_b(0, m) as a sum over j of shifted watson_b(0, 0) series (needs m <= n)."""
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1) * sa * sc
    total = ZERO
    for j in range(min(m, n) + 1):
        coef = Q((m - n) * j + binom2(j + 1)) * F(
            [Q(-m), Q(-n), -Q(-n), a, c],
            [q, s, -s, Q(m - 2 * n), Q(j - 2 * n - 1)],
            j, q,
        )
        total += coef * inner(moved(p, alpha=R(j) * sa, gamma=R(j) * sc, n=n - j))
    return total


def jain_split_minus(p, inner):
    """watson_b(0, -m) as a sum over j of shifted watson_b(0, 0) series."""
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = R(1) * sa * sc
    total = ZERO
    for j in range(m + 1):
        coef = (-1) ** j * Q(binom2(j + 1) - n * j) * F(
            [Q(-m), Q(-m - n), -Q(-m - n), a, c],
            [q, s, -s, Q(-m - 2 * n), Q(j - 2 * m - 2 * n - 1)],
            j, q,
        )
        total += coef * inner(moved(p, alpha=R(j) * sa, gamma=R(j) * sc, n=m + n - j))
    return total


def equation_aa(p, inner):
    """watson_b(ell, v) as a sum over i of watson_b(0, v) series."""
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    v = p.v
    pref = F([Q(l) * a, R(1) * sa / sc], [Q(l) * a / c, R(1) * sa * sc], l, q)
    total = ZERO
    for i in range(l + 1):
        coef = (
            R(5 * i) / (sa * sc) ** i
            * (1 - Q(2 * l - 2 * i) * a / c) / (1 - Q(2 * l) * a / c)
            * F([Q(-l), c, Q(-2 * l) * c / a], [q, Q(1 - 2 * l) / a, Q(1 - l) * c / a], i, q)
        )
        total += coef * inner(moved(p, alpha=R(2 * l - i) * sa, gamma=R(i) * sc, v=v))
    return pref * total


def dixon_relation_a(p, inner):
    """dixon_a(u, v) = prefactor * watson_a(u, -v) at sqrt(a) -> -q^-n/a, sqrt(c) -> c."""
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    u, v = p.u, p.v
    pref = F([-a, Q(-v) * c * c], [-a * c, Q(-v) * c], n, q)
    return pref * inner(moved(p, alpha=-R(-2 * n) / a, gamma=c, u=u, v=-v))


def dixon_relation_b(p, inner):
    """dixon_b(u, v) = prefactor * watson_b(u, -v) at a -> q^-u a, c -> q^(1+u) a/c^2."""
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    u, v = p.u, p.v
    pref = F([Q(1 + v + n), -q * a / c], [Q(1 + v + n) * a, -q / c], n, q)
    return pref * inner(moved(p, alpha=-R(-u) * sa, gamma=R(1 + u) * sa / c, u=u, v=-v))


def whipple_relation_a(p, inner):
    """whipple_a(u, v) = prefactor * watson_b(v, -u) at a -> q^-n a, c -> q^-n / c."""
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    u, v = p.u, p.v
    s = R(1) * sa / sc
    pref = F([Q(-n) * s, -Q(v - n) * s, Q(1 + n + u)], [Q(1 + u + v) * a, Q(-n) / c, -q], n, q)
    return pref * inner(moved(p, alpha=R(-n) * sa, gamma=R(-n) / sc, u=v, v=-u))


def whipple_relation_b(p, inner):
    """whipple_b(u, v) = prefactor * watson_b(-u, v) at a -> ac/q, c -> c/a."""
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    u, v = p.u, p.v
    pref = F([Q(1 - v + n), -Q(-u) * c], [Q(n - u - v) * c, -q], n, q)
    return pref * inner(moved(p, alpha=sa * sc / R(1), gamma=sc / sa, u=-u, v=v))
