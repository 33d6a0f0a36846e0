"""Worked special cases at small fixed ``ell`` and ``m``.

Left-hand sides are spelled out parameter by parameter rather than taken from
the general family builders, so each entry also cross-checks the builder.  The
derived value of an example is its parent's closed form at the same point.
"""

from __future__ import annotations

from fractions import Fraction

from ._notation import F, P, binom2, env
from .families import lhs_of
from .spec import IdentitySpec, cited
from ..qalg import mono

H = Fraction(1, 2)


def _lhs(make):
    """``make(n)`` returns the literal (numerators, denominators) monomial lists."""
    return lhs_of(lambda p: make(p.n))


# --- q-Watson type (sqrt parameters) -------------------------------------


def prop_a_m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = n // 2
    if n % 2 == 0:
        return c**s * F([q, q2 * a / c], [q2 * a, q * c], s, q2)
    return sc**n * F([q], [q * c], 1 + s, q2) * F([q2 * a / c], [q2 * a], s, q2)


def thm_a_l1m0(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = n // 2
    if n % 2 == 0:
        return (1 + q * sa) * c**s / (1 + Q(1 + 2 * s) * sa) * F([q, Q(4) * a / c], [q2 * a, q * c], s, q2)
    return (
        (q2 - q) * sa * c**s / ((1 - q * sa) * (1 + Q(2 + 2 * s) * sa))
        * F([Q(3), Q(4) * a / c], [Q(4) * a, q * c], s, q2)
    )


def thm_a_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = n // 2
    if n % 2 == 0:
        return (
            (1 + q * sa) * (sc + Q(1 + 2 * s) * sa) * c**s / ((sc + q * sa) * (1 + Q(1 + 2 * s) * sa))
            * F([q, q2 * a / c], [q2 * a, q * c], s, q2)
        )
    return (
        (1 - q) * (sc - q * sa) * (1 + Q(2 + 2 * s) * sa * sc) * c**s
        / ((1 - q * sa) * (1 - q * c) * (1 + Q(2 + 2 * s) * sa))
        * F([Q(3), Q(4) * a / c], [Q(4) * a, Q(3) * c], s, q2)
    )


def prop_b_m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return F([q * a, q * c], [q, q * a * c], n, q2) + Q(n) * F([a, c], [q, q * a * c], n, q2)


def prop_c_m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return F([q * a, q * c], [q, q * a * c], n + 1, q2) - Q(n + 1) * F([a, c], [q, q * a * c], n + 1, q2)


def thm_b_l1m0(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    root = R(1) * sa * sc
    return (
        (1 - q * a) / ((1 - root) * (1 + R(1) * sa / sc)) * F([Q(3) * a, q * c], [q, Q(3) * a * c], n, q2)
        + (1 - c) / ((1 - root) * (1 + sc / (R(1) * sa))) * F([q2 * a, q2 * c], [q, Q(3) * a * c], n, q2)
    )


def thm_b_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (1 - R(1) * sa * sc) * (1 + R(1) * sa / sc)
    top = 1 - R(1 + 2 * n) * sa * sc
    return (
        top * (1 + R(1 + 2 * n) * sa / sc) / den * F([q * a, q * c], [q, Q(3) * a * c], n, q2)
        + top * (Q(n) + R(1) * sa / sc) / den * F([q2 * a, c], [q, Q(3) * a * c], n, q2)
    )


def thm_c_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (1 - R(1) * sa * sc) * (1 + R(1) * sa / sc)
    top = 1 + R(3 + 2 * n) * sa * sc
    return (
        top * (1 - R(3 + 2 * n) * sa / sc) / den * F([q * a, q * c], [q, Q(3) * a * c], 1 + n, q2)
        - top * (Q(1 + n) - R(1) * sa / sc) / den * F([q2 * a, c], [q, Q(3) * a * c], 1 + n, q2)
    )


# --- q-Dixon type ---------------------------------------------------------


def thm_d_l0m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = n // 2
    if n % 2 == 0:
        return F([-a, c * c / q], [-a * c, c / q], 2 * s, q) * F(
            [q, Q(2 * s - 2) * a * a * c * c], [c * c / q, Q(2 * s) * a * a], s, q2
        )
    return (
        (q - 1) * c / (q - c * c) * F([-a, c * c / q], [-a * c, c / q], 1 + 2 * s, q)
        * F([Q(3), Q(2 * s) * a * a * c * c], [q * c * c, Q(2 + 2 * s) * a * a], s, q2)
    )


def thm_d_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = n // 2
    if n % 2 == 0:
        return (
            (q2 + a * c) * (q2 - Q(2 * s) * a * a) / ((q2 - a * a) * (q2 + Q(2 * s) * a * c))
            * F([-a / q, c * c / q], [-a * c, c / q], 2 * s, q)
            * F([q, Q(2 * s - 2) * a * a * c * c], [c * c / q, Q(2 * s - 2) * a * a], s, q2)
        )
    return (
        (a + c) * (q - 1) * (q - Q(2 * s) * a * c) / ((q2 - a * a) * (1 - c * c / q2))
        * F([-a / q, c * c / q2], [-a * c, c / q], 1 + 2 * s, q)
        * F([Q(3), Q(2 * s - 2) * a * a * c * c], [c * c / q, Q(2 * s) * a * a], s, q2)
    )


def thm_e_l0m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = n // 2
    if n % 2 == 0:
        return F([-a, q * c * c], [-a * c, q * c], 2 * s, q) * F(
            [q, Q(2 * s) * a * a * c * c], [q * c * c, Q(2 * s) * a * a], s, q2
        )
    return (
        (1 - q) * c / (1 - q * c * c) * F([-a, q * c * c], [-a * c, q * c], 1 + 2 * s, q)
        * F([Q(3), Q(2 + 2 * s) * a * a * c * c], [Q(3) * c * c, Q(2 + 2 * s) * a * a], s, q2)
    )


def thm_e_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = n // 2
    if n % 2 == 0:
        return (
            (q2 - a * a * c * c) * (1 - Q(2 * s - 2) * a * a) / ((q2 - a * a) * (1 - Q(2 * s - 2) * a * a * c * c))
            * F([-a / q, q * c * c], [-a * c / q, q * c], 2 * s, q)
            * F([q, Q(2 * s - 2) * a * a * c * c], [q * c * c, Q(2 * s - 2) * a * a], s, q2)
        )
    return (
        (1 - q) * (q * c - a) / ((q - a) * (1 - q * c))
        * F([-a, q * c * c], [-a * c, q2 * c], 2 * s, q)
        * F([Q(3), Q(2 * s) * a * a * c * c], [q * c * c, Q(2 * s) * a * a], s, q2)
    )


def thm_f_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    s = n // 2
    inner = [q, Q(2 * s + 2) * a * a * c * c], [q * c * c, Q(2 * s + 2) * a * a]
    if n % 2 == 0:
        return F([-q * a, q * c * c], [-q * a * c, q * c], 2 * s, q) * F(*inner, s, q2)
    return (a + c) / (1 + a * c) * F([-q * a, q * c * c], [-q * a * c, q * c], 1 + 2 * s, q) * F(*inner, 1 + s, q2)


def _second_dixon(p, shift):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    return F([Q(shift + n), -q * a / c], [Q(shift + n) * a, -q / c], n, q)


def thm_g_l0m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    d = q2 * a * a / (c * c)
    return _second_dixon(p, 2) * (
        F([q * a, q2 * a / (c * c)], [q, d], 1 + n, q2)
        - F([a, q * a / (c * c)], [q, d], 1 + n, q2) * Q(1 + n)
    )


def thm_g_l1m0(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (q * a + c) * (q - c)
    d = Q(4) * a * a / (c * c)
    return _second_dixon(p, 1) * (
        q * c * (1 - a) / den * F([q2 * a, Q(3) * a / (c * c)], [q, d], n, q2)
        + (q2 * a - c * c) / den * F([q * a, Q(4) * a / (c * c)], [q, d], n, q2)
    )


def thm_g_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (q * a + c) * (q - c)
    d = Q(4) * a * a / (c * c)
    return _second_dixon(p, 2) * (
        q * (1 + Q(n) * c) * (c - Q(2 + n) * a) / den * F([a, Q(3) * a / (c * c)], [q, d], 1 + n, q2)
        - (c + Q(2 + n)) * (c - Q(2 + n) * a) / den * F([q * a, q2 * a / (c * c)], [q, d], 1 + n, q2)
    )


def thm_h_l0m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    d = q2 * a * a / (c * c)
    return _second_dixon(p, 0) * (
        F([q * a, q2 * a / (c * c)], [q, d], n, q2) + F([a, q * a / (c * c)], [q, d], n, q2) * Q(n)
    )


def thm_h_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pre = F([Q(n), -q2 * a / c], [Q(n) * a, -q / c], n, q)
    d = Q(4) * a * a / (c * c)
    return pre * (
        (q - Q(n) * c) / (q - c) * F([a, Q(3) * a / (c * c)], [q, d], n, q2)
        + (Q(1 + n) - c) / (q - c) * F([q * a, q2 * a / (c * c)], [q, d], n, q2)
    )


def thm_i_l1m0(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (1 + c) * (c - a)
    d = q2 * a * a / (c * c)
    return _second_dixon(p, 1) * (
        (1 - a) * c / den * F([q2 * a, q * a / (c * c)], [q, d], n, q2)
        + (c * c - a) / den * F([q * a, q2 * a / (c * c)], [q, d], n, q2)
    )


def thm_i_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    pre = F([Q(2 + n), -q2 * a / c], [Q(2 + n) * a, -q / c], n, q)
    den = (1 + c) * (c - a)
    d = q2 * a * a / (c * c)
    return pre * (
        (q * a + c) * (1 - Q(1 + n) * c) / den * F([a, q * a / (c * c)], [q, d], 1 + n, q2)
        + (q * a + c) * (c - Q(1 + n)) / den * F([q * a, a / (c * c)], [q, d], 1 + n, q2)
    )


def thm_j_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    d = a * a / (c * c)
    return (
        F([Q(n), -a / c], [Q(n) * a, -1 / c], n, q) * F([q * a, a / (c * c)], [q, d], n, q2)
        + (1 + Q(n) * c) / (1 + c) * F([Q(n), -a / c], [Q(n) * a, -q / c], n, q)
        * F([a, q * a / (c * c)], [q, d], n, q2)
    )


# --- q-Whipple type -------------------------------------------------------


def thm_k_l0m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    base = Q(binom2(1 + n)) / (1 + R(1) * sa * sc) / (P(q2 * a, n, q) * P(q * c, n, q))
    return base * (
        P(Q(1 - n) * a, 1 + n, q2) * P(Q(1 - n) * c, n, q2) / (1 - R(1) * sa / sc)
        + P(Q(2 - n) * a, n, q2) * P(Q(-n) * c, 1 + n, q2) / (1 - sc / (R(1) * sa))
    )


def thm_k_l1m0(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    base = Q(binom2(2 + n)) / ((q * a - c) * (1 - Q(1 + n))) / (P(q2 * a, n, q) * P(q * c, n, q))
    return base * (
        P(Q(1 - n) * a, 1 + n, q2) * P(Q(-1 - n) * c, 1 + n, q2)
        - P(Q(-n) * a, 1 + n, q2) * P(Q(-n) * c, 1 + n, q2)
    )


def thm_k_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (R(1) * sa - sc) * (R(3) * sa - sc) * (1 + R(1) * sa * sc) * (1 - Q(1 + n))
    base = Q(binom2(2 + n)) / den / (P(Q(3) * a, n, q) * P(q * c, n, q))
    return base * (
        (1 - R(-1 - 2 * n) * sa * sc) * P(Q(2 - n) * a, 1 + n, q2) * P(Q(-n) * c, 1 + n, q2)
        - (1 - R(3 + 2 * n) * sa * sc) * P(Q(1 - n) * a, 1 + n, q2) * P(Q(-1 - n) * c, 1 + n, q2)
    )


def thm_l_l1m0(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    base = Q(binom2(1 + n)) / (1 + Q(n)) / (P(a, n, q) * P(q * c, n, q))
    return base * (
        P(Q(1 - n) * a, n, q2) * P(Q(1 - n) * c, n, q2)
        + P(Q(-n) * a, n, q2) * P(Q(2 - n) * c, n, q2)
    )


def thm_l_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    base = Q(binom2(1 + n)) / ((1 + Q(n)) * (1 + R(1) * sa * sc)) / (P(q * a, n, q) * P(q * c, n, q))
    return base * (
        (1 + R(1 + 2 * n) * sa * sc) * P(Q(1 - n) * a, n, q2) * P(Q(1 - n) * c, n, q2)
        + (1 + R(1 - 2 * n) * sa * sc) * P(Q(2 - n) * a, n, q2) * P(Q(2 - n) * c, n, q2)
    )


def thm_m_l0m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (1 + Q(n)) * P(c, n, q) * P(Q(n - 1) * c, n, q)
    return (
        P(a * c, n, q2) * P(q * c / a, n, q2)
        + Q(n) * P(a * c / q, n, q2) * P(c / a, n, q2)
    ) / den


def thm_m_l1m0(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (q - a) * (q2 - Q(2 * n) * c * c) * P(c / q, 2 * n, q)
    return (
        (q - c) * (q2 - a * c) * P(a * c, n, q2) * P(q * c / a, n, q2)
        + q * (q - c) * (c - a) * P(a * c / q, n, q2) * P(q2 * c / a, n, q2)
    ) / den


def thm_m_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (q - a) * (1 + Q(n)) * P(c, n, q) * P(Q(n - 2) * c, n, q)
    return (
        (q - Q(n) * a) * P(a * c / q2, n, q2) * P(q * c / a, n, q2)
        + (Q(1 + n) - a) * P(a * c / q, n, q2) * P(c / a, n, q2)
    ) / den


def thm_n_l0m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (1 - Q(1 + n)) * (1 + Q(n) * c) * P(c, 1 + 2 * n, q)
    return (
        P(a * c, 1 + n, q2) * P(q * c / a, 1 + n, q2)
        - Q(1 + n) * P(a * c / q, 1 + n, q2) * P(c / a, 1 + n, q2)
    ) / den


def thm_n_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (q - a) * (1 + Q(n) * c) * (q + Q(n) * c) * (1 - Q(1 + n)) * P(c, 2 * n, q)
    return (
        q2 * (1 + Q(n) * a) * P(a * c / q2, 1 + n, q2) * P(q * c / a, 1 + n, q2)
        - q * (a + Q(2 + n)) * P(a * c / q, 1 + n, q2) * P(c / a, 1 + n, q2)
    ) / den


def thm_o_l1m0(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (1 + a) * P(c, 1 + 2 * n, q)
    return (
        (1 - a * c) * P(q2 * a * c, n, q2) * P(q * c / a, n, q2)
        + (a - c) * P(q * a * c, n, q2) * P(q2 * c / a, n, q2)
    ) / den


def thm_o_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (1 + a) * (1 + Q(n)) * P(c, 2 * n, q)
    return (
        (1 + a * Q(n)) * P(a * c, n, q2) * P(q * c / a, n, q2)
        + (a + Q(n)) * P(q * a * c, n, q2) * P(c / a, n, q2)
    ) / den


def thm_p_l1m1(p):
    q, a, c, sa, sc, n, l, m, Q, R, q2 = env(p)
    den = (1 + a) * (1 - Q(1 + n)) * P(c, 2 + 2 * n, q)
    return (
        (1 - a * Q(1 + n)) * P(a * c, 1 + n, q2) * P(q * c / a, 1 + n, q2)
        + (a - Q(1 + n)) * P(q * a * c, 1 + n, q2) * P(c / a, 1 + n, q2)
    ) / den


# --- literal left-hand sides ----------------------------------------------
# Each tuple: (id, parent, ell, m, n_min, lhs parameters, closed form)

_W = mono  # short alias keeps the parameter tables readable

_TABLE = [
    ("prop-a-ex-m1", "prop-a", 0, 1, 0,
     lambda n: ([_W(q=-n), _W(q=1 + n, a=1), _W(c=H), _W(-1, q=1, c=H)],
                [_W(q=1, a=H), _W(-1, q=1, a=H), _W(q=1, c=1)]), prop_a_m1),
    ("thm-a-ex-l1m0", "thm-a", 1, 0, 0,
     lambda n: ([_W(q=-n), _W(q=2 + n, a=1), _W(c=H), _W(-1, c=H)],
                [_W(q=1, a=H), _W(-1, q=2, a=H), _W(c=1)]), thm_a_l1m0),
    ("thm-a-ex-l1m1", "thm-a", 1, 1, 0,
     lambda n: ([_W(q=-n), _W(q=2 + n, a=1), _W(c=H), _W(-1, q=1, c=H)],
                [_W(q=1, a=H), _W(-1, q=2, a=H), _W(q=1, c=1)]), thm_a_l1m1),
    ("prop-b-ex-m1", "prop-b", 0, 1, 1,
     lambda n: ([_W(a=1), _W(c=1), _W(q=-n), _W(-1, q=1 - n)],
                [_W(q=H, a=H, c=H), _W(-1, q=H, a=H, c=H), _W(q=1 - 2 * n)]), prop_b_m1),
    ("prop-c-ex-m1", "prop-c", 0, 1, 0,
     lambda n: ([_W(a=1), _W(c=1), _W(q=-n), _W(-1, q=-1 - n)],
                [_W(q=H, a=H, c=H), _W(-1, q=H, a=H, c=H), _W(q=-1 - 2 * n)]), prop_c_m1),
    ("thm-b-ex-l1m0", "thm-b", 1, 0, 0,
     lambda n: ([_W(q=1, a=1), _W(c=1), _W(q=-n), _W(-1, q=-n)],
                [_W(q=H, a=H, c=H), _W(-1, q=3 * H, a=H, c=H), _W(q=-2 * n)]), thm_b_l1m0),
    ("thm-b-ex-l1m1", "thm-b", 1, 1, 1,
     lambda n: ([_W(q=1, a=1), _W(c=1), _W(q=-n), _W(-1, q=1 - n)],
                [_W(q=H, a=H, c=H), _W(-1, q=3 * H, a=H, c=H), _W(q=1 - 2 * n)]), thm_b_l1m1),
    ("thm-c-ex-l1m1", "thm-c", 1, 1, 0,
     lambda n: ([_W(q=1, a=1), _W(c=1), _W(q=-n), _W(-1, q=-1 - n)],
                [_W(q=H, a=H, c=H), _W(-1, q=3 * H, a=H, c=H), _W(q=-1 - 2 * n)]), thm_c_l1m1),
    ("thm-d-ex-l0m1", "thm-d", 0, 1, 0,
     lambda n: ([_W(q=-n), _W(a=1), _W(c=1), _W(-1, q=2 - n, a=-1, c=-1)],
                [_W(q=1 - n, a=-1), _W(q=2 - n, c=-1), _W(-1, a=1, c=1)]), thm_d_l0m1),
    ("thm-d-ex-l1m1", "thm-d", 1, 1, 0,
     lambda n: ([_W(q=-n), _W(a=1), _W(c=1), _W(-1, q=3 - n, a=-1, c=-1)],
                [_W(q=2 - n, a=-1), _W(q=2 - n, c=-1), _W(-1, a=1, c=1)]), thm_d_l1m1),
    ("thm-e-ex-l0m1", "thm-e", 0, 1, 0,
     lambda n: ([_W(q=-n), _W(a=1), _W(c=1), _W(-1, q=-n, a=-1, c=-1)],
                [_W(q=1 - n, a=-1), _W(q=-n, c=-1), _W(-1, a=1, c=1)]), thm_e_l0m1),
    ("thm-e-ex-l1m1", "thm-e", 1, 1, 0,
     lambda n: ([_W(q=-n), _W(a=1), _W(c=1), _W(-1, q=1 - n, a=-1, c=-1)],
                [_W(q=2 - n, a=-1), _W(q=-n, c=-1), _W(-1, a=1, c=1)]), thm_e_l1m1),
    ("thm-f-ex-l1m1", "thm-f", 1, 1, 0,
     lambda n: ([_W(q=-n), _W(a=1), _W(c=1), _W(-1, q=-1 - n, a=-1, c=-1)],
                [_W(q=-n, a=-1), _W(q=-n, c=-1), _W(-1, a=1, c=1)]), thm_f_l1m1),
    ("thm-g-ex-l0m1", "thm-g", 0, 1, 0,
     lambda n: ([_W(a=1), _W(c=1), _W(q=-n), _W(-1, q=2 + n, a=1, c=-1)],
                [_W(q=1, a=1, c=-1), _W(q=2 + n, a=1), _W(-1, q=-n, c=1)]), thm_g_l0m1),
    ("thm-g-ex-l1m0", "thm-g", 1, 0, 0,
     lambda n: ([_W(a=1), _W(c=1), _W(q=-n), _W(-1, q=2 + n, a=1, c=-1)],
                [_W(q=2, a=1, c=-1), _W(q=1 + n, a=1), _W(-1, q=-n, c=1)]), thm_g_l1m0),
    ("thm-g-ex-l1m1", "thm-g", 1, 1, 0,
     lambda n: ([_W(a=1), _W(c=1), _W(q=-n), _W(-1, q=3 + n, a=1, c=-1)],
                [_W(q=2, a=1, c=-1), _W(q=2 + n, a=1), _W(-1, q=-n, c=1)]), thm_g_l1m1),
    ("thm-h-ex-l0m1", "thm-h", 0, 1, 1,
     lambda n: ([_W(a=1), _W(c=1), _W(q=-n), _W(-1, q=n, a=1, c=-1)],
                [_W(q=1, a=1, c=-1), _W(q=n, a=1), _W(-1, q=-n, c=1)]), thm_h_l0m1),
    ("thm-h-ex-l1m1", "thm-h", 1, 1, 1,
     lambda n: ([_W(a=1), _W(c=1), _W(q=-n), _W(-1, q=1 + n, a=1, c=-1)],
                [_W(q=2, a=1, c=-1), _W(q=n, a=1), _W(-1, q=-n, c=1)]), thm_h_l1m1),
    ("thm-i-ex-l1m0", "thm-i", 1, 0, 0,
     lambda n: ([_W(a=1), _W(c=1), _W(q=-n), _W(-1, q=n, a=1, c=-1)],
                [_W(a=1, c=-1), _W(q=1 + n, a=1), _W(-1, q=-n, c=1)]), thm_i_l1m0),
    ("thm-i-ex-l1m1", "thm-i", 1, 1, 0,
     lambda n: ([_W(a=1), _W(c=1), _W(q=-n), _W(-1, q=1 + n, a=1, c=-1)],
                [_W(a=1, c=-1), _W(q=2 + n, a=1), _W(-1, q=-n, c=1)]), thm_i_l1m1),
    ("thm-j-ex-l1m1", "thm-j", 1, 1, 1,
     lambda n: ([_W(a=1), _W(c=1), _W(q=-n), _W(-1, q=n - 1, a=1, c=-1)],
                [_W(a=1, c=-1), _W(q=n, a=1), _W(-1, q=-n, c=1)]), thm_j_l1m1),
    ("thm-k-ex-l0m1", "thm-k", 0, 1, 0,
     lambda n: ([_W(q=-n), _W(q=1 + n), _W(q=H, a=H, c=H), _W(-1, q=3 * H, a=H, c=H)],
                [_W(-1, q=1), _W(q=2, a=1), _W(q=1, c=1)]), thm_k_l0m1),
    ("thm-k-ex-l1m0", "thm-k", 1, 0, 0,
     lambda n: ([_W(q=-n), _W(q=2 + n), _W(q=H, a=H, c=H), _W(-1, q=H, a=H, c=H)],
                [_W(-1, q=1), _W(q=2, a=1), _W(q=1, c=1)]), thm_k_l1m0),
    ("thm-k-ex-l1m1", "thm-k", 1, 1, 0,
     lambda n: ([_W(q=-n), _W(q=2 + n), _W(q=H, a=H, c=H), _W(-1, q=3 * H, a=H, c=H)],
                [_W(-1, q=1), _W(q=3, a=1), _W(q=1, c=1)]), thm_k_l1m1),
    ("thm-l-ex-l1m0", "thm-l", 1, 0, 0,
     lambda n: ([_W(q=-n), _W(q=n), _W(q=H, a=H, c=H), _W(-1, q=H, a=H, c=H)],
                [_W(-1, q=1), _W(a=1), _W(q=1, c=1)]), thm_l_l1m0),
    ("thm-l-ex-l1m1", "thm-l", 1, 1, 0,
     lambda n: ([_W(q=-n), _W(q=n), _W(q=H, a=H, c=H), _W(-1, q=3 * H, a=H, c=H)],
                [_W(-1, q=1), _W(q=1, a=1), _W(q=1, c=1)]), thm_l_l1m1),
    ("thm-m-ex-l0m1", "thm-m", 0, 1, 0,
     lambda n: ([_W(a=1), _W(q=1, a=-1), _W(q=-n), _W(-1, q=1 - n)],
                [_W(c=1), _W(q=2 - 2 * n, c=-1), _W(-1, q=1)]), thm_m_l0m1),
    ("thm-m-ex-l1m0", "thm-m", 1, 0, 0,
     lambda n: ([_W(a=1), _W(q=2, a=-1), _W(q=-n), _W(-1, q=-n)],
                [_W(c=1), _W(q=2 - 2 * n, c=-1), _W(-1, q=1)]), thm_m_l1m0),
    ("thm-m-ex-l1m1", "thm-m", 1, 1, 0,
     lambda n: ([_W(a=1), _W(q=2, a=-1), _W(q=-n), _W(-1, q=1 - n)],
                [_W(c=1), _W(q=3 - 2 * n, c=-1), _W(-1, q=1)]), thm_m_l1m1),
    ("thm-n-ex-l0m1", "thm-n", 0, 1, 0,
     lambda n: ([_W(a=1), _W(q=1, a=-1), _W(q=-n), _W(-1, q=-1 - n)],
                [_W(c=1), _W(q=-2 * n, c=-1), _W(-1, q=1)]), thm_n_l0m1),
    ("thm-n-ex-l1m1", "thm-n", 1, 1, 0,
     lambda n: ([_W(a=1), _W(q=2, a=-1), _W(q=-n), _W(-1, q=-1 - n)],
                [_W(c=1), _W(q=1 - 2 * n, c=-1), _W(-1, q=1)]), thm_n_l1m1),
    ("thm-o-ex-l1m0", "thm-o", 1, 0, 0,
     lambda n: ([_W(a=1), _W(a=-1), _W(q=-n), _W(-1, q=-n)],
                [_W(c=1), _W(q=-2 * n, c=-1), _W(-1, q=1)]), thm_o_l1m0),
    ("thm-o-ex-l1m1", "thm-o", 1, 1, 0,
     lambda n: ([_W(a=1), _W(a=-1), _W(q=-n), _W(-1, q=1 - n)],
                [_W(c=1), _W(q=1 - 2 * n, c=-1), _W(-1, q=1)]), thm_o_l1m1),
    ("thm-p-ex-l1m1", "thm-p", 1, 1, 0,
     lambda n: ([_W(a=1), _W(a=-1), _W(q=-n), _W(-1, q=-1 - n)],
                [_W(c=1), _W(q=-1 - 2 * n, c=-1), _W(-1, q=1)]), thm_p_l1m1),
]


def build_entries(parents):
    """Example specs; ``parents`` maps parent id to its spec (for signs and side conditions)."""
    out = []
    for order, (ident, parent, ell, m, n_min, params, closed) in enumerate(_TABLE):
        ps = parents[parent]
        label = f"Example: ell={ell}, m={m} in {parent}" + (", n >= 1" if n_min else "")
        out.append(
            IdentitySpec(
                ident, label, "example",
                lhs=_lhs(params), rhs_closed=closed, rhs_derived=cited(parent),
                signs=ps.signs, ell_fixed=ell, m_fixed=m,
                m_le_n=ps.m_le_n, ell_le_n=ps.ell_le_n, n_min=n_min,
                parent=parent, order=ps.order + 1 + order,
            )
        )
    return out
