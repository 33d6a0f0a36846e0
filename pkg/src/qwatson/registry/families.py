"""The six general 4phi3 series with signed integer shifts ``u`` and ``v``.

Every theorem, proposition and base formula has one of these as its left-hand
side with ``(u, v) = (±ell, ±m)``:

* ``watson_a``:  (q^-n, q^(1+u+n) a, √c, -q^v √c; q√a, -q^(1+u) √a, q^v c)
* ``watson_b``:  (q^u a, c, q^-n, -q^(v-n); √(qac), -q^u √(qac), q^(v-2n))
* ``dixon_a``:   (q^-n, a, c, -q^(1+u+v-n)/ac; q^(1+u-n)/a, q^(1+v-n)/c, -ac)
* ``dixon_b``:   (a, c, q^-n, -q^(1+u+v+n) a/c; q^(1+u) a/c, q^(1+v+n) a, -q^-n c)
* ``whipple_a``: (q^-n, q^(1+n+u), √(qac), -q^v √(qac); -q, q^(1+u+v) a, qc)
* ``whipple_b``: (a, q^(1+u)/a, q^-n, -q^(v-n); c, q^(1+u+v-2n)/c, -q)
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from ..qalg import HalfMonomial, ParamPoint, mono
from ..phi import build_phi, phi_sum

H = Fraction(1, 2)
Z_ARG = mono(q=1)

Series = tuple[list[HalfMonomial], list[HalfMonomial]]


def watson_a(p: ParamPoint) -> Series:
    n, u, v = p.n, p.u, p.v
    return (
        [mono(q=-n), mono(q=1 + u + n, a=1), mono(c=H), mono(-1, q=v, c=H)],
        [mono(q=1, a=H), mono(-1, q=1 + u, a=H), mono(q=v, c=1)],
    )


def watson_b(p: ParamPoint) -> Series:
    n, u, v = p.n, p.u, p.v
    return (
        [mono(q=u, a=1), mono(c=1), mono(q=-n), mono(-1, q=v - n)],
        [mono(q=H, a=H, c=H), mono(-1, q=u + H, a=H, c=H), mono(q=v - 2 * n)],
    )


def dixon_a(p: ParamPoint) -> Series:
    n, u, v = p.n, p.u, p.v
    return (
        [mono(q=-n), mono(a=1), mono(c=1), mono(-1, q=1 + u + v - n, a=-1, c=-1)],
        [mono(q=1 + u - n, a=-1), mono(q=1 + v - n, c=-1), mono(-1, a=1, c=1)],
    )


def dixon_b(p: ParamPoint) -> Series:
    n, u, v = p.n, p.u, p.v
    return (
        [mono(a=1), mono(c=1), mono(q=-n), mono(-1, q=1 + u + v + n, a=1, c=-1)],
        [mono(q=1 + u, a=1, c=-1), mono(q=1 + v + n, a=1), mono(-1, q=-n, c=1)],
    )


def whipple_a(p: ParamPoint) -> Series:
    n, u, v = p.n, p.u, p.v
    return (
        [mono(q=-n), mono(q=1 + n + u), mono(q=H, a=H, c=H), mono(-1, q=v + H, a=H, c=H)],
        [mono(-1, q=1), mono(q=1 + u + v, a=1), mono(q=1, c=1)],
    )


def whipple_b(p: ParamPoint) -> Series:
    n, u, v = p.n, p.u, p.v
    return (
        [mono(a=1), mono(q=1 + u, a=-1), mono(q=-n), mono(-1, q=v - n)],
        [mono(c=1), mono(q=1 + u + v - 2 * n, c=-1), mono(-1, q=1)],
    )


def series_value(builder: Callable[[ParamPoint], Series], p: ParamPoint) -> Fraction:
    nums, dens = builder(p)
    return phi_sum(build_phi(nums, dens, Z_ARG, p.n + 1, p), p.q)


def lhs_of(builder: Callable[[ParamPoint], Series]) -> Callable[[ParamPoint], Fraction]:
    """Evaluator for ``builder``'s series at whatever ``u``, ``v`` the point carries."""
    return lambda p: series_value(builder, p)
