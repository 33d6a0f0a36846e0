"""Short names used when transcribing closed forms.

``Q(e)`` is ``q**e`` and ``R(e)`` is ``q**(e/2)``; ``sa`` and ``sc`` are the
chosen square roots of ``a`` and ``c``.
"""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction
from typing import Callable, NamedTuple

from ..qalg import ParamPoint, binom2, chi, ffnk, qpoch

__all__ = ["Env", "env", "F", "P", "chi", "binom2", "moved"]


class Env(NamedTuple):
    q: Fraction
    a: Fraction
    c: Fraction
    sa: Fraction
    sc: Fraction
    n: int
    l: int
    m: int
    Q: Callable[[int], Fraction]
    R: Callable[[int], Fraction]
    q2: Fraction


def env(p: ParamPoint) -> Env:
    q = p.q
    rho = p.rho
    return Env(q, p.a, p.c, p.alpha, p.gamma, p.n, p.ell, p.m, q.__pow__, rho.__pow__, q * q)


def F(nums, dens, count: int, base: Fraction) -> Fraction:
    return ffnk(nums, dens, base, count)


def P(x: Fraction, count: int, base: Fraction) -> Fraction:
    return qpoch(x, base, count)


def moved(p: ParamPoint, *, alpha=None, gamma=None, n=None, u=0, v=0) -> ParamPoint:
    """A transformed point for an inner identity with signed extras ``u``, ``v``.

    ``ell`` and ``m`` of the result are ``|u|`` and ``|v|``.
    """
    return replace(
        p,
        alpha=p.alpha if alpha is None else alpha,
        gamma=p.gamma if gamma is None else gamma,
        n=p.n if n is None else n,
        ell=abs(u),
        m=abs(v),
        u=u,
        v=v,
    )
