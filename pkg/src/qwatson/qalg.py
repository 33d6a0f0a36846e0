"""q-shifted factorials, fraction brackets and the half-power basis.

Points are expressed through square roots: ``rho = sqrt(q)``, ``alpha = sqrt(a)``,
``gamma = sqrt(c)``.  Every radical that shows up in a parameter list is then a
signed monomial in ``(rho, alpha, gamma)`` with integer exponents, so evaluation
stays inside the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalar import ONE, PoleError, fmt


@dataclass(frozen=True)
class ParamPoint:
    rho: Fraction
    alpha: Fraction
    gamma: Fraction
    n: int = 0
    ell: int = 0
    m: int = 0
    u: int = 0
    v: int = 0

    def __post_init__(self):
        for name in ("rho", "alpha", "gamma"):
            val = getattr(self, name)
            if not isinstance(val, Fraction):
                object.__setattr__(self, name, Fraction(val))
        if self.rho == 0 or self.alpha == 0 or self.gamma == 0:
            raise ValueError("rho, alpha and gamma must be nonzero")
        if self.rho * self.rho == 1:
            raise ValueError("q = rho**2 must differ from 1")
        if min(self.n, self.ell, self.m) < 0:
            raise ValueError("n, ell and m must be nonnegative")

    @property
    def q(self) -> Fraction:
        return self.rho * self.rho

    @property
    def a(self) -> Fraction:
        return self.alpha * self.alpha

    @property
    def c(self) -> Fraction:
        return self.gamma * self.gamma

    def as_dict(self) -> dict:
        return {
            "rho": fmt(self.rho),
            "alpha": fmt(self.alpha),
            "gamma": fmt(self.gamma),
            "q": fmt(self.q),
            "a": fmt(self.a),
            "c": fmt(self.c),
            "n": self.n,
            "ell": self.ell,
            "m": self.m,
            "u": self.u,
            "v": self.v,
        }


@dataclass(frozen=True)
class HalfMonomial:
    """``sign * rho**e_rho * alpha**e_alpha * gamma**e_gamma``.

    Equivalently ``sign * q**(e_rho/2) * a**(e_alpha/2) * c**(e_gamma/2)``.
    """

    sign: int = 1
    e_rho: int = 0
    e_alpha: int = 0
    e_gamma: int = 0

    def __mul__(self, other: HalfMonomial) -> HalfMonomial:
        return HalfMonomial(
            self.sign * other.sign,
            self.e_rho + other.e_rho,
            self.e_alpha + other.e_alpha,
            self.e_gamma + other.e_gamma,
        )

    def __neg__(self) -> HalfMonomial:
        return HalfMonomial(-self.sign, self.e_rho, self.e_alpha, self.e_gamma)

    def __str__(self) -> str:
        parts = []
        for sym, e in (("q", self.e_rho), ("a", self.e_alpha), ("c", self.e_gamma)):
            if e == 0:
                continue
            ex = Fraction(e, 2)
            parts.append(sym if ex == 1 else f"{sym}^({ex})")
        body = "*".join(parts) or "1"
        return ("-" if self.sign < 0 else "") + body


def mono(sign: int = 1, q: int | Fraction = 0, a: int | Fraction = 0, c: int | Fraction = 0) -> HalfMonomial:
    """Build ``sign * q**q * a**a * c**c`` where exponents may be half-integers."""
    exps = []
    for e in (q, a, c):
        twice = Fraction(e) * 2
        if twice.denominator != 1:
            raise ValueError(f"exponent {e} is not a half-integer")
        exps.append(int(twice))
    return HalfMonomial(sign, *exps)


def eval_half_monomial(mon: HalfMonomial, p: ParamPoint) -> Fraction:
    return mon.sign * p.rho ** mon.e_rho * p.alpha ** mon.e_alpha * p.gamma ** mon.e_gamma


def qpoch(x: Fraction, base: Fraction, count: int) -> Fraction:
    """``(x; base)_count``, the product of ``1 - x*base**k`` for ``k < count``."""
    if count < 0:
        raise ValueError(f"negative Pochhammer length {count}")
    out = ONE
    t = Fraction(x)
    for _ in range(count):
        out *= 1 - t
        t *= base
    return out


def ffnk(
    numerators: Sequence[Fraction],
    denominators: Sequence[Fraction],
    base: Fraction,
    count: int,
) -> Fraction:
    """Ratio of Pochhammer products, all of length ``count``."""
    if count < 0:
        raise ValueError(f"negative Pochhammer length {count}")
    num = ONE
    for x in numerators:
        num *= qpoch(x, base, count)
    den = ONE
    for idx, d in enumerate(denominators):
        t = Fraction(d)
        for k in range(count):
            f = 1 - t
            if f == 0:
                raise PoleError(f"denominator #{idx} ({fmt(d)}; {fmt(base)})_{count} vanishes at k={k}")
            den *= f
            t *= base
    return num / den


def chi(n: int) -> int:
    return 1 if n % 2 == 0 else 0


def binom2(j: int) -> int:
    """``binom(j, 2) = j(j-1)/2``; ``binom2(j + 1)`` gives ``binom(j+1, 2)``."""
    return j * (j - 1) // 2
