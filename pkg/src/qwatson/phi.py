"""Terminating basic hypergeometric series.

The ``(q; q)_k`` factor is always implicit: callers never list ``q`` among the
denominator parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .qalg import HalfMonomial, ParamPoint, eval_half_monomial, qpoch
from .scalar import ONE, ZERO, PoleError, fmt


@dataclass(frozen=True)
class PhiSeries:
    numerator_params: tuple[Fraction, ...]
    denominator_params: tuple[Fraction, ...]
    argument: Fraction
    term_count: int


def phi_sum(series: PhiSeries, base: Fraction) -> Fraction:
    """Sum the first ``term_count`` terms using the term ratio ``t[k+1]/t[k]``.

    Once a numerator factor vanishes the remaining terms are zero, but their
    denominators are still checked: a later vanishing denominator makes the
    series 0/0 at this point, which is reported as a pole.
    """
    if base == 0:
        raise PoleError("phi_sum: base is zero")
    nums = series.numerator_params
    dens = series.denominator_params
    z = series.argument
    total = ZERO
    term = ONE
    num_pows = [Fraction(x) for x in nums]
    den_pows = [Fraction(d) for d in dens]
    qk = ONE
    for k in range(series.term_count):
        total += term
        if k + 1 == series.term_count:
            break
        # ratio t[k+1]/t[k] = prod(1 - x q^k) / ((1 - q^{k+1}) prod(1 - d q^k)) * z
        top = z if term else ZERO
        for idx, x in enumerate(num_pows):
            top *= 1 - x
            num_pows[idx] = x * base
        qk *= base
        bottom = 1 - qk
        if bottom == 0:
            raise PoleError(f"(q;q)_{k + 1} vanishes")
        for idx, d in enumerate(den_pows):
            f = 1 - d
            if f == 0:
                raise PoleError(f"denominator parameter #{idx} = {fmt(dens[idx])} vanishes at k={k}")
            bottom *= f
            den_pows[idx] = d * base
        term = term * top / bottom if top else ZERO
    return total


def phi_sum_naive(series: PhiSeries, base: Fraction) -> Fraction:
    """Independent per-term evaluation: every term rebuilt from Pochhammer products."""
    total = ZERO
    for k in range(series.term_count):
        top = ONE
        for x in series.numerator_params:
            top *= qpoch(x, base, k)
        bottom = qpoch(base, base, k)
        for d in series.denominator_params:
            bottom *= qpoch(d, base, k)
        if bottom == 0:
            raise PoleError(f"naive term k={k} has a vanishing denominator")
        total += top / bottom * series.argument ** k
    return total


def build_phi(
    monomial_numerators: Sequence[HalfMonomial],
    monomial_denominators: Sequence[HalfMonomial],
    argument: HalfMonomial,
    term_count: int,
    p: ParamPoint,
) -> PhiSeries:
    return PhiSeries(
        tuple(eval_half_monomial(x, p) for x in monomial_numerators),
        tuple(eval_half_monomial(d, p) for d in monomial_denominators),
        eval_half_monomial(argument, p),
        term_count,
    )
