from fractions import Fraction

import pytest

from qwatson.qalg import HalfMonomial, ParamPoint, binom2, chi, eval_half_monomial, ffnk, mono, qpoch
from qwatson.scalar import PoleError

from properties import check_monomial_multiplicativity, check_splitting_law

half = Fraction(1, 2)


def test_qpoch_empty_product():
    assert qpoch(Fraction(7, 3), half, 0) == 1


def test_qpoch_with_unit_start_vanishes():
    assert all(qpoch(Fraction(1), half, n) == 0 for n in range(1, 5))


def test_qpoch_two_factors():
    assert qpoch(half, Fraction(1, 3), 2) == Fraction(5, 12)


def test_qpoch_rejects_negative_length():
    with pytest.raises(ValueError):
        qpoch(half, half, -1)


def test_ffnk_single_factor():
    assert ffnk([Fraction(2)], [Fraction(3)], half, 1) == half


def test_ffnk_identical_lists_cancel():
    items = [Fraction(2, 3), Fraction(-5, 2)]
    assert ffnk(items, items, Fraction(1, 3), 4) == 1


def test_ffnk_empty_denominator_is_qpoch():
    x = Fraction(3, 5)
    assert ffnk([x], [], half, 3) == qpoch(x, half, 3)


def test_ffnk_pole_names_index_and_step():
    # 1 - 4 * (1/2)^2 = 0 at the third factor
    with pytest.raises(PoleError) as info:
        ffnk([Fraction(1, 3)], [Fraction(3), Fraction(4)], half, 3)
    assert "#1" in str(info.value) and "k=2" in str(info.value)


def test_chi():
    assert (chi(0), chi(1), chi(-3)) == (1, 0, 0)
    for n in range(-10, 11):
        assert chi(n) * chi(n + 1) == 0
        assert chi(n) + chi(n + 1) == 1


def test_binom2():
    assert [binom2(j) for j in range(5)] == [0, 0, 1, 3, 6]
    assert [binom2(j + 1) for j in range(4)] == [0, 1, 3, 6]


@pytest.mark.parametrize(
    "mon, point, value",
    [
        (HalfMonomial(1, 1, 1, 1), (half, 2, 3), 3),
        (HalfMonomial(1, 0, 0, 4), (half, 2, 3), 81),
        (HalfMonomial(-1, -2, 1, 0), (half, 2, 3), -8),
    ],
)
def test_monomial_examples(mon, point, value):
    assert eval_half_monomial(mon, ParamPoint(*point)) == value


def test_mono_takes_half_integer_powers_of_q_a_c():
    # sqrt(qac) / q^(3/2)
    m = mono(q=Fraction(-1), a=half, c=half)
    assert (m.sign, m.e_rho, m.e_alpha, m.e_gamma) == (1, -2, 1, 1)
    with pytest.raises(ValueError):
        mono(q=Fraction(1, 3))


def test_point_derives_squares():
    p = ParamPoint(Fraction(-1, 2), Fraction(2, 3), Fraction(3))
    assert (p.q, p.a, p.c) == (Fraction(1, 4), Fraction(4, 9), 9)


@pytest.mark.parametrize("rho, alpha, gamma", [(0, 2, 3), (1, 2, 3), (-1, 2, 3), (half, 0, 3), (half, 2, 0)])
def test_point_rejects_degenerate_values(rho, alpha, gamma):
    with pytest.raises(ValueError):
        ParamPoint(Fraction(rho), Fraction(alpha), Fraction(gamma))


def test_point_rejects_negative_orders():
    with pytest.raises(ValueError):
        ParamPoint(half, Fraction(2), Fraction(3), n=-1)


def test_base_q_squared_pochhammer_matches_direct_product():
    rho = Fraction(2, 3)
    q2 = rho**4
    x = Fraction(-3, 5)
    for n in range(9):
        direct = Fraction(1)
        for k in range(n):
            direct *= 1 - x * rho ** (4 * k)
        assert qpoch(x, q2, n) == direct


def test_splitting_law():
    check_splitting_law(1000)()


def test_monomial_multiplicativity():
    check_monomial_multiplicativity(1000)()
