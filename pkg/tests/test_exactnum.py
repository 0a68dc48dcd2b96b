from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairwalk.errors import NonPositiveDiscriminant
from pairwalk.exactnum import QF, ExactScalar, ExactTime, PhaseFactor, squarefree_kernel


def test_squarefree_kernel_examples():
    assert squarefree_kernel(8) == (2, 2)
    assert squarefree_kernel(5) == (5, 1)
    assert squarefree_kernel(36) == (1, 6)
    assert squarefree_kernel(1) == (1, 1)
    with pytest.raises(NonPositiveDiscriminant):
        squarefree_kernel(0)
    with pytest.raises(NonPositiveDiscriminant):
        squarefree_kernel(-4)


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=10**9))
def test_squarefree_kernel_reconstructs(d):
    delta, k = squarefree_kernel(d)
    assert k * k * delta == d
    for p in range(2, 40):
        assert delta % (p * p) != 0


def test_scalar_construction_and_value():
    five = ExactScalar.integer(5)
    assert five.is_integer and five.as_int == 5 and five.value == 5.0
    phi = ExactScalar.quadratic(1, 1, 5)  # (1+sqrt5)/2
    assert abs(phi.value - 1.618033988749895) < 1e-15
    rt2 = ExactScalar.quadratic(0, 2, 2)  # sqrt(2)
    assert abs(rt2.value - 2**0.5) < 1e-15
    with pytest.raises(ValueError):
        ExactScalar.quadratic(1, 2, 5)  # parity violation for delta = 1 mod 4
    with pytest.raises(ValueError):
        ExactScalar.quadratic(1, 1, 2)  # needs both even for delta = 2 mod 4
    with pytest.raises(ValueError):
        ExactScalar.quadratic(0, 2, 4)  # 4 is not square-free


def test_scalar_ordering_exact():
    a = ExactScalar.quadratic(1, 1, 5)    # ~1.618
    b = ExactScalar.quadratic(3, -1, 5)   # ~0.382
    c = ExactScalar.integer(1)
    assert b < c < a
    assert sorted([a, b, c]) == [b, c, a]
    assert a.diff_in_field(b) == (-2, 2, 5)
    assert a.diff_in_field(ExactScalar.quadratic(0, 2, 2)) is None


def test_scalar_strings():
    assert str(ExactScalar.integer(-3)) == "-3"
    assert str(ExactScalar.quadratic(1, 1, 5)) == "(1+1*sqrt(5))/2"


def test_qf_field_arithmetic():
    x = QF(Fraction(1), Fraction(1), 5)
    y = QF(Fraction(2), Fraction(-1), 5)
    assert float(x * y) == pytest.approx(float(x) * float(y))
    assert (x * x.inverse()) == 1
    assert x.conj().conj() == x
    with pytest.raises(ZeroDivisionError):
        QF(Fraction(0), Fraction(0), 5).inverse()


def test_exact_time_rendering_and_ratio():
    assert str(ExactTime(Fraction(1, 2))) == "pi/2"
    assert str(ExactTime(Fraction(3, 4))) == "3*pi/4"
    assert str(ExactTime(Fraction(2))) == "2*pi"
    assert str(ExactTime(Fraction(1), 5)) == "pi/sqrt(5)"
    assert str(ExactTime(Fraction(1, 2), 2)) == "pi/(2*sqrt(2))"
    assert ExactTime(Fraction(3, 2)).ratio(ExactTime(Fraction(1, 2))) == 3
    assert ExactTime(Fraction(1, 2)).ratio(ExactTime(Fraction(1, 2), 5)) is None
    assert ExactTime(Fraction(1, 2)).value == pytest.approx(3.141592653589793 / 2)


def test_phase_factor_roots_of_unity():
    tau = ExactTime(Fraction(1, 2))
    minus_i = PhaseFactor.from_theta_time(ExactScalar.integer(1), tau)
    assert minus_i.exponent == Fraction(1, 2)
    assert minus_i.exact_str() == "-i"
    assert minus_i.order() == 4
    assert minus_i.complex_value == pytest.approx(-1j)
    one = PhaseFactor.from_theta_time(ExactScalar.integer(4), tau)
    assert one.exact_str() == "1" and one.order() == 1
    minus_one = PhaseFactor.from_theta_time(ExactScalar.integer(2), tau)
    assert minus_one.exact_str() == "-1" and minus_one.order() == 2
    # products and inverses
    assert (minus_i * minus_i).exact_str() == "-1"
    assert (minus_i**3).exact_str() == "i"
    assert (minus_i * minus_i.inverse()).exact_str() == "1"


def test_phase_factor_negate_and_ratio():
    tau = ExactTime(Fraction(1, 2))
    p = PhaseFactor.from_theta_time(ExactScalar.integer(2), tau)          # -1
    q = PhaseFactor.from_theta_time(ExactScalar.integer(2), tau, negate=True)  # +1
    assert q.exact_str() == "1"
    assert p.ratio_exponent(q) == Fraction(1)
    assert p.ratio_exponent(p) == Fraction(0)


def test_phase_factor_irrational_exponent():
    # theta = sqrt(2), time = pi/2: t*theta/pi irrational
    tau = ExactTime(Fraction(1, 2))
    ph = PhaseFactor.from_theta_time(ExactScalar.quadratic(0, 2, 2), tau)
    assert ph.exponent is None
    assert ph.order() is None
    assert abs(abs(ph.complex_value) - 1) < 1e-15
    # same field in the time makes it rational again
    tau2 = ExactTime(Fraction(1, 2), 2)
    ph2 = PhaseFactor.from_theta_time(ExactScalar.quadratic(0, 2, 2), tau2)
    assert ph2.exponent == Fraction(1, 2)
    # exact ratio via the (theta, time) route even when one side is irrational
    a = PhaseFactor.from_theta_time(ExactScalar.quadratic(1, 1, 5), tau)
    b = PhaseFactor.from_theta_time(ExactScalar.quadratic(1, 1, 5), tau)
    assert a.ratio_exponent(b) == Fraction(0)
    c = PhaseFactor.from_theta_time(ExactScalar.quadratic(3, 1, 5), tau)
    # difference (3+sqrt5)/2 - (1+sqrt5)/2 = 1; t*1/pi = 1/2 -> ratio known
    assert c.ratio_exponent(a) == Fraction(1, 2)


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=-4, max_value=4, max_denominator=12))
def test_phase_exponent_matches_complex(x):
    ph = PhaseFactor.from_exponent(x)
    import cmath, math

    assert ph.complex_value == pytest.approx(cmath.exp(-1j * math.pi * float(x)))
    p = ph.order()
    if x != 0:
        assert p is not None
        assert (ph**p).exact_str() == "1"
        for k in range(1, p):
            assert (ph**k).exact_str() != "1"
