import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobifn.errors import PoleError, UndefinedError
from jacobifn.scalar_kernel import (
    binomial,
    gamma,
    log_gamma,
    pochhammer,
    pochhammer_product,
    reciprocal_gamma,
)

finite_complex = st.builds(
    complex,
    st.floats(-20, 20, allow_nan=False),
    st.floats(-10, 10, allow_nan=False),
)


def test_gamma_factorial():
    assert gamma(5) == pytest.approx(24.0, rel=1e-14)


def test_gamma_half():
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gamma_pole_raises():
    with pytest.raises(PoleError):
        gamma(-3)
    with pytest.raises(PoleError):
        gamma(-3 + 1e-14j)


def test_gamma_matches_math_gamma_on_reals():
    for x in [0.1, 0.75, 1.5, 3.25, 7.0, 12.5, 20.25, 33.0, 49.5]:
        assert gamma(x).real == pytest.approx(math.gamma(x), rel=1e-13)
        assert gamma(x).imag == 0.0


def test_gamma_reflection_negative_reals():
    for x in [-0.5, -2.5, -7.25, -19.75]:
        assert gamma(x).real == pytest.approx(math.gamma(x), rel=1e-12)


def test_gamma_duplication_complex():
    # Gamma(2z) = 2^(2z-1)/sqrt(pi) Gamma(z) Gamma(z+1/2), an independent
    # consistency check across the half-planes.
    for z in [0.3 + 0.7j, 2.0 - 1.5j, -1.3 + 0.4j, 8.0 + 3.0j, 20.0 - 5.0j]:
        lhs = gamma(2 * z)
        rhs = 2 ** (2 * z - 1) / math.sqrt(math.pi) * gamma(z) * gamma(z + 0.5)
        assert abs(lhs - rhs) / abs(lhs) < 1e-13


def test_gamma_modulus_identities():
    y = 0.8
    assert abs(gamma(1j * y)) ** 2 == pytest.approx(
        math.pi / (y * math.sinh(math.pi * y)), rel=1e-13
    )
    assert abs(gamma(0.5 + 1j * y)) ** 2 == pytest.approx(
        math.pi / math.cosh(math.pi * y), rel=1e-13
    )


def test_log_gamma_consistent_with_gamma():
    for z in [0.4 + 0.2j, 5.0 - 2.0j, -3.3 + 0.8j, 40.0 + 0.3j]:
        assert abs(cmath.exp(log_gamma(z)) - gamma(z)) / abs(gamma(z)) < 1e-13


def test_reciprocal_gamma_values():
    assert reciprocal_gamma(1) == pytest.approx(1.0, rel=1e-15)
    # Exact zeros at the non-positive integers, by contract.
    assert reciprocal_gamma(0) == 0.0
    assert reciprocal_gamma(-2) == 0.0


def test_reciprocal_gamma_continuous_through_poles():
    # Small circles about the poles: values stay O(radius).
    for m in (0, -1, -4):
        eps = 1e-6
        vals = [
            reciprocal_gamma(m + eps * cmath.exp(2j * math.pi * k / 12))
            for k in range(12)
        ]
        assert max(abs(v) for v in vals) < 1e-3


@given(
    z=st.builds(complex, st.floats(-30, 30), st.floats(-10, 10)),
)
@settings(max_examples=150, deadline=None)
def test_gamma_times_reciprocal_is_one(z):
    from jacobifn.scalar_kernel import distance_to_nonpositive_integers

    if distance_to_nonpositive_integers(z) < 0.05 or abs(z) > 50:
        return
    assert abs(gamma(z) * reciprocal_gamma(z) - 1.0) < 1e-12


def test_pochhammer_examples():
    assert pochhammer(5, 0) == 1.0
    assert pochhammer(1, 4) == 24.0
    assert pochhammer(-3, 2) == 6.0
    assert pochhammer(-3, 5) == 0.0


def test_pochhammer_negative_count():
    # (a)_(-m) = 1 / ((a-1)...(a-m))
    a = 2.5 + 0.5j
    assert pochhammer(a, -2) == pytest.approx(1.0 / ((a - 1) * (a - 2)), rel=1e-14)
    with pytest.raises(UndefinedError):
        pochhammer(2, -3)  # hits the zero factor a-2=0


def test_pochhammer_integer_reflection_exact():
    # (-n)_k = (-1)^k n!/(n-k)! on the pure product path, exactly.
    for n in range(13):
        for k in range(n + 1):
            expect = (-1) ** k * math.factorial(n) / math.factorial(n - k)
            assert pochhammer(-n, k) == expect


@given(
    a=finite_complex,
    m=st.integers(0, 8),
    n=st.integers(0, 8),
)
@settings(max_examples=200, deadline=None)
def test_pochhammer_addition_rule(a, m, n):
    lhs = pochhammer(a, m + n)
    rhs = pochhammer(a, m) * pochhammer(a + m, n)
    assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), abs(rhs), 1.0)


@given(
    a=st.builds(complex, st.floats(-8, 8), st.floats(0.2, 4.0)),
    n=st.integers(0, 8),
)
@settings(max_examples=150, deadline=None)
def test_gamma_shift_reflection_rule(a, n):
    # Gamma(a-n) (1-a)_n = (-1)^n Gamma(a) off the poles.
    lhs = gamma(a - n) * pochhammer(1.0 - a, n)
    rhs = (-1.0) ** n * gamma(a)
    assert abs(lhs - rhs) <= 1e-11 * abs(rhs)


def test_binomial_examples():
    assert binomial(2.7 + 1j, 0) == 1.0
    assert binomial(4, 2) == pytest.approx(6.0, rel=1e-14)
    assert binomial(-1, 3) == pytest.approx(-1.0, rel=1e-14)


def test_pochhammer_product():
    assert pochhammer_product([], 3) == 1.0
    assert pochhammer_product([1, 2], 2) == pytest.approx(12.0, rel=1e-14)
    assert pochhammer_product([-1], 3) == 0.0
