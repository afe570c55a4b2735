import cmath
import math
from random import Random

import pytest

from conftest import jacobi_poly_via_recurrence, legendre_via_recurrence
from jacobifn.errors import DomainCutError, ValidityError
from jacobifn.jacobi_first import (
    JacobiParams,
    Representation,
    jacobi_p,
    jacobi_p_at_one,
    jacobi_p_scaled,
    jacobi_polynomial,
    taylor_section,
)


def test_legendre_p2_value():
    r = jacobi_p(JacobiParams(0, 0, 2), 0.6)
    assert r.value == pytest.approx(0.04, abs=1e-12)


def test_value_at_one_alpha_zero():
    assert jacobi_p(JacobiParams(0, 0.7, 2.3), 1.0).value == pytest.approx(
        1.0, rel=1e-12
    )


def test_at_one_examples():
    assert jacobi_p_at_one(JacobiParams(0, 1.4, 0.9)) == pytest.approx(1.0, rel=1e-13)
    assert jacobi_p_at_one(JacobiParams(1, 0.5, 2)) == pytest.approx(3.0, rel=1e-13)
    assert jacobi_p_at_one(JacobiParams(3.5, 0.1, -2)) == 0.0


def test_at_one_validity():
    with pytest.raises(ValidityError):
        jacobi_p_at_one(JacobiParams(1.5, 0.0, -2.5))


def test_at_one_matches_gamma_ratio(rng: Random):
    from jacobifn.scalar_kernel import gamma

    for _ in range(100):
        a = complex(rng.uniform(0.2, 3), rng.uniform(-0.4, 0.4))
        g = complex(rng.uniform(0.2, 3), rng.uniform(-0.4, 0.4))
        got = jacobi_p_at_one(JacobiParams(a, 0.3, g))
        want = gamma(a + g + 1) / (gamma(a + 1) * gamma(g + 1))
        assert abs(got - want) <= 1e-12 * abs(want)


def test_polynomial_examples():
    assert jacobi_polynomial(0, 0.7, -0.3, 0.4) == 1.0
    assert jacobi_polynomial(1, 1, 0, 0.0) == pytest.approx(0.5, rel=1e-14)
    assert jacobi_polynomial(2, 0, 0, 0.6) == pytest.approx(0.04, abs=1e-14)


def test_polynomial_matches_recurrence(rng: Random):
    for _ in range(40):
        n = rng.randint(0, 9)
        a = rng.uniform(-0.8, 2.5)
        b = rng.uniform(-0.8, 2.5)
        x = complex(rng.uniform(-2, 2), rng.uniform(-1, 1))
        got = jacobi_polynomial(n, a, b, x)
        want = jacobi_poly_via_recurrence(n, a, b, x)
        assert abs(got - want) <= 1e-11 * max(abs(want), 1.0)


def test_polynomial_reduction_of_p(rng: Random):
    # gamma = n in 0..10 reduces the function to the polynomial.
    for n in range(11):
        for _ in range(5):
            a = rng.uniform(-0.6, 2.0)
            b = rng.uniform(-0.6, 2.0)
            z = complex(rng.uniform(0.0, 1.8), rng.uniform(0.2, 1.0))
            got = jacobi_p(JacobiParams(a, b, n), z).value
            want = jacobi_polynomial(n, a, b, z)
            assert abs(got - want) <= 1e-11 * max(abs(want), 1.0)


def test_cross_representation_agreement_spec_point():
    p = JacobiParams(0.3, -0.4, 1.7)
    z = 2 + 1j
    vals = [jacobi_p(p, z, Representation(k)).value for k in (1, 2, 3, 4)]
    for v in vals[1:]:
        assert abs(v - vals[0]) <= 1e-10 * abs(vals[0])


def test_cross_representation_agreement_sweep(rng: Random):
    done = 0
    while done < 50:
        p = JacobiParams(
            complex(rng.uniform(-0.9, 3), rng.uniform(-0.4, 0.4)),
            complex(rng.uniform(-0.9, 3), rng.uniform(-0.4, 0.4)),
            complex(rng.uniform(-0.9, 3), rng.uniform(-0.4, 0.4)),
        )
        if not p.first_kind_valid():
            continue
        r = rng.uniform(0.2, 3.0)
        th = rng.uniform(0.1, math.pi - 0.1) * (1 if rng.random() < 0.5 else -1)
        z = 1 + r * cmath.exp(1j * th)
        vals = []
        for k in (1, 2, 3, 4):
            try:
                vals.append(jacobi_p(p, z, Representation(k)))
            except Exception:
                pass
        if not vals:
            # Annulus corner where no single series converges; AUTO still
            # reaches it through the connection path.
            jacobi_p(p, z)
            continue
        base = vals[0]
        for v in vals[1:]:
            # Pairwise to 1e-9, honoring each value's reported error bar
            # (marginal arguments near the disk boundary are ill-conditioned
            # and say so in their estimates).
            bound = max(
                1e-9 * max(abs(base.value), 1e-12),
                3.0 * (v.abs_error_estimate + base.abs_error_estimate),
            )
            assert abs(v.value - base.value) <= bound
        done += 1


def test_domain_cut_error():
    with pytest.raises(DomainCutError):
        jacobi_p(JacobiParams(0.2, 0.1, 1.1), -2.0)
    with pytest.raises(DomainCutError):
        jacobi_p(JacobiParams(0.2, 0.1, 1.1), -1.0)  # endpoint excluded


def test_validity_error():
    with pytest.raises(ValidityError):
        jacobi_p(JacobiParams(0.5, 0.2, -1.5), 0.3)


def test_boundary_limit_toward_one():
    p = JacobiParams(0.4, -0.2, 1.3)
    base = jacobi_p_at_one(p)
    diffs = []
    for eps in (1e-3, 1e-4, 1e-5):
        val = jacobi_p(p, 1.0 + eps * cmath.exp(0.4j)).value
        diffs.append(abs(val - base))
    # Linear decay in eps: each decade shrinks the difference ~10x.
    assert diffs[1] <= 0.3 * diffs[0]
    assert diffs[2] <= 0.3 * diffs[1]
    assert diffs[0] <= 10.0 * abs(base) * 1e-3 + 1e-12


def test_scaled_value_matches_plain():
    p = JacobiParams(0.3, -0.45, 1.63)
    for z in (0.5 + 0.5j, 3.0 + 2.0j, 150.0 + 40.0j):
        log_scale, mant = jacobi_p_scaled(p, z)
        plain = jacobi_p(p, z).value
        assert abs(cmath.exp(log_scale) * mant - plain) <= 1e-11 * abs(plain)


def test_large_z_connection_matches_series():
    p = JacobiParams(0.3, -0.45, 1.63)
    z = 150 + 40j
    auto = jacobi_p(p, z)
    assert auto.provenance == "connection"
    rep3 = jacobi_p(p, z, Representation.REP3).value
    assert abs(auto.value - rep3) <= 1e-9 * abs(rep3)


def test_taylor_section_n1_equals_at_one():
    p = JacobiParams(0.3, 0.2, 1.6)
    lhs, rhs = taylor_section(p, 1, 1.5)
    assert lhs == pytest.approx(jacobi_p_at_one(p), rel=1e-13)
    assert rhs == pytest.approx(jacobi_p_at_one(p), rel=1e-12)


def test_taylor_section_pairs():
    lhs, rhs = taylor_section(JacobiParams(0.3, 0.2, 1.6), 2, 1.5)
    assert abs(lhs - rhs) <= 1e-11 * abs(lhs)
    lhs, rhs = taylor_section(JacobiParams(0.5, -0.25, 2.2), 3, 0.7)
    assert abs(lhs - rhs) <= 1e-9 * abs(lhs)


def test_taylor_section_rejects_bad_input():
    with pytest.raises(ValueError):
        taylor_section(JacobiParams(0.3, 0.2, 1.6), 0, 1.5)
    with pytest.raises(ValueError):
        taylor_section(JacobiParams(0.3, 0.2, 1.6), 2, 1.0)
    with pytest.raises(ValidityError):
        taylor_section(JacobiParams(0.5, 0.5, 1.0), 2, 1.5)  # sum is integer


def test_legendre_reduction_on_real_axis():
    for n in (0, 1, 2, 5, 8):
        for x in (0.0, 0.35, -0.6, 0.9):
            got = jacobi_p(JacobiParams(0, 0, n), x).value
            want = legendre_via_recurrence(n, x)
            assert abs(got - want) <= 1e-12 * max(abs(want), 1.0)
