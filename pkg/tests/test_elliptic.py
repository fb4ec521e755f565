from __future__ import annotations

import cmath
import math

import pytest
import scipy.special as sp
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from fourbar import (
    Modulus,
    ModulusOutOfRange,
    NearPole,
    TargetOutOfRange,
    complete_K,
    dc,
    inverse_dc,
    jacobi_complex,
    jacobi_real,
)


def _K_quadrature(k: float) -> float:
    val, _ = quad(
        lambda p: 1.0 / math.sqrt(1.0 - (k * math.sin(p)) ** 2), 0.0, 0.5 * math.pi,
        epsabs=1e-13, epsrel=1e-13,
    )
    return val


def test_complete_K_at_zero_is_half_pi():
    assert abs(complete_K(0.0) - 0.5 * math.pi) <= 1e-15


@pytest.mark.parametrize("k", [math.sqrt(0.7), 0.3125, 0.05, 0.99])
def test_complete_K_against_quadrature(k):
    assert complete_K(k) == pytest.approx(_K_quadrature(k), abs=1e-10)


def test_complete_K_rejects_bad_modulus():
    for k in (-0.1, 1.0, 1.5):
        with pytest.raises(ModulusOutOfRange):
            complete_K(k)


def test_complete_K_monotone(rng):
    ks = sorted(rng.uniform(0.0, 0.999) for _ in range(50))
    vals = [complete_K(k) for k in ks]
    assert all(v2 > v1 for v1, v2 in zip(vals, vals[1:]))


def test_jacobi_real_special_values():
    k = 0.6
    m = Modulus.from_k(k)
    sn0, cn0, dn0 = jacobi_real(0.0, k)
    assert (sn0, cn0, dn0) == (0.0, 1.0, 1.0)
    snK, cnK, dnK = jacobi_real(m.K, k)
    assert snK == pytest.approx(1.0, abs=1e-14)
    assert cnK == pytest.approx(0.0, abs=1e-14)
    assert dnK == pytest.approx(m.k_prime, abs=1e-14)


def test_jacobi_real_degenerate_moduli():
    for u in (-2.3, 0.0, 0.7, 4.1):
        assert jacobi_real(u, 0.0) == pytest.approx((math.sin(u), math.cos(u), 1.0))
        sech = 1.0 / math.cosh(u)
        assert jacobi_real(u, 1.0) == pytest.approx((math.tanh(u), sech, sech))


def test_jacobi_real_against_scipy(rng):
    worst = 0.0
    for _ in range(2000):
        k = rng.uniform(0.001, 0.999)
        u = rng.uniform(-40.0, 40.0)
        sn, cn, dn = jacobi_real(u, k)
        s2, c2, d2, _ = sp.ellipj(u, k * k)
        worst = max(worst, abs(sn - s2), abs(cn - c2), abs(dn - d2))
    assert worst <= 1e-13


def test_quarter_period_shift_formulas(rng):
    for _ in range(200):
        k = rng.uniform(0.05, 0.95)
        m = Modulus.from_k(k)
        u = rng.uniform(-2.0, 2.0) * m.K
        sn, cn, dn = jacobi_real(u, k)
        sns, cns, dns = jacobi_real(u + m.K, k)
        assert sns == pytest.approx(cn / dn, abs=1e-12)
        assert cns == pytest.approx(-m.k_prime * sn / dn, abs=1e-12)
        assert dns == pytest.approx(m.k_prime / dn, abs=1e-12)


@given(
    st.floats(min_value=-30.0, max_value=30.0),
    st.floats(min_value=0.0, max_value=1.0),
)
@settings(max_examples=150, deadline=None)
def test_real_pythagorean_identities(u, k):
    sn, cn, dn = jacobi_real(u, k)
    assert abs(sn * sn + cn * cn - 1.0) <= 1e-12
    assert abs(k * k * sn * sn + dn * dn - 1.0) <= 1e-12


@given(st.floats(min_value=-20.0, max_value=20.0), st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=100, deadline=None)
def test_parity(u, k):
    sn, cn, dn = jacobi_real(u, k)
    sn2, cn2, dn2 = jacobi_real(-u, k)
    assert abs(sn + sn2) <= 1e-13
    assert abs(cn - cn2) <= 1e-13
    assert abs(dn - dn2) <= 1e-13


def test_complex_imaginary_transform(rng):
    for _ in range(300):
        k = rng.uniform(0.05, 0.95)
        kp = math.sqrt(1.0 - k * k)
        s = rng.uniform(-0.9, 0.9) * complete_K(kp)
        tr = jacobi_complex(complex(0.0, s), k)
        assert abs(tr.cn * jacobi_real(s, kp).cn - 1.0) <= 1e-12


def test_complex_quarter_shift_identity(rng):
    # sn(K + i s; k) dn(s; k') = 1
    for _ in range(200):
        k = rng.uniform(0.05, 0.95)
        kp = math.sqrt(1.0 - k * k)
        m = Modulus.from_k(k)
        s = rng.uniform(-0.9, 0.9) * m.K_prime
        tr = jacobi_complex(complex(m.K, s), k)
        assert abs(tr.sn * jacobi_real(s, kp).dn - 1.0) <= 1e-12


def test_complex_agrees_with_real_axis(rng):
    for _ in range(100):
        k = rng.uniform(0.05, 0.95)
        u = rng.uniform(-8.0, 8.0)
        tr = jacobi_complex(complex(u, 0.0), k)
        tre = jacobi_real(u, k)
        assert abs(tr.sn - tre.sn) <= 1e-13
        assert abs(tr.cn - tre.cn) <= 1e-13
        assert abs(tr.dn - tre.dn) <= 1e-13


def test_complex_real_direction_periodicity(rng):
    for _ in range(60):
        k = rng.uniform(0.1, 0.9)
        m = Modulus.from_k(k)
        t = complex(rng.uniform(-1, 1) * m.K, rng.uniform(-0.8, 0.8) * m.K_prime)
        a = jacobi_complex(t, k)
        b = jacobi_complex(t + 4.0 * m.K, k)
        assert abs(a.sn - b.sn) <= 1e-10 and abs(a.cn - b.cn) <= 1e-10
        c = jacobi_complex(t + 2.0 * m.K, k)
        assert abs(a.dn - c.dn) <= 1e-10


def test_complex_addition_formula_consistency(rng):
    # jacobi(t + r) computed directly matches the addition-formula combination
    for _ in range(1000):
        k = rng.uniform(0.1, 0.9)
        m = Modulus.from_k(k)
        t = complex(rng.uniform(-1.5, 1.5) * m.K, rng.uniform(-0.7, 0.7) * m.K_prime)
        r = rng.uniform(-1.0, 1.0) * m.K
        s1, c1, d1 = jacobi_complex(t, k)
        s2, c2, d2 = jacobi_real(r, k)
        denom = 1.0 - (k * s1 * s2) ** 2
        direct = jacobi_complex(t + r, k)
        assert abs(direct.sn - (s1 * c2 * d2 + s2 * c1 * d1) / denom) <= 1e-11
        assert abs(direct.cn - (c1 * c2 - s1 * s2 * d1 * d2) / denom) <= 1e-11
        assert abs(direct.dn - (d1 * d2 - k * k * s1 * s2 * c1 * c2) / denom) <= 1e-11


def test_complex_pythagorean_identities(rng):
    for _ in range(500):
        k = rng.uniform(0.05, 0.95)
        m = Modulus.from_k(k)
        t = complex(rng.uniform(-2, 2) * m.K, rng.uniform(-0.85, 0.85) * m.K_prime)
        sn, cn, dn = jacobi_complex(t, k)
        assert abs(sn * sn + cn * cn - 1.0) <= 1e-12
        assert abs(k * k * sn * sn + dn * dn - 1.0) <= 1e-12


def test_near_pole_raises():
    k = 0.5
    m = Modulus.from_k(k)
    with pytest.raises(NearPole):
        jacobi_complex(complex(0.0, m.K_prime), k)
    with pytest.raises(NearPole):
        jacobi_complex(complex(2.0 * m.K, m.K_prime + 1e-9), k)


def test_degeneration_continuity():
    for u in (0.3, 1.1, 2.7):
        sn, cn, dn = jacobi_real(u, 1e-8)
        assert abs(sn - math.sin(u)) <= 1e-6
        assert abs(cn - math.cos(u)) <= 1e-6
        assert abs(dn - 1.0) <= 1e-6
        sn, cn, dn = jacobi_real(u, 1.0 - 1e-8)
        assert abs(sn - math.tanh(u)) <= 1e-6
        assert abs(cn - 1.0 / math.cosh(u)) <= 1e-6


def test_dc_basics_and_half_quarter_value():
    for k in (0.2, 0.5, 0.9):
        assert dc(0.0, k) == 1.0
        kp = math.sqrt(1.0 - k * k)
        assert abs(dc(0.5 * complete_K(k), k) - math.sqrt(1.0 + kp)) <= 1e-10


def test_inverse_dc_round_trip(rng):
    for _ in range(200):
        k = rng.uniform(0.05, 0.95)
        bigk = complete_K(k)
        u = rng.uniform(0.01, 0.95) * bigk
        v = dc(u, k)
        assert dc(inverse_dc(v, k), k) == pytest.approx(v, rel=1e-10)
        assert inverse_dc(v, k) == pytest.approx(u, abs=1e-11 * bigk)


def test_inverse_dc_inverts_half_quarter_identity():
    for k in (0.25, 0.6, 0.85):
        kp = math.sqrt(1.0 - k * k)
        assert inverse_dc(math.sqrt(1.0 + kp), k) == pytest.approx(
            0.5 * complete_K(k), abs=1e-10
        )


def test_inverse_dc_rejects_unreachable_target():
    with pytest.raises(TargetOutOfRange):
        inverse_dc(0.5, 0.5)


def test_modulus_invariants():
    m = Modulus.from_k(0.3125)
    assert abs(m.k * m.k + m.k_prime * m.k_prime - 1.0) <= 1e-14
    assert m.K == pytest.approx(sp.ellipk(0.3125**2), abs=1e-14)
