from fractions import Fraction

import numpy as np
import pytest

import slrk


def test_builtins_and_round_trip():
    assert {"rk4", "rk6", "heun3", "euler"} <= set(slrk.builtin_tableau_names())
    rk6 = slrk.tableau("rk6")
    assert rk6.stages == 8
    assert slrk.tableau(rk6.serialize()) == rk6
    assert [Fraction(c) for c in rk6.c] == [Fraction(k, 6) for k in (0, 1, 1, 2, 3, 4, 5, 6)]


def test_order_conditions():
    residuals = slrk.order_residuals(slrk.tableau("rk6"), 6)
    assert len(residuals) == 37
    assert all(r == 0 for _, r in residuals)
    assert slrk.verified_order(slrk.tableau("rk4")) == 4


def test_stability_polynomial():
    coeffs = slrk.stability_coefficients(slrk.tableau("rk6"))
    expected = [Fraction(1, 1), 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24), Fraction(1, 120),
                Fraction(1, 720), Fraction(29, 178200)]
    assert coeffs == expected
    assert slrk.real_axis_boundary(slrk.tableau("rk4")) == pytest.approx(-2.7853, abs=1e-3)
    z1, z2 = -0.5 + 0.25j, -3.0
    phi = sum(float(c) * z1**k for k, c in enumerate(coeffs))
    assert slrk.amplification(slrk.tableau("rk6"), z1, z2) == pytest.approx(np.exp(z2) * phi, rel=1e-14)
    points = slrk.region_boundary(slrk.tableau("rk4"), samples=32)
    assert len(points) == 32


def test_integrate_linear_part_is_exact():
    lam = np.array([-40.0 + 3.0j, -0.5, -7.0 - 1.0j])
    u0 = np.array([1.0, 2.0 - 1.0j, 0.5j])
    u = slrk.integrate(slrk.tableau("rk6"), lambda v: np.zeros_like(v), lam, u0, 0.05, 10)
    np.testing.assert_allclose(u, np.exp(lam * 0.5) * u0, rtol=1e-13)


def test_integrate_classical_logistic():
    g = lambda v: v * (1 - v)
    u = slrk.integrate(slrk.tableau("rk4"), g, None, np.array([0.1 + 0j]), 0.1, 20)
    assert abs(u[0] - 1 / (1 + 9 * np.exp(-2.0))) < 1e-6


def test_search_rk4_family():
    results = slrk.search(4, 4, "1/2", ["0", "1/2", "1/2", "1"], seeds=4, seed=4)
    assert len(results) == 4
    converged = [r for r in results if r["status"] == "converged"]
    assert converged
    assert converged[0]["final_residual"] <= 1e-12
    assert sum(converged[0]["b"]) == pytest.approx(1.0, abs=1e-12)


def test_small_convergence_study():
    out = slrk.convergence_study(n=16, t_final=0.5, steps=[4, 8, 16], reference_steps=128)
    assert {c["scheme"] for c in out["cells"]} == {"rk4", "rk6"}
    assert out["slopes"]["rk4"] == pytest.approx(4.0, rel=0.15)
