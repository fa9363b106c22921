"""Smoke tests for the _xopzeros extension module."""

import math

import _xopzeros as x


def test_build_classical_reduces_to_hermite():
    # empty partition: plain Hermite H_4 = 16x^4 - 48x^2 + 12
    assert x.build("", 4) == ["12", "0", "-48", "0", "16"]


def test_build_exceptional_degree():
    coeffs = x.build("1,1,3,3", 8)
    assert len(coeffs) == 9
    assert coeffs[-1] != "0"


def test_zero_counts_for_reference_instances():
    zs = x.zeros("1,1,1,1", 8)
    assert (zs.n_real(), zs.n_complex()) == (4, 4)
    zs = x.zeros("1,1,3,3", 8)
    assert (zs.n_real(), zs.n_complex()) == (2, 6)
    full = zs.full_list()
    assert len(full) == zs.degree == 8
    # conjugate closure
    for z in full:
        assert any(abs(w - z.conjugate()) < 1e-12 for w in full)


def test_stieltjes_residuals_small():
    for order in (1, 2, 3):
        assert max(x.stieltjes_residuals("1,1", 6, order)) < 1e-8


def test_stationarity_at_zeros():
    assert x.stationarity_residual("1,1,1,1", 8) < 1e-7


def test_hessian_spectrum():
    ev = x.hessian_eigenvalues("1,1,1,1", 8)
    assert ev == sorted(ev)
    assert ev[0] > 0  # positive definite at this configuration


def test_scan_classification():
    assert x.scan_classification("1,1,1,1", 8) == "real-max-and-saddle"


def test_reproduce_examples():
    reports = x.reproduce_examples()
    assert [r["n_real"] for r in reports] == [4, 2, 2]
    assert [r["n_complex"] for r in reports] == [4, 6, 8]
    assert all(r["stationarity_residual"] < 1e-7 for r in reports)


def test_maximize_recovers_hermite_zeros():
    res = x.maximize(3, starts=20, seed=42)
    assert res["converged_starts"] >= 18
    expect = [-math.sqrt(1.5), 0.0, math.sqrt(1.5)]
    assert all(abs(a - b) < 1e-6 for a, b in zip(res["best_y"], expect))
