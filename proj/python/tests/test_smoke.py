import math

import numpy as np
import pytest

import freespec

E12 = [[0, 1], [0, 0]]
W = [[0, 1], [1, 0]]


def test_arcsine_s_transform():
    assert freespec.s_transform("arcsine01", -0.5) == pytest.approx(3.0, rel=1e-12)
    with pytest.raises(freespec.DomainError):
        freespec.s_transform("arcsine01", 0.5)


def test_haagerup_larsen_outer_radius():
    nu = freespec.haagerup_larsen("arcsine01")
    assert nu.r_outer == pytest.approx(1 / math.sqrt(2), abs=1e-12)
    assert nu.cdf(0.5) == pytest.approx(1 / 3, abs=1e-6)
    assert len(nu.s) == len(nu.F)


def test_brown_product_atom_and_errors():
    nu = freespec.brown_product(np.array(E12, dtype=complex), np.array(W, dtype=complex))
    assert nu.atom_at_zero == pytest.approx(0.5)
    assert nu.summary()["kind"] == "radial"
    with pytest.raises(freespec.PreconditionError):
        freespec.brown_product(np.eye(2, dtype=complex), np.array(W, dtype=complex))


def test_nilpotent_sum_log_potential():
    nu = freespec.brown_sum_nilpotents(1, 1)
    assert nu.log_potential(0) == pytest.approx(-math.log(2), abs=1e-6)
    assert nu.log_potential(3j) == pytest.approx(math.log(3), abs=1e-9)


def test_examples():
    mix = freespec.brown_example_64(1, 1)
    assert isinstance(mix, dict)
    assert freespec.brown_example_65(1, 0).r_outer == pytest.approx(1 / (2 * math.sqrt(2)), rel=1e-9)
    region = freespec.spectrum_example_66(1, 1, boundary=360)
    assert region["kind"] == "implicit_cardioid"
    assert 360 <= len(region["boundary"]) <= 720


def test_spectrum_and_radius():
    a = np.array(W, dtype=complex)
    b = np.array([[0, 6], [1, 0]], dtype=complex)
    region = freespec.spectrum_product(a, b)
    assert region["kind"] == "annulus"
    assert region["parameters"]["r_outer"] == pytest.approx(6.0)
    assert freespec.spectral_radius(a, b) == pytest.approx(6.0)
    assert freespec.ellipse_families_equal(2.0, 3.0, raster=256)["equal"]


def test_moments_and_classification():
    m = freespec.moments("sum", np.diag([1, 0]).astype(complex), np.diag([1, 0]).astype(complex), 2)
    assert m[1] == pytest.approx(1.5)
    c = freespec.classify("product", np.array(E12, dtype=complex), np.array(W, dtype=complex))
    assert c["classification"] == "multi-point-support"
    assert c["r_diagonal"]
    with pytest.raises(ValueError):
        freespec.moments("difference", np.eye(2), np.eye(2), 2)


def test_decompose():
    entries = freespec.decompose(np.diag([1, 0]).astype(complex))
    assert set(entries) == {"b11", "b12", "b21", "b22"}
    b = np.array([[1, 2j], [0.5, -1]])
    for k in range(1, 5):
        exact = np.trace(np.linalg.matrix_power(b, k)) / 2
        assert abs(freespec.decomposed_power_trace(b, k) - exact) < 1e-10


def test_simulate_unitary_product():
    ev = freespec.simulate(np.array(W, dtype=complex), np.array(W, dtype=complex), N=32, trials=2, seed=1)
    assert ev.shape == (128,)
    assert np.allclose(np.abs(ev), 1.0, atol=1e-9)
    again = freespec.simulate(np.array(W, dtype=complex), np.array(W, dtype=complex), N=32, trials=2, seed=1)
    assert np.array_equal(ev, again)


def test_exact_verification_criterion():
    r = freespec.verify(1)
    assert r["pass"], r["line"]
