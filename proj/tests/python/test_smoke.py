import math

import pytest

import fuzzyspec as fs

HALF = [(0.0, math.pi)]


def test_half_circle_spectrum():
    c = fs.crisp_spectrum(HALF, 3)
    assert abs(c[0] - 0.5) < 1e-15
    assert abs(c[1] - 1j / math.pi) < 1e-15
    c0, s = fs.c_to_s(c)
    assert all(abs(v - 2) < 1e-12 for v in s)


def test_membership_and_quadrature():
    f = fs.Membership.piecewise_linear([(0.0, 0.2), (1.0, 0.9), (2.5, 0.6), (4.0, 0.1)])
    assert f(1.0) == pytest.approx(0.9)
    exact = fs.fourier_coefficients(f, 4)
    simpson = fs.fourier_coefficients(f, 4, rule="simpson")
    assert abs(exact[0] - 0.40464790894703253319) < 1e-14
    assert max(abs(a - b) for a, b in zip(exact, simpson)) < 1e-7
    ok, margins = fs.validate_fuzzy_spectrum(exact)
    assert ok and min(margins) > 0


def test_round_trip_and_oracle():
    f = fs.Membership.preset("trapezoid")
    c = fs.fourier_coefficients(f, 16)
    c0, s = fs.c_to_s(c)
    back = fs.s_to_c(c0, s)
    assert max(abs(a - b) for a, b in zip(back, c)) < 1e-10
    assert len(fs.exp_series_oracle(c)) == 17


def test_classify_and_roots():
    arcs = [(0.0, 1.0), (2.0, 2.5), (4.0, 5.5)]
    c0, s = fs.c_to_s(fs.crisp_spectrum(arcs, 6))
    verdict = fs.classify(c0, s)
    assert verdict["finite"] and verdict["order"] == 3
    alpha, mu = fs.unit_root_decompose(c0, s, 3)
    angles = sorted(math.atan2(z.imag, z.real) % (2 * math.pi) for z in alpha)
    for got, want in zip(angles, [0.0, 2.0, 4.0]):
        assert min(abs(got - want), 2 * math.pi - abs(got - want)) < 1e-6
    assert all(m > 0 for m in mu)


def test_defuzz():
    f = fs.Membership.preset("trapezoid")
    r = fs.defuzz(f, 4)
    assert r["kind"] == "arcs" and len(r["arcs"]) == 4
    assert r["max_residual"] < 1e-9
    assert max(fs.verify_match(f, r["arcs"], 4)) < 1e-9
    lam = fs.defuzz(f, 2, lambda_=0.5)
    assert lam["lambda"] == pytest.approx(0.5)
    sweep = fs.approximation_sequence(f, 3)
    assert [e["n"] for e in sweep] == [1, 2, 3]


def test_periodization():
    samples = fs.periodize_gaussian(1.0, 0.5, grid=64)
    assert len(samples) == 64 and abs(samples[0] - 1.0) < 1e-9
    assert fs.poisson_check_gaussian(1.0, 0.5, 16) < 1e-8
    assert fs.defuzz_gaussian(1.0, 0.3, 3)["max_residual"] < 1e-5


def test_errors():
    with pytest.raises(fs.ValidationError):
        fs.Membership.preset("nope")
    with pytest.raises(fs.DomainError):
        fs.c_to_s([1.5, 0.0])
    with pytest.raises(fs.Error):
        fs.Membership.from_json("{")
