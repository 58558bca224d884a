from fractions import Fraction
import json

import numpy as np
import pytest

import spectra


def test_decide_line_set_examples():
    d = spectra.decide_line_set(3, a=2)
    assert d["verdict"] == "spectral"
    assert d["certificate"] == [Fraction(0), Fraction(1, 3), Fraction(2, 3)]
    d = spectra.decide_line_set(3, a="3/1")
    assert d == {"verdict": "not_spectral", "reason": "congruence_fails"}
    d = spectra.decide_line_set(4, irrational="pi")
    assert d["reason"] == "irrational"


def test_spectral_pair_and_search():
    assert spectra.is_spectral_pair([0, 1, 2], ["0", "1/3", "2/3"])
    assert not spectra.is_spectral_pair([0, 1, 3], [0, Fraction(1, 3), Fraction(2, 3)])
    cert = spectra.certify_spectral_pair([0, 1, 2], [0, Fraction(1, 3), Fraction(2, 3)])
    assert cert["spectral"] and cert["exact"]
    assert spectra.search_spectrum([0, 1, 2], 3, 1) == [0, Fraction(1, 3), Fraction(2, 3)]
    assert spectra.search_spectrum([0, 1, 3], 6, 2) is None


def test_line_spectrum_matches_numeric_unitarity():
    n, p, q = 4, 7, 5
    a = [Fraction(i) for i in range(n - 1)] + [Fraction(p, q)]
    b = spectra.construct_line_spectrum(n, p, q)
    m = np.array([[np.exp(2j * np.pi * float(x * y)) for y in b] for x in a]) / np.sqrt(n)
    assert np.allclose(m.conj().T @ m, np.eye(n), atol=1e-12)
    assert spectra.is_spectral_pair(a, b)


def test_cyclotomic_and_vanishing_sums():
    assert spectra.cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]
    vanishes, exact, order = spectra.exponential_sum_vanishes([0, 1, 2], Fraction(1, 3))
    assert vanishes and exact and order == 3


def test_representation_round_trip():
    points = [0, Fraction(1, 4), 1]
    weights = [0.25, 0.25, 0.5]
    rep = spectra.multiplication_representation(points, weights)
    v = rep["eigenvectors"]
    assert np.allclose(v.conj().T @ v, np.eye(3), atol=1e-12)
    back_points, back_weights = spectra.measure_from_representation(rep["eigenvalues"], v, rep["v0"])
    assert back_points == [0, Fraction(1, 4), 1]
    assert np.allclose(back_weights, weights, atol=1e-12)
    xi = Fraction(7, 3)
    direct = sum(w * np.exp(2j * np.pi * float(x * xi)) for x, w in zip(points, weights))
    assert abs(spectra.atomic_transform(points, weights, xi) - direct) < 1e-12


def test_permutation_representation():
    r = spectra.permutation_representation(3, 2, 1)
    assert r["u_one"] == [1, 2, 0]
    assert r["u_a"] == [2, 0, 1]
    assert (r["k"], r["l"]) == (0, 1)


def test_cantor_transform_and_frames():
    value, depth, exact_zero = spectra.ifs_transform(4, [0, 2], 1)
    assert exact_zero and value == 0
    lam = spectra.jp_spectrum(1)
    assert lam == [0, 1, 4, 5]
    q = spectra.completeness_defect(spectra.jp_spectrum(4), Fraction(1, 37))
    assert 0.99 < q <= 1 + 1e-8
    lower, upper = spectra.frame_bounds([0, Fraction(1, 2)], [0.5, 0.5], [0, 1, 2])
    assert abs(lower - 1) < 1e-10 and abs(upper - 2) < 1e-10


def test_arrow_engine():
    out = spectra.arrow_close(["0", "1", "a"], ["1", "a", "a-1", "1-a", "-a", "-1"], 0)
    assert out["permutations"]["1"] == [1, 2, 0]
    assert out["permutations"]["a"] == [2, 0, 1]
    with pytest.raises(spectra.Inconsistent) as info:
        spectra.arrow_close([0, 1, 3], budget=2)
    assert info.value.trace


def test_errors_carry_reasons():
    with pytest.raises(spectra.InvalidInput) as info:
        spectra.is_spectral_pair([0, 0.5], [0, 1])
    assert info.value.reason == "inexact_number"
    with pytest.raises(ValueError):
        spectra.construct_line_spectrum(3, 1, 1)


def test_cli_entry_point():
    code, out = spectra.run_cli(["decide-line-set", "--n", "3", "--a", "2/1"])
    assert code == 0
    assert json.loads(out)["certificate"] == ["0", "1/3", "2/3"]
    code, _ = spectra.run_cli(["decide-line-set", "--bogus"])
    assert code == 2
