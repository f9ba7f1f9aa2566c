import math
from collections import Counter

import numpy as np
import pytest

from cntbands import bands, oracle
from cntbands.bands import A_DEFAULT as A
from cntbands.tube import tube_symmetry

P_UNIFORM = bands.uniform_params(1.0, 0.0, A)


@pytest.mark.parametrize("c,periods,expected", [
    ((4, -2, -2), 1, 8),
    ((5, 0, -5), 2, 40),
    ((4, -1, -3), 1, 52),
])
def test_site_counts(c, periods, expected):
    sym = tube_symmetry(c)
    tube = oracle.build_finite_tube(c, sym, periods)
    assert len(tube.sites) == expected == 2 * sym.q * periods
    assert len(set(tube.sites)) == expected


def test_three_regular_symmetric_bonds():
    sym = tube_symmetry((5, 0, -5))
    tube = oracle.build_finite_tube((5, 0, -5), sym, 2)
    targets = Counter(l for row in tube.bonds for l, _, _ in row)
    assert all(targets[i] == 3 for i in range(len(tube.sites)))
    # bond relation is symmetric
    pairs = Counter()
    for i, row in enumerate(tube.bonds):
        for l, _, _ in row:
            pairs[(i, l)] += 1
    for (i, l), count in pairs.items():
        assert pairs[(l, i)] == count


def test_periods_validation():
    sym = tube_symmetry((4, -2, -2))
    with pytest.raises(ValueError):
        oracle.build_finite_tube((4, -2, -2), sym, 0)


def test_hamiltonian_uniform_real_symmetric():
    sym = tube_symmetry((4, -2, -2))
    tube = oracle.build_finite_tube((4, -2, -2), sym, 2)
    h = oracle.build_hamiltonian(tube, P_UNIFORM)
    assert np.allclose(h.imag, 0.0)
    assert np.array_equal(h, h.T)
    # |eps| + 3 gamma of hopping weight per row
    assert np.abs(h).sum(axis=1) == pytest.approx(np.full(len(tube.sites), 3.0))


def test_hamiltonian_magnetic_hermitian():
    c = (5, 0, -5)
    sym = tube_symmetry(c)
    tube = oracle.build_finite_tube(c, sym, 2)
    pm = bands.magnetic_params(1.0, 0.2 / A, c, A)
    h = oracle.build_hamiltonian(tube, pm)
    assert np.iscomplexobj(h)
    assert np.array_equal(h, h.conj().T)
    assert np.isrealobj(oracle.eigenvalues(h))


def test_eigenvalues_small_cases():
    assert oracle.eigenvalues(np.array([[0.5]])) == pytest.approx([0.5])
    dimer = np.array([[0.0, 0.7], [0.7, 0.0]])
    assert oracle.eigenvalues(dimer) == pytest.approx([-0.7, 0.7])


def test_eigenvalues_trace_preserved():
    rng = np.random.default_rng(2)
    m = rng.normal(size=(40, 40)) + 1j * rng.normal(size=(40, 40))
    h = m + m.conj().T
    ev = oracle.eigenvalues(h)
    assert ev.sum() == pytest.approx(np.trace(h).real, abs=1e-10 * 40)
    assert (np.diff(ev) >= 0).all()


def test_eigenvalues_dimension_cap():
    with pytest.raises(ValueError):
        oracle.eigenvalues(np.zeros((oracle.MAX_DIM + 1, oracle.MAX_DIM + 1)))


def test_analytic_spectrum_structure():
    c = (4, -2, -2)
    sym = tube_symmetry(c)
    spec = oracle.analytic_spectrum(c, sym, 1, P_UNIFORM)
    assert len(spec) == 2 * sym.q
    assert spec == pytest.approx(-spec[::-1], abs=1e-12)  # half filling symmetry
    assert spec[0] == pytest.approx(-3.0, abs=1e-12)
    assert spec[-1] == pytest.approx(3.0, abs=1e-12)


@pytest.mark.parametrize("c,periods", [
    ((4, -2, -2), 6),
    ((5, 0, -5), 4),
    ((4, -1, -3), 4),
])
def test_spectrum_equivalence(c, periods):
    sym = tube_symmetry(c)
    report = oracle.compare_spectra(c, sym, periods, P_UNIFORM, tol=1e-8)
    assert report.passed
    assert report.dimension == 2 * sym.q * periods
    assert report.max_deviation < 1e-8


def test_spectrum_equivalence_magnetic():
    c = (5, 0, -5)
    sym = tube_symmetry(c)
    beta = 0.3 / (A * math.sqrt(50))
    pm = bands.magnetic_params(1.0, beta, c, A)
    report = oracle.compare_spectra(c, sym, 4, pm, tol=1e-8)
    assert report.passed


def test_finite_antisymmetry():
    c = (4, -1, -3)
    sym = tube_symmetry(c)
    tube = oracle.build_finite_tube(c, sym, 2)
    ev = oracle.eigenvalues(oracle.build_hamiltonian(tube, P_UNIFORM))
    assert ev == pytest.approx(-ev[::-1], abs=1e-10)


def test_finite_gap_bounds_continuous_gap():
    # a discrete sample can only overshoot the continuous minimum
    for c in [(5, 0, -5), (4, -1, -3)]:
        sym = tube_symmetry(c)
        spec = oracle.analytic_spectrum(c, sym, 5, P_UNIFORM)
        min_plus = spec[spec > 0].min()
        gap = bands.band_gap(c, sym, P_UNIFORM).gap
        assert min_plus >= gap / 2 - 1e-12


def test_compare_tolerance_validation():
    sym = tube_symmetry((4, -2, -2))
    with pytest.raises(ValueError):
        oracle.compare_spectra((4, -2, -2), sym, 1, P_UNIFORM, tol=0.0)
