import math

import pytest

import latticebands as lb


def test_period_normalization():
    assert lb.normalized_even(lb.Period(5, 4)).p == 20
    n = lb.normalized_odd(lb.Period(5, 6))
    assert (n.p, n.q) == (5, 12)


def test_eigenvalues_1d():
    eigs = lb.eigenvalues_1d(4, 0.0)
    assert eigs == pytest.approx([-2.0, 0.0, 0.0, 2.0])
    assert lb.discriminant(2.0 * math.cos(0.3), 7) == pytest.approx(
        2.0 * math.cos(7 * 0.3)
    )


def test_fiber_and_counts():
    v = lb.Potential.checkerboard(0.5)
    mat = lb.build_fiber(v, lb.BlochPhase(0.0, 0.0))
    assert mat.shape == (4, 4)
    eigs = lb.fiber_eigenvalues(v, lb.BlochPhase(0.0, 0.0))
    assert eigs[0] == pytest.approx(-math.sqrt(16.25))
    assert lb.count_below(v, lb.BlochPhase(0.0, 0.0), 0.0) == 2

    free = lb.separable_eigenvalues(4, 4, lb.BlochPhase(0.0, 0.0))
    assert free[0] == pytest.approx(-4.0)


def test_spectrum_and_gaps():
    spec = lb.spectrum(lb.Potential.checkerboard(0.5), resolution=33)
    assert spec.component_count == 2
    gaps = lb.find_gaps(spec, lb.Potential.checkerboard(0.5))
    assert len(gaps) == 1
    assert gaps[0].lo < 0.0 < gaps[0].hi

    free = lb.spectrum(lb.Potential.zero(lb.Period(3, 2)), resolution=33)
    assert free.component_count == 1


def test_bands_and_quilt():
    bands = lb.compute_bands(lb.Potential.zero(lb.Period(2, 2)), resolution=17)
    assert len(bands) == 4
    assert bands[0].enclosure.lo == pytest.approx(-4.0, abs=1e-9)

    q = lb.quilt(lb.Potential.zero(lb.Period(2, 2)), -0.37, resolution=9)
    assert q.counts[0][0] % 2 == 1
    assert q.counts[-1][-1] % 2 == 0


def test_certificates():
    cert = lb.certify_interior(-0.01, lb.Period(8, 10))
    assert cert is not None
    assert cert.count_a != cert.count_b

    assert lb.certify_interior(0.0, lb.Period(2, 2)) is None

    exc = lb.exceptional_energies(2)
    assert exc == pytest.approx([-4.0, -2.0, 0.0, 2.0, 4.0])


def test_kruger_gap():
    spec = lb.kruger_gap(0.5, resolution=65)
    assert spec.component_count == 2
    assert spec.intervals[1].lo == pytest.approx(0.5, abs=spec.error_bound)
