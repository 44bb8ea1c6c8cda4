import math
import numpy as np
import pytest
from coherence_kit.core.errors import CoherenceKitError, NonConvergence
from coherence_kit.oracle import certify_extremum
from coherence_kit.oracle.extremum import GainProblem, _ascend, lagrange_multipliers


@pytest.mark.parametrize(
    "z,z_target,expected",
    [(0.0, 0.0, 1.0), (0.0, 0.6, 0.8), (0.5, 0.25, 1.0)],
)
def test_known_optima(z, z_target, expected):
    certificate = certify_extremum(z, z_target, restarts=8, seed=1)
    assert certificate.g_opt_bound == pytest.approx(expected, abs=1e-12)
    assert certificate.g_opt_numeric == pytest.approx(expected, abs=1e-6)
    assert certificate.certified
    assert certificate.stationarity <= 1e-8


@pytest.mark.parametrize("fraction", [0.05, 0.3, 0.5, 0.7, 0.95])
def test_ascent_resolves_flat_optimum(fraction):
    problem = GainProblem(0.0, 0.6)
    start = problem.lower + fraction * (problem.upper - problem.lower)
    s, stationarity = _ascend(problem, start, 10_000, 1e-10)
    assert stationarity <= 1e-10
    assert problem.value(s) == pytest.approx(0.8, abs=1e-12)


def test_certifies_with_default_restarts():
    certificate = certify_extremum(0.0, 0.6)
    assert certificate.certified
    assert certificate.g_opt_numeric == pytest.approx(0.8, abs=1e-12)


def test_analytic_value_uncapped():
    certificate = certify_extremum(0.5, 0.25, restarts=4)
    assert certificate.g_opt_analytic == pytest.approx(math.sqrt(0.9375 / 0.75), abs=1e-12)


def test_kappa():
    certificate = certify_extremum(0.0, 0.6, restarts=4)
    assert certificate.kappa == pytest.approx(4.0)


def test_no_restarts_cannot_converge():
    with pytest.raises(NonConvergence):
        certify_extremum(0.1, 0.2, restarts=0)


@pytest.mark.parametrize("z,z_target", [(1.0, 0.0), (0.0, -1.0), (1.2, 0.3)])
def test_domain(z, z_target):
    with pytest.raises(CoherenceKitError):
        certify_extremum(z, z_target)


def test_deterministic():
    a = certify_extremum(-0.3, 0.4, restarts=6, seed=21)
    b = certify_extremum(-0.3, 0.4, restarts=6, seed=21)
    assert a == b


def test_gain_problem_feasible_interval():
    problem = GainProblem(0.2, -0.3)
    assert 0.0 <= problem.lower <= problem.upper <= math.pi / 2
    for s in np.linspace(problem.lower, problem.upper, 11):
        a, b, c, d = problem.moduli(float(s))
        # population constraint of the operator pair
        assert a * a * 1.2 + d * d * 0.8 == pytest.approx(0.7, abs=1e-12)
        assert -1.0 <= problem.value(float(s)) <= 1.0


def test_lagrange_multipliers_need_nonzero_moduli():
    assert lagrange_multipliers(1.0, 0.0, 0.5, 0.5, 0.2) is None
    lam1, lam2, lam3 = lagrange_multipliers(0.6, 0.8, 0.8, 0.6, 0.0)
    assert lam3 == pytest.approx(-0.375)
    assert lam2 == pytest.approx(-0.375)
    assert lam1 == pytest.approx(-(0.8 + 2 * -0.375 * 0.6) / 1.2)


def test_certificate_dict():
    data = certify_extremum(0.0, 0.6, restarts=4).to_dict()
    assert data["certified"] is True
    assert data["g_opt_analytic"] == pytest.approx(0.8)


@pytest.mark.slow
def test_grid_agreement():
    for z in np.linspace(-0.9, 0.9, 5):
        for z_target in np.linspace(-0.9, 0.9, 5):
            certificate = certify_extremum(float(z), float(z_target), seed=3)
            assert certificate.discrepancy <= 1e-6, (z, z_target)
