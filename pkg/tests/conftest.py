import math
import numpy as np
import pytest
from coherence_kit.core.qubit import BlochState, bloch_to_density, random_state
from coherence_kit.core.channels import KrausSet

SQRT6 = math.sqrt(6.0)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: Monte-Carlo runs over 10^4 samples or more")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def coherent_source_channel() -> KrausSet:
    """Diagonal plus anti-diagonal pair taking (0, 1) to (0.5, 0.5)"""
    alpha = 0.75 + 1.0 / (2.0 * SQRT6)
    beta = 0.25 + 1.0 / (2.0 * SQRT6)
    k0 = np.diag([math.sqrt(alpha), math.sqrt(beta)])
    k1 = np.array([[0.0, math.sqrt(1.0 - beta)], [-math.sqrt(1.0 - alpha), 0.0]])
    return KrausSet((k0, k1))


def random_states(rng, count, **kwargs) -> list[BlochState]:
    return [random_state(rng, **kwargs) for _ in range(count)]


def assert_state_close(actual: BlochState, expected: BlochState, atol: float = 1e-12):
    """Compare through density matrices, so signed r and θ need not match literally"""
    np.testing.assert_allclose(bloch_to_density(actual).data, bloch_to_density(expected).data, rtol=0, atol=atol)
