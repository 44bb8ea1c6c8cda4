import math
import numpy as np
import pytest
from coherence_kit.core.errors import IncompleteChannel, NotIncoherent
from coherence_kit.core.qubit import BlochState, bloch_to_density, random_state
from coherence_kit.core.channels import KrausSet, apply, is_strictly_incoherent, output_state
from coherence_kit.synthesis import io_to_sio
from coherence_kit.synthesis.sio import partition
from coherence_kit.oracle.sampler import sample_random_io
from conftest import assert_state_close

S = math.sqrt(0.5)
PLUS_MINUS = KrausSet((np.array([[S, S], [0.0, 0.0]]), np.array([[0.0, 0.0], [S, -S]])))


@pytest.mark.parametrize("z,r", [(0.2, 0.5), (0.0, 1.0), (-0.4, -0.3), (0.9, 0.0)])
def test_plus_minus_pair(z, r):
    state = BlochState(z, r)
    converted, solution = io_to_sio(PLUS_MINUS, state)

    assert solution.h1 == pytest.approx(1.0 + r, abs=1e-12)
    assert solution.h2 == pytest.approx(1.0 - r, abs=1e-12)
    expected = ((1 + r) / 2, (1 - r) / 2, (1 - r) / 2, (1 + r) / 2)
    assert solution.moduli_squared == pytest.approx(expected, abs=1e-12)
    assert solution.cancellation_residual() < 1e-12

    for ch in (PLUS_MINUS, converted):
        assert_state_close(output_state(ch, state), BlochState(r, 0.0))
    assert is_strictly_incoherent(converted)
    assert converted.is_complete(1e-12)


def test_strict_channel_passes_through(coherent_source_channel):
    converted, solution = io_to_sio(coherent_source_channel, BlochState(0.1, 0.2))
    assert converted is coherent_source_channel
    assert solution is None


def test_dephasing_passes_through():
    state = BlochState(0.3, 0.4, 0.5)
    converted, solution = io_to_sio(KrausSet.dephasing(), state)
    assert solution is None
    assert_state_close(output_state(converted, state), BlochState(0.3, 0.0))


def test_hadamard_rejected():
    h = np.array([[1.0, 1.0], [1.0, -1.0]]) * S
    with pytest.raises(NotIncoherent):
        io_to_sio(KrausSet((h,)), BlochState(0.0, 0.5))


def test_incomplete_rejected():
    with pytest.raises(IncompleteChannel):
        io_to_sio(KrausSet((np.array([[S, S], [0.0, 0.0]]),)), BlochState(0.0, 0.5))


def test_partition():
    ops = PLUS_MINUS.operators + (np.diag([0.0, 0.0]),)
    top, bottom, rest = partition(KrausSet(ops))
    assert len(top) == 1 and len(bottom) == 1 and len(rest) == 1


def test_vanishing_top_weight():
    # the top-row operator annihilates |+>
    ops = (np.array([[S, -S], [0.0, 0.0]]), np.array([[0.0, 0.0], [S, S]]))
    state = BlochState(0.0, 1.0)
    converted, solution = io_to_sio(KrausSet(ops), state)
    assert solution.h1 == pytest.approx(0.0, abs=1e-12)
    assert converted.is_complete(1e-12)
    assert_state_close(output_state(converted, state), output_state(KrausSet(ops), state))


def test_random_equivalence(rng):
    for _ in range(1000):
        ch = sample_random_io(rng)
        state = random_state(rng)
        converted, solution = io_to_sio(ch, state)
        assert is_strictly_incoherent(converted)
        assert converted.is_complete(1e-12)
        np.testing.assert_allclose(
            apply(converted, bloch_to_density(state)).data,
            apply(ch, bloch_to_density(state)).data,
            rtol=0,
            atol=1e-10,
        )
        if solution is not None:
            assert solution.cancellation_residual() < 1e-12
            assert min(solution.moduli_squared) >= -1e-12
            assert solution.h1 >= 0.0 and solution.h2 >= 0.0


def test_solution_dict():
    _, solution = io_to_sio(PLUS_MINUS, BlochState(0.2, 0.5))
    data = solution.to_dict()
    assert set(data) == {"a", "b", "c", "d", "h1", "h2"}
    assert data["a"] == [pytest.approx(math.sqrt(0.75)), 0.0]
