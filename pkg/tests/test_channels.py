import math
import numpy as np
import pytest
from coherence_kit.core.types import ChannelKind, PioFamily
from coherence_kit.core.errors import IncompleteChannel, NotDiagonalUnitary
from coherence_kit.core.qubit import BlochState, DiagonalUnitary, DephasingPair, bloch_to_density, l1_coherence
from coherence_kit.core.channels import (
    KrausSet,
    apply,
    apply_selective,
    classify,
    conjugate_channel,
    is_incoherent,
    is_strictly_incoherent,
    lift_channel,
    output_state,
    pio_decomposition,
)
from coherence_kit.oracle.sampler import sample_random_io
from conftest import assert_state_close, random_states

S = math.sqrt(0.5)
X = np.array([[0.0, 1.0], [1.0, 0.0]])
H = np.array([[1.0, 1.0], [1.0, -1.0]]) * S

# measure in the ± basis, report in the computational basis
PLUS_MINUS = KrausSet((np.array([[S, S], [0.0, 0.0]]), np.array([[0.0, 0.0], [S, -S]])))


def test_identity_channel_is_noop(rng):
    for s in random_states(rng, 20):
        m = bloch_to_density(s)
        assert apply(KrausSet.identity(), m).allclose(m)


def test_coherent_source_channel(coherent_source_channel):
    out = output_state(coherent_source_channel, BlochState(0.0, 1.0))
    assert out.z == pytest.approx(0.5, abs=1e-12)
    assert out.r == pytest.approx(0.5, abs=1e-12)
    assert out.theta == 0.0


def test_dephasing_kills_coherence():
    out = output_state(KrausSet.dephasing(), BlochState(0.3, 0.6, 1.1))
    assert out.point == pytest.approx((0.3, 0.0), abs=1e-15)


def test_apply_rejects_incomplete_channel():
    with pytest.raises(IncompleteChannel):
        apply(KrausSet((np.diag([1.0, 0.5]),)), bloch_to_density(BlochState(0.0, 0.0)))


def test_kraus_set_shape_checks():
    with pytest.raises(IncompleteChannel):
        KrausSet(())
    with pytest.raises(IncompleteChannel):
        KrausSet((np.eye(3),))


def test_apply_selective_dephasing():
    m = bloch_to_density(BlochState(0.5, 0.4, 0.7))
    (p0, out0), (p1, out1) = apply_selective(KrausSet.dephasing(), m)
    assert (p0, p1) == pytest.approx((0.75, 0.25), abs=1e-15)
    np.testing.assert_allclose(out0.data, np.diag([1.0, 0.0]), atol=1e-15)
    np.testing.assert_allclose(out1.data, np.diag([0.0, 1.0]), atol=1e-15)


def test_apply_selective_keeps_zero_branch_slot():
    branches = apply_selective(KrausSet.dephasing(), bloch_to_density(BlochState(1.0, 0.0)))
    assert len(branches) == 2
    assert branches[0].probability == pytest.approx(1.0)
    assert branches[1].probability == 0.0
    assert branches[1].outcome is None


def test_apply_selective_identity():
    m = bloch_to_density(BlochState(-0.2, 0.3, 2.0))
    [(p, out)] = apply_selective(KrausSet.identity(), m)
    assert p == pytest.approx(1.0)
    assert out.allclose(m)


def test_apply_selective_coherent_source_channel(coherent_source_channel):
    branches = apply_selective(coherent_source_channel, bloch_to_density(BlochState(0.0, 1.0)))
    k0, k1 = coherent_source_channel
    alpha, beta = abs(k0[0, 0]) ** 2, abs(k0[1, 1]) ** 2
    assert branches[0].probability == pytest.approx((alpha + beta) / 2.0, abs=1e-12)
    assert branches[1].probability == pytest.approx((2.0 - alpha - beta) / 2.0, abs=1e-12)


def test_selective_mixture_matches_apply(rng):
    for _ in range(200):
        ch = sample_random_io(rng)
        m = bloch_to_density(random_states(rng, 1)[0])
        mixed = sum(b.probability * b.outcome.data for b in apply_selective(ch, m) if b.outcome is not None)
        np.testing.assert_allclose(mixed, apply(ch, m).data, rtol=0, atol=1e-12)


def test_trace_preserved(rng):
    for _ in range(200):
        out = apply(sample_random_io(rng), bloch_to_density(random_states(rng, 1)[0]))
        assert abs(np.trace(out.data) - 1.0) < 1e-12


@pytest.mark.parametrize(
    "ops,kind",
    [
        ((X,), ChannelKind.CPO),
        ((np.eye(2),), ChannelKind.CPO),
        ((H,), ChannelKind.NOT_INCOHERENT),
        ((np.diag([1.0, 0.0]), np.diag([0.0, 1.0])), ChannelKind.PIO),
        (PLUS_MINUS.operators, ChannelKind.IO),
    ],
)
def test_classify(ops, kind):
    assert classify(KrausSet(ops)).kind is kind


def test_classify_coherent_source_channel_is_sio(coherent_source_channel):
    assert classify(coherent_source_channel).kind is ChannelKind.SIO


def test_classify_flat_pio_mixture():
    ops = (S * np.eye(2), np.array([[S, 0.0], [0.0, 0.0]]), np.array([[0.0, S], [0.0, 0.0]]))
    result = classify(KrausSet(ops))
    assert result.kind is ChannelKind.PIO
    assert result.family_tags == ["K3", "K5"]
    assert [w for _, w in result.families] == pytest.approx([0.5, 0.5])


def test_classify_dephasing_families():
    families = pio_decomposition(KrausSet.dephasing())
    assert families == ((PioFamily.K1, 1.0),)


def test_classify_rejects_incomplete():
    with pytest.raises(IncompleteChannel):
        classify(KrausSet((np.diag([1.0, 0.5]),)))


def test_plus_minus_is_incoherent_not_strict():
    assert is_incoherent(PLUS_MINUS)
    assert not is_strictly_incoherent(PLUS_MINUS)


def test_classify_hierarchy_consistency(rng):
    for _ in range(300):
        ch = sample_random_io(rng)
        result = classify(ch)
        assert result.at_least(ChannelKind.IO)
        if result.at_least(ChannelKind.SIO):
            assert is_strictly_incoherent(ch)
        if result.at_least(ChannelKind.PIO):
            assert pio_decomposition(ch) is not None


def test_kind_ordering():
    assert ChannelKind.CPO.implies(ChannelKind.IO)
    assert ChannelKind.SIO.implies(ChannelKind.SIO)
    assert not ChannelKind.IO.implies(ChannelKind.PIO)
    assert not ChannelKind.NOT_INCOHERENT.implies(ChannelKind.IO)
    assert ChannelKind.parse(" sio ") is ChannelKind.SIO
    with pytest.raises(KeyError):
        ChannelKind.parse("mio")


def test_conjugate_identity_unchanged(coherent_source_channel):
    out = conjugate_channel(coherent_source_channel, DiagonalUnitary(), DiagonalUnitary())
    assert out.allclose(coherent_source_channel)


def test_conjugate_direct_substitution():
    phi = 0.7
    out = conjugate_channel(KrausSet.identity(), np.diag([np.exp(1j * phi), 1.0]), np.eye(2))
    np.testing.assert_allclose(out[0], np.diag([np.exp(1j * phi), 1.0]), atol=1e-15)


def test_conjugate_rejects_non_diagonal(coherent_source_channel):
    with pytest.raises(NotDiagonalUnitary):
        conjugate_channel(coherent_source_channel, X, np.eye(2))


def test_conjugate_preserves_class(rng, coherent_source_channel):
    u1 = DiagonalUnitary(tuple(rng.uniform(-np.pi, np.pi, 2)))
    u2 = DiagonalUnitary(tuple(rng.uniform(-np.pi, np.pi, 2)))
    assert classify(conjugate_channel(coherent_source_channel, u1, u2)).kind is ChannelKind.SIO
    for _ in range(1000):
        ch = sample_random_io(rng)
        u1 = DiagonalUnitary(tuple(rng.uniform(-np.pi, np.pi, 2)))
        u2 = DiagonalUnitary(tuple(rng.uniform(-np.pi, np.pi, 2)))
        conjugated = conjugate_channel(ch, u1, u2)
        assert conjugated.is_complete(1e-11)
        assert classify(conjugated).kind is classify(ch).kind


def test_lift_channel_moves_real_solution_to_phased_states(coherent_source_channel):
    source = BlochState(0.0, 1.0, 0.9)
    target = BlochState(0.5, 0.5, -1.3)
    _, _, pair = DephasingPair.from_states(source, target)
    assert lift_channel(coherent_source_channel, DephasingPair()) is coherent_source_channel
    assert_state_close(output_state(lift_channel(coherent_source_channel, pair), source), target)


def test_coherence_monotone_under_sampled_channels(rng):
    for _ in range(2000):
        ch = sample_random_io(rng)
        s = random_states(rng, 1)[0]
        assert l1_coherence(output_state(ch, s)) <= l1_coherence(s) + 1e-9
