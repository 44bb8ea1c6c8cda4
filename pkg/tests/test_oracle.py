import numpy as np
import pytest
from coherence_kit.config import Settings
from coherence_kit.core.types import ChannelKind, PioFamily
from coherence_kit.core.errors import CoherenceKitError, SamplerExhausted
from coherence_kit.core.qubit import BlochState, bloch_to_density, random_state
from coherence_kit.core.channels import apply, classify
from coherence_kit.oracle import (
    coverage,
    reachable_cloud,
    sample_random_io,
    sample_random_pio,
    summarize_cloud,
    verify_region_by_sampling,
)
from coherence_kit.oracle.cloud import coverage_grid, io_margins
from coherence_kit.regions import IoRegion

SMALL_CHUNKS = Settings(chunk_size=64)


class TestSampler:
    def test_deterministic(self):
        a = sample_random_io(7)
        b = sample_random_io(7)
        assert len(a) == len(b)
        assert np.array_equal(a.stacked(), b.stacked())

    @pytest.mark.parametrize("max_kraus", [2, 3, 4])
    def test_complete_and_incoherent(self, max_kraus):
        for seed in range(200):
            ch = sample_random_io(seed, max_kraus=max_kraus)
            assert 1 <= len(ch) <= max_kraus
            assert ch.completeness_residual() <= 1e-12
            assert classify(ch).at_least(ChannelKind.IO)

    def test_outputs_are_states(self, rng):
        for _ in range(200):
            ch = sample_random_io(rng)
            out = apply(ch, bloch_to_density(random_state(rng)))
            assert np.min(np.linalg.eigvalsh(out.data)) >= -1e-12

    def test_generator_is_consumed(self, rng):
        a = sample_random_io(rng)
        b = sample_random_io(rng)
        assert not (len(a) == len(b) and np.array_equal(a.stacked(), b.stacked()))

    def test_max_kraus_floor(self):
        with pytest.raises(CoherenceKitError):
            sample_random_io(0, max_kraus=1)

    def test_exhausted(self):
        with pytest.raises(SamplerExhausted):
            sample_random_io(0, attempts=0)

    def test_sio_only_draws_are_strict(self):
        for seed in range(100):
            kind = classify(sample_random_io(seed, sio_fraction=1.0)).kind
            assert kind in (ChannelKind.SIO, ChannelKind.PIO, ChannelKind.CPO)

    def test_random_pio(self):
        mixture = sample_random_pio(3)
        assert [c.family for c in mixture] == list(PioFamily)
        assert mixture.total_weight() == pytest.approx(1.0, abs=1e-12)
        assert mixture.kraus().is_complete(1e-12)
        assert classify(mixture.kraus()).kind is ChannelKind.PIO


class TestCloud:
    def test_points_inside_region(self):
        source = BlochState(0.3, 0.5)
        cloud = reachable_cloud(source, 3000, seed=7)
        assert len(cloud) == 3000
        assert cloud.points.shape == (3000, 2)
        region = IoRegion(source)
        assert all(region.contains_point(tuple(p)) for p in cloud.points[:500])
        assert np.all(io_margins(source, cloud.z, cloud.r) >= -1e-9)
        assert np.all(cloud.z**2 + cloud.r**2 <= 1.0 + 1e-9)

    def test_incoherent_source_stays_incoherent(self):
        cloud = reachable_cloud(BlochState(0.4, 0.0), 500, seed=1)
        assert np.all(np.abs(cloud.r) <= 1e-9)

    def test_seed_determinism(self):
        source = BlochState(0.1, 0.6, 0.4)
        a = reachable_cloud(source, 300, seed=11, settings=SMALL_CHUNKS)
        b = reachable_cloud(source, 300, seed=11, settings=SMALL_CHUNKS)
        c = reachable_cloud(source, 300, seed=12, settings=SMALL_CHUNKS)
        assert np.array_equal(a.points, b.points)
        assert not np.array_equal(a.points, c.points)

    def test_workers_match_serial(self):
        source = BlochState(0.2, 0.5)
        serial = reachable_cloud(source, 300, seed=5, settings=SMALL_CHUNKS)
        pooled = reachable_cloud(source, 300, seed=5, settings=SMALL_CHUNKS, workers=2)
        assert np.array_equal(serial.points, pooled.points)

    def test_size_validation(self):
        with pytest.raises(CoherenceKitError):
            reachable_cloud(BlochState(0.0, 1.0), 0, seed=0)

    def test_coverage_grid_respects_region(self):
        source = BlochState(0.6, 0.3)
        grid = coverage_grid(source, 0.05)
        assert len(grid) > 0
        assert np.all(io_margins(source, grid[:, 0], grid[:, 1]) >= -1e-9)
        assert np.all(grid[:, 1] >= 0.0)

    def test_coverage_is_a_fraction(self):
        cloud = reachable_cloud(BlochState(0.0, 1.0), 2000, seed=3)
        value = coverage(cloud, 0.05, 0.05)
        assert 0.5 < value <= 1.0


class TestVerification:
    def test_small_run_passes(self):
        report = verify_region_by_sampling(BlochState(0.3, 0.5), 2000, seed=7, pio_samples=500)
        assert report.violations == 0
        assert report.monotonicity_violations == 0
        assert report.pio_violations == 0
        assert report.pio_samples == 500
        assert report.passed

    def test_single_sample(self):
        report = verify_region_by_sampling(BlochState(0.3, 0.5), 1, seed=0)
        assert report.violations == 0
        assert report.n == 1
        assert report.pio_samples == 1

    def test_summary_dict(self):
        cloud = reachable_cloud(BlochState(-0.2, 0.4), 200, seed=9)
        data = summarize_cloud(cloud, pio_samples=50).to_dict()
        assert data["n"] == 200 and data["seed"] == 9
        assert {"violations", "coverage", "monotonicity_violations", "pio_violations"} <= set(data)
