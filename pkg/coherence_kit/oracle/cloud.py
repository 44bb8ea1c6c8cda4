"""
Monte-Carlo reachable clouds and the sampling cross-check of the regions.

Work is split into fixed-size chunks seeded from one SeedSequence in chunk
order, so a cloud is identical whether chunks run serially or on a pool.
"""
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Optional
import logging
import numpy as np
from scipy.spatial import cKDTree
from coherence_kit.config.settings import Settings
from coherence_kit.core.errors import CoherenceKitError
from coherence_kit.core.qubit import BlochState, bloch_to_density
from coherence_kit.core.channels import apply
from coherence_kit.regions.pio import PioRegion
from coherence_kit.oracle.sampler import sample_operators, sample_random_pio

logger = logging.getLogger(__name__)

# l1 coherence may grow by at most this much under an incoherent channel
MONOTONICITY_TOL = 1e-9
PIO_STREAM = 0x50494F
# hexagon cross-check draws per verification unless given
PIO_SAMPLE_CAP = 10_000


@dataclass(frozen=True, eq=False)
class SampleCloud:
    source: BlochState
    points: np.ndarray
    seed: int
    channel_count: int
    max_kraus: int

    def __len__(self) -> int:
        return len(self.points)

    @property
    def z(self) -> np.ndarray:
        return self.points[:, 0]

    @property
    def r(self) -> np.ndarray:
        return self.points[:, 1]


@dataclass(frozen=True)
class VerificationReport:
    """Counts of sampled points breaking an analytic claim, plus coverage"""

    violations: int
    coverage: float
    monotonicity_violations: int
    pio_violations: int
    pio_samples: int
    n: int
    seed: int
    max_margin_violation: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.monotonicity_violations == 0 and self.pio_violations == 0

    def to_dict(self) -> dict:
        return {
            "violations": self.violations,
            "coverage": self.coverage,
            "monotonicity_violations": self.monotonicity_violations,
            "pio_violations": self.pio_violations,
            "pio_samples": self.pio_samples,
            "n": self.n,
            "seed": self.seed,
        }


def _chunk_points(task: tuple[np.ndarray, int, np.random.SeedSequence, int, int, float]) -> np.ndarray:
    rho, size, seed_seq, max_kraus, attempts, sio_fraction = task
    rng = np.random.default_rng(seed_seq)
    out = np.empty((size, 2))
    for i in range(size):
        ops = sample_operators(rng, max_kraus, attempts, sio_fraction)
        m = np.einsum("nij,jk,nlk->il", ops, rho, ops.conj())
        out[i, 0] = (m[0, 0] - m[1, 1]).real
        out[i, 1] = 2.0 * abs(m[0, 1])
    return out


def reachable_cloud(
    source: BlochState,
    n: int,
    seed: int,
    max_kraus: int = 4,
    settings: Optional[Settings] = None,
    workers: Optional[int] = None,
) -> SampleCloud:
    """Apply n random incoherent channels to source and keep the (z, |r|) outputs"""
    if n < 1:
        raise CoherenceKitError(f"cloud size must be positive, got {n}")
    settings = settings or Settings()
    rho = bloch_to_density(source).data
    chunk = settings.chunk_size
    sizes = [min(chunk, n - start) for start in range(0, n, chunk)]
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    tasks = [
        (rho, size, child, max_kraus, settings.sampler_attempts, settings.sio_fraction)
        for size, child in zip(sizes, children)
    ]
    if workers and workers > 1 and len(tasks) > 1:
        logger.debug("sampling %d chunks on %d workers", len(tasks), workers)
        with Pool(processes=workers) as pool:
            parts = pool.map(_chunk_points, tasks)
    else:
        parts = [_chunk_points(task) for task in tasks]
    return SampleCloud(source, np.concatenate(parts), seed, n, max_kraus)


def io_margins(source: BlochState, zs: np.ndarray, rs: np.ndarray) -> np.ndarray:
    """Vectorized IoRegion margins"""
    z, r = source.z, abs(source.r)
    ellipse = r * r - (zs * zs * r * r + (1.0 - z * z) * rs * rs)
    bound = r - np.abs(rs)
    return np.minimum(ellipse, bound)


def coverage_grid(source: BlochState, spacing: float = 0.02, tol: float = 1e-9) -> np.ndarray:
    """Grid points of the r >= 0 half of the IO region"""
    steps = int(round(1.0 / spacing))
    zs, rs = np.meshgrid(np.linspace(-1.0, 1.0, 2 * steps + 1), np.linspace(0.0, 1.0, steps + 1))
    zs, rs = zs.ravel(), rs.ravel()
    inside = (io_margins(source, zs, rs) >= -tol) & (zs * zs + rs * rs <= 1.0 + tol)
    return np.column_stack([zs[inside], rs[inside]])


def coverage(cloud: SampleCloud, spacing: float = 0.02, radius: float = 0.02) -> float:
    """Fraction of in-region grid points within radius of some cloud point"""
    grid = coverage_grid(cloud.source, spacing)
    if len(grid) == 0:
        return 1.0
    distances, _ = cKDTree(cloud.points).query(grid, k=1)
    return float(np.mean(distances <= radius))


def summarize_cloud(
    cloud: SampleCloud,
    settings: Optional[Settings] = None,
    pio_samples: Optional[int] = None,
) -> VerificationReport:
    """Check a cloud against the IO region and run the PIO hexagon cross-check"""
    settings = settings or Settings()
    tol = settings.region_tol
    source, n, seed = cloud.source, cloud.channel_count, cloud.seed
    margins = io_margins(source, cloud.z, cloud.r)
    violations = int(np.sum(margins < -tol))
    monotonicity = int(np.sum(cloud.r > abs(source.r) + MONOTONICITY_TOL))
    if violations:
        logger.warning("%d of %d sampled outputs fall outside the IO region", violations, n)

    pio_count = min(n, PIO_SAMPLE_CAP) if pio_samples is None else pio_samples
    pio_region = PioRegion(source, tol)
    rho = bloch_to_density(source)
    rng = np.random.default_rng([seed, PIO_STREAM])
    pio_violations = 0
    for _ in range(pio_count):
        out = apply(sample_random_pio(rng).kraus(), rho).data
        point = (float((out[0, 0] - out[1, 1]).real), 2.0 * abs(complex(out[0, 1])))
        if not pio_region.contains_point(point):
            pio_violations += 1
        if point[1] > abs(source.r) + MONOTONICITY_TOL:
            monotonicity += 1
    if pio_violations:
        logger.warning("%d sampled PIO outputs fall outside the hexagon", pio_violations)

    return VerificationReport(
        violations=violations,
        coverage=coverage(cloud, settings.coverage_spacing, settings.coverage_radius),
        monotonicity_violations=monotonicity,
        pio_violations=pio_violations,
        pio_samples=pio_count,
        n=n,
        seed=seed,
        max_margin_violation=float(max(0.0, -margins.min())),
    )


def verify_region_by_sampling(
    source: BlochState,
    n: int,
    seed: int,
    max_kraus: int = 4,
    settings: Optional[Settings] = None,
    workers: Optional[int] = None,
    pio_samples: Optional[int] = None,
) -> VerificationReport:
    cloud = reachable_cloud(source, n, seed, max_kraus, settings, workers)
    return summarize_cloud(cloud, settings, pio_samples)
