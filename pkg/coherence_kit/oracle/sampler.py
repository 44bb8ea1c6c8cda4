"""
Random complete incoherent channels.

Each operator K_n sends column j to a single row f_n(j), so a channel is two
coefficient vectors v0, v1 (one entry per operator) plus the row maps.
Completeness asks for |v0| = |v1| = 1 and for v0, v1 to be orthogonal on the
operators where f_n(0) = f_n(1).
"""
from typing import Union
import logging
import numpy as np
from coherence_kit.core.types import PioFamily
from coherence_kit.core.errors import CoherenceKitError, SamplerExhausted
from coherence_kit.core.channels import KrausSet
from coherence_kit.synthesis.pio import PioComponent, PioMixture

logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.Generator, np.random.SeedSequence, None]

# residual of Σ K†K − I accepted for a draw
RESIDUAL_LIMIT = 1e-12
# a second column shorter than this after orthogonalization is rejected
COLLAPSE_LIMIT = 1e-6


def _complex_normal(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def _assemble(rows0: np.ndarray, rows1: np.ndarray, v0: np.ndarray, v1: np.ndarray) -> np.ndarray:
    k = len(v0)
    ops = np.zeros((k, 2, 2), dtype=complex)
    ops[np.arange(k), rows0, 0] = v0
    ops[np.arange(k), rows1, 1] = v1
    return ops


def _residual(ops: np.ndarray) -> float:
    total = np.einsum("nji,njk->ik", ops.conj(), ops)
    return float(np.linalg.norm(total - np.eye(2)))


def _draw_sio(rng: np.random.Generator, k: int) -> np.ndarray:
    """Diagonal or anti-diagonal operators; columns normalized exactly"""
    rows0 = rng.integers(0, 2, size=k)
    rows1 = 1 - rows0
    v0 = _complex_normal(rng, k)
    v1 = _complex_normal(rng, k)
    return _assemble(rows0, rows1, v0 / np.linalg.norm(v0), v1 / np.linalg.norm(v1))


def _draw_io(rng: np.random.Generator, k: int) -> np.ndarray | None:
    rows0 = rng.integers(0, 2, size=k)
    rows1 = rng.integers(0, 2, size=k)
    v0 = _complex_normal(rng, k)
    v1 = _complex_normal(rng, k)
    v0 /= np.linalg.norm(v0)
    overlap = rows0 == rows1
    w = np.where(overlap, v0, 0.0)
    ww = np.vdot(w, w).real
    if ww > 0.0:
        v1 = v1 - (np.vdot(w, v1) / ww) * w
    norm = np.linalg.norm(v1)
    if norm < COLLAPSE_LIMIT:
        return None
    return _assemble(rows0, rows1, v0, v1 / norm)


def sample_operators(
    rng: np.random.Generator,
    max_kraus: int = 4,
    attempts: int = 10_000,
    sio_fraction: float = 0.5,
) -> np.ndarray:
    """(k, 2, 2) array of a random complete incoherent channel"""
    if max_kraus < 2:
        raise CoherenceKitError(f"max_kraus must be at least 2, got {max_kraus}")
    for attempt in range(attempts):
        k = int(rng.integers(1, max_kraus + 1))
        ops = _draw_sio(rng, k) if rng.random() < sio_fraction else _draw_io(rng, k)
        if ops is not None and _residual(ops) <= RESIDUAL_LIMIT:
            return ops
        logger.debug("rejected draw %d", attempt)
    raise SamplerExhausted(f"no complete incoherent channel after {attempts} draws")


def sample_random_io(
    rng_seed: SeedLike,
    max_kraus: int = 4,
    attempts: int = 10_000,
    sio_fraction: float = 0.5,
) -> KrausSet:
    """Draw a random complete incoherent Kraus set.

    ``rng_seed`` is a seed or an existing Generator; equal seeds give equal
    channels.
    """
    rng = np.random.default_rng(rng_seed)
    return KrausSet(tuple(sample_operators(rng, max_kraus, attempts, sio_fraction)))


def sample_random_pio(rng_seed: SeedLike) -> PioMixture:
    """Dirichlet-weighted mixture of all six PIO families with random phases"""
    rng = np.random.default_rng(rng_seed)
    weights = rng.dirichlet(np.ones(len(PioFamily)))
    phases = rng.uniform(0.0, 2.0 * np.pi, size=(len(PioFamily), 2))
    return PioMixture(
        tuple(
            PioComponent(float(w), family, (float(p[0]), float(p[1])))
            for w, family, p in zip(weights, PioFamily, phases)
        )
    )
