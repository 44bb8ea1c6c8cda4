"""
PIO synthesis as a convex mixture of the six single-qubit PIO families.
"""
from dataclasses import dataclass, field
from typing import Iterator
import logging
import math
import numpy as np
from coherence_kit.core.types import PioFamily, Phases, Point, REGION_TOL
from coherence_kit.core.errors import TargetUnreachable
from coherence_kit.core.qubit import BlochState, DensityMatrix, DephasingPair
from coherence_kit.core.channels import KrausSet, apply
from coherence_kit.regions.pio import Hexagon, pio_region_contains, pio_region_vertices

logger = logging.getLogger(__name__)

# weights below this are dropped from a mixture
WEIGHT_CUTOFF = 1e-12


def family_operators(family: PioFamily, phases: Phases = (0.0, 0.0)) -> KrausSet:
    """Kraus operators of a family with the phase e^{i phases[k]} on entries[k]"""
    entries = []
    for (row, col), phase in zip(family.entries, phases):
        k = np.zeros((2, 2), dtype=complex)
        k[row, col] = np.exp(1j * phase)
        entries.append(k)
    if family.single_operator:
        return KrausSet((entries[0] + entries[1],))
    return KrausSet(tuple(entries))


@dataclass(frozen=True)
class PioComponent:
    weight: float
    family: PioFamily
    phases: Phases = (0.0, 0.0)

    def kraus(self) -> KrausSet:
        return family_operators(self.family, self.phases)

    def to_dict(self) -> dict:
        return {"weight": self.weight, "family": self.family.value, "phases": list(self.phases)}


@dataclass(frozen=True)
class PioMixture:
    """Σ p_i Λ_i over PIO family channels"""

    components: tuple[PioComponent, ...] = field(default=())

    def __iter__(self) -> Iterator[PioComponent]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    @property
    def weights(self) -> list[float]:
        return [c.weight for c in self.components]

    def total_weight(self) -> float:
        return math.fsum(self.weights)

    def kraus(self) -> KrausSet:
        """One flat Kraus set, each family operator scaled by √p"""
        ops = [math.sqrt(c.weight) * k for c in self.components for k in c.kraus()]
        return KrausSet(tuple(ops))

    def apply(self, m: DensityMatrix) -> DensityMatrix:
        total = sum(c.weight * apply(c.kraus(), m).data for c in self.components)
        return DensityMatrix(0.5 * (total + total.conj().T))

    def to_dict(self) -> list[dict]:
        return [c.to_dict() for c in self.components]


def _vertex_component(vertex: Point, source: BlochState, tol: float) -> tuple[PioFamily, Phases]:
    vz, vr = vertex
    if abs(vr) < tol:
        return (PioFamily.K3, (0.0, 0.0)) if vz > 0 else (PioFamily.K4, (0.0, 0.0))
    family = PioFamily.K5 if abs(vz - source.z) <= tol else PioFamily.K6
    phases = (0.0, 0.0) if abs(vr - source.r) <= tol else (0.0, math.pi)
    return family, phases


def _barycentric(p: Point, a: Point, b: Point, c: Point) -> tuple[float, float, float] | None:
    det = (b[1] - c[1]) * (a[0] - c[0]) + (c[0] - b[0]) * (a[1] - c[1])
    if abs(det) < 1e-15:
        return None
    wa = ((b[1] - c[1]) * (p[0] - c[0]) + (c[0] - b[0]) * (p[1] - c[1])) / det
    wb = ((c[1] - a[1]) * (p[0] - c[0]) + (a[0] - c[0]) * (p[1] - c[1])) / det
    return wa, wb, 1.0 - wa - wb


def hexagon_weights(hexagon: Hexagon, point: Point) -> dict[int, float]:
    """Convex weights over hexagon vertex indices, at most three nonzero"""
    if hexagon.is_segment:
        z = max(-1.0, min(1.0, point[0]))
        return {0: (1.0 + z) / 2.0, 1: (1.0 - z) / 2.0}
    best: tuple[float, tuple[int, int, int], tuple[float, float, float]] | None = None
    for triangle in hexagon.triangles():
        weights = _barycentric(point, *(hexagon.vertices[i] for i in triangle))
        if weights is None:
            continue
        worst = min(weights)
        if best is None or worst > best[0]:
            best = (worst, triangle, weights)
    assert best is not None
    _, triangle, weights = best
    clipped = [max(0.0, w) for w in weights]
    total = sum(clipped)
    result: dict[int, float] = {}
    for index, w in zip(triangle, clipped):
        result[index] = result.get(index, 0.0) + w / total
    return result


def _fold_phases(family: PioFamily, phases: Phases, pair: DephasingPair) -> Phases:
    # entry (i, j) of U₂ K U₁† picks up arg(u2_i) − arg(u1_j)
    u1, u2 = pair.u1.phases, pair.u2.phases
    return tuple(
        float(phase + u2[row] - u1[col]) for (row, col), phase in zip(family.entries, phases)
    )


def synth_pio(source: BlochState, target: BlochState, tol: float = REGION_TOL) -> PioMixture:
    report = pio_region_contains(source, target, tol)
    if not report.verdict:
        raise TargetUnreachable(
            f"({target.z:.6g}, {target.r:.6g}) lies outside the PIO hexagon of "
            f"({source.z:.6g}, {source.r:.6g}), margin {report.margin:.3e} ({report.binding_constraint})"
        )
    reduced_source, reduced_target, pair = DephasingPair.from_states(source, target)
    hexagon = pio_region_vertices(reduced_source, tol)
    weights = hexagon_weights(hexagon, reduced_target.point)
    kept = {i: w for i, w in weights.items() if w > WEIGHT_CUTOFF}
    total = sum(kept.values())

    components = []
    for index, w in sorted(kept.items()):
        family, phases = _vertex_component(hexagon.vertices[index], reduced_source, tol)
        components.append(PioComponent(w / total, family, _fold_phases(family, phases, pair)))
    logger.debug("PIO mixture %s", [(c.family.value, round(c.weight, 6)) for c in components])
    return PioMixture(tuple(components))
