import math
from coherence_kit.core.types import Binding, BindingConstraint, Point, REGION_TOL
from coherence_kit.core.qubit import BlochState
from coherence_kit.regions.base import RegionReport, TransformationRegion


def cpo_orbit(source: BlochState, tol: float = REGION_TOL) -> list[Point]:
    """The four phased-permutation images (z, ±r), (−z, ±r), duplicates collapsed"""
    z, r = source.z, source.r
    orbit: list[Point] = []
    for point in ((z, r), (z, -r), (-z, r), (-z, -r)):
        if all(math.dist(point, seen) > tol for seen in orbit):
            orbit.append(point)
    return orbit


class CpoRegion(TransformationRegion):
    def __init__(self, source: BlochState, tol: float = REGION_TOL):
        super().__init__(source, tol)
        self.orbit = cpo_orbit(source, tol)

    def evaluate(self, point: Point) -> tuple[float, Binding]:
        nearest = min(math.dist(point, p) for p in self.orbit)
        return -nearest, Binding(BindingConstraint.ORBIT_POINT)


def cpo_reachable(source: BlochState, target: BlochState, tol: float = REGION_TOL) -> RegionReport:
    return CpoRegion(source, tol).contains(target)
