"""
IO / SIO transformation region.

From (z, r) a target (z', r') is reachable iff

    z'² r² + (1 − z²) r'² ≤ r²   and   |r'| ≤ |r|,

an ellipse capped by the two lines r' = ±r. The first inequality is kept in
its denominator-free form so that r = 0 (target forced onto r' = 0) needs no
special case.
"""
import math
import numpy as np
from coherence_kit.core.types import Binding, BindingConstraint, Point, REGION_TOL
from coherence_kit.core.errors import DegenerateRegion, CoherenceKitError
from coherence_kit.core.qubit import BlochState
from coherence_kit.regions.base import RegionReport, TransformationRegion


class IoRegion(TransformationRegion):
    def evaluate(self, point: Point) -> tuple[float, Binding]:
        z, r = self.z, self.r
        zt, rt = point
        ellipse = r * r - (zt * zt * r * r + (1.0 - z * z) * rt * rt)
        bound = r - abs(rt)
        # max(r², 1) is always 1 on the Bloch ball
        margin = min(ellipse, bound)
        if self.is_degenerate:
            return margin, self._degenerate()
        if ellipse <= bound:
            return margin, Binding(BindingConstraint.ELLIPSE)
        return margin, Binding(BindingConstraint.COHERENCE_BOUND)

    def boundary(self, n: int) -> list[Point]:
        """n points on the closed boundary, counterclockwise from (1, 0)"""
        if n < 4:
            raise CoherenceKitError(f"boundary needs at least 4 points, got {n}")
        if self.is_degenerate:
            raise DegenerateRegion("source is incoherent, the region is the segment r' = 0")
        r = self.r
        semi_axis = r / math.sqrt(1.0 - self.z * self.z)
        t = 2.0 * np.pi * np.arange(n) / n
        zs = np.cos(t)
        rs = np.clip(semi_axis * np.sin(t), -r, r)
        return [(float(a), float(b)) for a, b in zip(zs, rs)]


def io_region_contains(source: BlochState, target: BlochState, tol: float = REGION_TOL) -> RegionReport:
    return IoRegion(source, tol).contains(target)


def io_region_boundary(source: BlochState, n: int) -> list[Point]:
    return IoRegion(source).boundary(n)
