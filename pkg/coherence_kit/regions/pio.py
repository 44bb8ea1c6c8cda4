"""
PIO transformation region: the convex hull of the six family outputs
(z, ±r), (−z, ±r) and (±1, 0), a hexagon in the (z, r) half-plane pair.
"""
from dataclasses import dataclass
import math
from coherence_kit.core.types import Binding, BindingConstraint, Point, REGION_TOL
from coherence_kit.core.qubit import BlochState
from coherence_kit.regions.base import RegionReport, TransformationRegion


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Hexagon:
    """Counterclockwise vertices starting at (1, 0), duplicates collapsed.

    An incoherent source gives the segment [(1, 0), (−1, 0)] and z = 0 gives a
    quadrilateral.
    """

    vertices: tuple[Point, ...]

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) < 3

    def edges(self) -> list[tuple[Point, Point]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def edge_margins(self, point: Point) -> list[float]:
        """Signed distance from each edge line, positive on the inner side"""
        margins = []
        for a, b in self.edges():
            length = math.dist(a, b)
            margins.append(_cross(a, b, point) / length)
        return margins

    def triangles(self) -> list[tuple[int, int, int]]:
        """Fan triangulation from vertex 0, as vertex index triples"""
        return [(0, i, i + 1) for i in range(1, len(self.vertices) - 1)]

    def is_convex(self, tol: float = REGION_TOL) -> bool:
        if self.is_segment:
            return True
        n = len(self.vertices)
        return all(
            _cross(self.vertices[i], self.vertices[(i + 1) % n], self.vertices[(i + 2) % n]) >= -tol
            for i in range(n)
        )

    def __len__(self) -> int:
        return len(self.vertices)


def pio_region_vertices(source: BlochState, tol: float = REGION_TOL) -> Hexagon:
    z, r = abs(source.z), abs(source.r)
    if r < tol:
        return Hexagon(((1.0, 0.0), (-1.0, 0.0)))
    candidates = [(1.0, 0.0), (z, r), (-z, r), (-1.0, 0.0), (-z, -r), (z, -r)]
    vertices: list[Point] = []
    for point in candidates:
        if not vertices or math.dist(point, vertices[-1]) > tol:
            vertices.append(point)
    if len(vertices) > 1 and math.dist(vertices[0], vertices[-1]) <= tol:
        vertices.pop()
    return Hexagon(tuple(vertices))


class PioRegion(TransformationRegion):
    def __init__(self, source: BlochState, tol: float = REGION_TOL):
        super().__init__(source, tol)
        self.hexagon = pio_region_vertices(source, tol)

    def evaluate(self, point: Point) -> tuple[float, Binding]:
        if self.hexagon.is_segment:
            return -abs(point[1]), self._degenerate()
        margins = self.hexagon.edge_margins(point)
        edge = min(range(len(margins)), key=margins.__getitem__)
        return margins[edge], Binding(BindingConstraint.HEXAGON_EDGE, edge)


def pio_region_contains(source: BlochState, target: BlochState, tol: float = REGION_TOL) -> RegionReport:
    return PioRegion(source, tol).contains(target)
