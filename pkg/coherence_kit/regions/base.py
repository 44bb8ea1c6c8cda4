from abc import ABC, abstractmethod
from dataclasses import dataclass
from coherence_kit.core.types import Binding, BindingConstraint, Point, REGION_TOL
from coherence_kit.core.qubit import BlochState


@dataclass(frozen=True)
class RegionReport:
    """Outcome of a reachability query.

    ``margin`` is positive strictly inside the region, zero on its boundary
    and negative outside. Only its sign is meaningful across region kinds.
    """

    verdict: bool
    margin: float
    binding: Binding

    @property
    def binding_constraint(self) -> str:
        return self.binding.label()

    @classmethod
    def from_margin(cls, margin: float, binding: Binding, tol: float = REGION_TOL) -> "RegionReport":
        return cls(verdict=bool(margin >= -tol), margin=float(margin), binding=binding)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "margin": self.margin,
            "binding_constraint": self.binding_constraint,
        }


class TransformationRegion(ABC):
    """Set of states reachable from one source under one class of operations"""

    def __init__(self, source: BlochState, tol: float = REGION_TOL):
        self.source = source
        self.tol = tol

    @property
    def z(self) -> float:
        return self.source.z

    @property
    def r(self) -> float:
        return abs(self.source.r)

    @property
    def is_degenerate(self) -> bool:
        return self.r < self.tol

    @abstractmethod
    def evaluate(self, point: Point) -> tuple[float, Binding]:
        """Return (margin, binding constraint) for a target point"""
        pass

    def contains(self, target: BlochState) -> RegionReport:
        # regions only depend on the real representative
        margin, binding = self.evaluate(target.point)
        return RegionReport.from_margin(margin, binding, self.tol)

    def contains_point(self, point: Point) -> bool:
        return self.evaluate(point)[0] >= -self.tol

    def _degenerate(self) -> Binding:
        return Binding(BindingConstraint.DEGENERATE)
