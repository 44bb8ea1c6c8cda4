from typing import Union
from dataclasses import dataclass
from enum import Enum
import numpy as np

Matrix2 = np.ndarray
Point = tuple[float, float]
Phases = tuple[float, float]
RealLike = Union[int, float, np.floating]

# Default numeric tolerances, mirrored by coherence_kit.config.Settings
STATE_TOL = 1e-9
PATTERN_TOL = 1e-9
COMPLETENESS_TOL = 1e-9
REGION_TOL = 1e-9
CASE_TOL = 1e-9


class ChannelKind(Enum):
    NOT_TRACE_PRESERVING = "NotTracePreserving"
    NOT_INCOHERENT = "NotIncoherent"
    IO = "IO"
    SIO = "SIO"
    PIO = "PIO"
    CPO = "CPO"

    @property
    def rank(self) -> int:
        """Position in CPO ⊂ PIO ⊂ SIO ⊂ IO; higher is more restrictive"""
        return _KIND_RANK[self]

    def implies(self, other: "ChannelKind") -> bool:
        """True when membership in this class implies membership in other"""
        if self.rank < _KIND_RANK[ChannelKind.IO] or other.rank < _KIND_RANK[ChannelKind.IO]:
            return self is other
        return self.rank >= other.rank

    @classmethod
    def parse(cls, name: str) -> "ChannelKind":
        for kind in cls:
            if kind.value.lower() == name.strip().lower():
                return kind
        raise KeyError(name)


_KIND_RANK = {
    ChannelKind.NOT_TRACE_PRESERVING: -1,
    ChannelKind.NOT_INCOHERENT: 0,
    ChannelKind.IO: 1,
    ChannelKind.SIO: 2,
    ChannelKind.PIO: 3,
    ChannelKind.CPO: 4,
}


class PioFamily(Enum):
    """The six single-qubit PIO Kraus families.

    Each family has two phases. ``entries`` lists the matrix position carrying
    each phase; ``single_operator`` tells whether both entries live in one
    Kraus operator (the CPO families) or in two separate operators.
    """

    K1 = "K1"
    K2 = "K2"
    K3 = "K3"
    K4 = "K4"
    K5 = "K5"
    K6 = "K6"

    @property
    def entries(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return _FAMILY_ENTRIES[self]

    @property
    def single_operator(self) -> bool:
        return self in (PioFamily.K5, PioFamily.K6)


_FAMILY_ENTRIES = {
    PioFamily.K1: ((0, 0), (1, 1)),
    PioFamily.K2: ((1, 0), (0, 1)),
    PioFamily.K3: ((0, 0), (0, 1)),
    PioFamily.K4: ((1, 0), (1, 1)),
    PioFamily.K5: ((0, 0), (1, 1)),
    PioFamily.K6: ((1, 0), (0, 1)),
}


class BindingConstraint(Enum):
    ELLIPSE = "Ellipse"
    COHERENCE_BOUND = "CoherenceBound"
    HEXAGON_EDGE = "HexagonEdge"
    ORBIT_POINT = "OrbitPoint"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class Binding:
    """Binding constraint of a region query, with the edge index for hexagons"""

    constraint: BindingConstraint
    index: int | None = None

    def label(self) -> str:
        if self.index is None:
            return self.constraint.value
        return f"{self.constraint.value}({self.index})"
