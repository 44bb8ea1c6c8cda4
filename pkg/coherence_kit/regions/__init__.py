from typing import Union
from coherence_kit.core.types import ChannelKind, REGION_TOL
from coherence_kit.core.errors import UnsupportedClass
from coherence_kit.core.qubit import BlochState
from coherence_kit.core.channels import ChannelClass
from coherence_kit.regions.base import RegionReport, TransformationRegion
from coherence_kit.regions.io import IoRegion, io_region_contains, io_region_boundary
from coherence_kit.regions.cpo import CpoRegion, cpo_orbit, cpo_reachable
from coherence_kit.regions.pio import Hexagon, PioRegion, pio_region_vertices, pio_region_contains

_REGIONS: dict[ChannelKind, type[TransformationRegion]] = {
    # SIO and IO reach the same set
    ChannelKind.IO: IoRegion,
    ChannelKind.SIO: IoRegion,
    ChannelKind.PIO: PioRegion,
    ChannelKind.CPO: CpoRegion,
}


def region_for(kind: Union[ChannelKind, ChannelClass, str], source: BlochState, tol: float = REGION_TOL) -> TransformationRegion:
    if isinstance(kind, ChannelClass):
        kind = kind.kind
    elif isinstance(kind, str):
        try:
            kind = ChannelKind.parse(kind)
        except KeyError:
            raise UnsupportedClass(f"unknown operation class {kind!r}")
    if kind not in _REGIONS:
        raise UnsupportedClass(f"no transformation region for class {kind.value}")
    return _REGIONS[kind](source, tol)


def region_contains(
    kind: Union[ChannelKind, ChannelClass, str],
    source: BlochState,
    target: BlochState,
    tol: float = REGION_TOL,
) -> RegionReport:
    """Dispatch a membership query to the region of the given class"""
    return region_for(kind, source, tol).contains(target)


__all__ = [
    "RegionReport",
    "TransformationRegion",
    "IoRegion",
    "CpoRegion",
    "PioRegion",
    "Hexagon",
    "io_region_contains",
    "io_region_boundary",
    "cpo_orbit",
    "cpo_reachable",
    "pio_region_vertices",
    "pio_region_contains",
    "region_for",
    "region_contains",
]
