"""
coherence-kit - single-qubit coherence transformations under incoherent operations
Reachable regions, channel synthesis and Monte-Carlo cross-checks for IO, SIO, PIO and CPO
"""

__version__ = "0.1.0"
__author__ = "coherence-kit Contributors"
__license__ = "MIT"

from coherence_kit.core import *
from coherence_kit.regions import region_contains, RegionReport
from coherence_kit.synthesis import synth_io, io_to_sio, synth_pio, synth_cpo
from coherence_kit.config import Settings, presets

__all__ = [
    "BlochState",
    "DensityMatrix",
    "KrausSet",
    "ChannelKind",
    "classify",
    "apply",
    "region_contains",
    "RegionReport",
    "synth_io",
    "io_to_sio",
    "synth_pio",
    "synth_cpo",
    "Settings",
    "presets",
]
