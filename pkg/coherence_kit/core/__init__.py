from coherence_kit.core.qubit import (
    BlochState,
    DensityMatrix,
    DiagonalUnitary,
    DephasingPair,
    bloch_to_density,
    density_to_bloch,
    l1_coherence,
    phase_reduce,
)
from coherence_kit.core.channels import (
    KrausSet,
    ChannelClass,
    apply,
    apply_selective,
    classify,
    conjugate_channel,
)
from coherence_kit.core.types import ChannelKind, PioFamily

__all__ = [
    "BlochState",
    "DensityMatrix",
    "DiagonalUnitary",
    "DephasingPair",
    "bloch_to_density",
    "density_to_bloch",
    "l1_coherence",
    "phase_reduce",
    "KrausSet",
    "ChannelClass",
    "apply",
    "apply_selective",
    "classify",
    "conjugate_channel",
    "ChannelKind",
    "PioFamily",
]
