from coherence_kit.synthesis.io import SynthesisSolution, synth_io, case_values
from coherence_kit.synthesis.sio import SioConversionSolution, io_to_sio
from coherence_kit.synthesis.pio import PioComponent, PioMixture, family_operators, synth_pio
from coherence_kit.synthesis.cpo import synth_cpo

__all__ = [
    "SynthesisSolution",
    "SioConversionSolution",
    "PioComponent",
    "PioMixture",
    "synth_io",
    "io_to_sio",
    "synth_pio",
    "synth_cpo",
    "family_operators",
    "case_values",
]
