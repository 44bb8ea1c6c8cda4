from coherence_kit.oracle.sampler import sample_random_io, sample_random_pio
from coherence_kit.oracle.cloud import (
    summarize_cloud,
    SampleCloud,
    VerificationReport,
    coverage,
    reachable_cloud,
    verify_region_by_sampling,
)
from coherence_kit.oracle.extremum import ExtremumCertificate, certify_extremum

__all__ = [
    "sample_random_io",
    "sample_random_pio",
    "SampleCloud",
    "VerificationReport",
    "coverage",
    "reachable_cloud",
    "verify_region_by_sampling",
    "summarize_cloud",
    "ExtremumCertificate",
    "certify_extremum",
]
