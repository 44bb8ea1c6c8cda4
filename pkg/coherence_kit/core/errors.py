"""
Exception hierarchy for coherence-kit.

Every error carries the CLI exit code it maps to.
"""


class CoherenceKitError(ValueError):
    """Base class for all library errors"""

    exit_code = 2


class ConfigurationError(CoherenceKitError):
    pass


class InvalidState(CoherenceKitError):
    """Bloch coordinates outside the Bloch ball"""


class InvalidMatrix(CoherenceKitError):
    """Matrix is not Hermitian, unit-trace and positive semidefinite"""


class IncompleteChannel(CoherenceKitError):
    """Kraus set violates Σ K†K = I"""

    exit_code = 5


class NotIncoherent(CoherenceKitError):
    """A Kraus operator has two nonzero entries in one column"""

    exit_code = 4


class NotDiagonalUnitary(CoherenceKitError):
    pass


class DegenerateRegion(CoherenceKitError):
    pass


class UnsupportedClass(CoherenceKitError):
    pass


class TargetUnreachable(CoherenceKitError):
    """Target state lies outside the transformation region"""

    exit_code = 3


class DegenerateSource(TargetUnreachable):
    """Incoherent source asked to produce a coherent target"""


class SamplerExhausted(CoherenceKitError):
    exit_code = 1


class NonConvergence(CoherenceKitError):
    exit_code = 1


class DocumentError(CoherenceKitError):
    """Malformed or unsupported channel document"""
