"""
Single-qubit states in cylindrical Bloch coordinates.

A state is stored as (z, r, theta): z is the population imbalance, r the signed
off-diagonal magnitude and theta its phase, so that

    rho = 1/2 [[1 + z, r e^{-i theta}], [r e^{i theta}, 1 - z]].

Every state is diagonal-unitarily equivalent to its real representative
(z, r, 0), which is all the transformation regions depend on.
"""
from dataclasses import dataclass
import math
import numpy as np
from coherence_kit.core.types import Matrix2, Phases, Point, STATE_TOL
from coherence_kit.core.errors import InvalidState, InvalidMatrix, NotDiagonalUnitary

TWO_PI = 2.0 * math.pi


def _normalize_angle(theta: float) -> float:
    theta = math.fmod(float(theta), TWO_PI)
    if theta < 0.0:
        theta += TWO_PI
    # fmod can land exactly on 2π after the shift
    return 0.0 if theta >= TWO_PI else theta


@dataclass(frozen=True)
class BlochState:
    """Qubit state in cylindrical Bloch coordinates"""

    z: float
    r: float
    theta: float = 0.0

    def __post_init__(self):
        z, r = float(self.z), float(self.r)
        if not (math.isfinite(z) and math.isfinite(r) and math.isfinite(float(self.theta))):
            raise InvalidState(f"non-finite Bloch coordinates ({self.z}, {self.r}, {self.theta})")
        if abs(z) > 1.0 + STATE_TOL or abs(r) > 1.0 + STATE_TOL:
            raise InvalidState(f"coordinates out of range: z={z}, r={r}")
        if z * z + r * r > 1.0 + STATE_TOL:
            raise InvalidState(f"state outside the Bloch sphere: z²+r² = {z * z + r * r}")
        theta = 0.0 if abs(r) < STATE_TOL else _normalize_angle(self.theta)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "theta", theta)

    @classmethod
    def checked(cls, z: float, r: float, theta: float = 0.0, tol: float = STATE_TOL) -> "BlochState":
        """Validate against ``tol`` and pull points just outside the sphere onto it"""
        radius = math.hypot(z, r)
        if not math.isfinite(radius) or radius > 1.0 + tol:
            raise InvalidState(f"state outside the Bloch sphere: z²+r² = {z * z + r * r}")
        if radius > 1.0:
            z, r = z / radius, r / radius
        return cls(z, r, theta)

    @property
    def point(self) -> Point:
        """The (z, r) pair of the real representative"""
        return (self.z, self.r)

    @property
    def is_incoherent(self) -> bool:
        return abs(self.r) < STATE_TOL

    @classmethod
    def from_point(cls, point: Point, theta: float = 0.0) -> "BlochState":
        return cls(point[0], point[1], theta)

    @classmethod
    def pure(cls, r: float, upper: bool = True) -> "BlochState":
        """Pure state with coherence |r| on the upper (z >= 0) or lower hemisphere"""
        z = math.sqrt(max(0.0, 1.0 - r * r))
        return cls(z if upper else -z, r)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite 2×2 matrix"""

    data: Matrix2

    def __post_init__(self):
        m = np.array(self.data, dtype=complex)
        if m.shape != (2, 2):
            raise InvalidMatrix(f"expected a 2×2 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise InvalidMatrix("matrix has non-finite entries")
        if np.max(np.abs(m - m.conj().T)) > STATE_TOL:
            raise InvalidMatrix("matrix is not Hermitian")
        if abs(np.trace(m) - 1.0) > STATE_TOL:
            raise InvalidMatrix(f"trace is {np.trace(m).real:.12g}, expected 1")
        if np.min(np.linalg.eigvalsh(m)) < -STATE_TOL:
            raise InvalidMatrix("matrix has a negative eigenvalue")
        m.setflags(write=False)
        object.__setattr__(self, "data", m)

    def __getitem__(self, index: tuple[int, int]) -> complex:
        return complex(self.data[index])

    def allclose(self, other: "DensityMatrix", atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.data, other.data, rtol=0.0, atol=atol))

    def conjugated(self, u: Matrix2) -> "DensityMatrix":
        """Return U ρ U†"""
        return DensityMatrix(u @ self.data @ u.conj().T)

    def __repr__(self) -> str:
        return f"DensityMatrix({np.array2string(self.data, precision=6)})"


@dataclass(frozen=True)
class DiagonalUnitary:
    """diag(e^{i phases[0]}, e^{i phases[1]})"""

    phases: Phases = (0.0, 0.0)

    def matrix(self) -> Matrix2:
        return np.diag(np.exp(1j * np.asarray(self.phases, dtype=float)))

    def dagger(self) -> "DiagonalUnitary":
        return DiagonalUnitary((-self.phases[0], -self.phases[1]))

    def compose(self, other: "DiagonalUnitary") -> "DiagonalUnitary":
        """Matrix product self · other"""
        return DiagonalUnitary((self.phases[0] + other.phases[0], self.phases[1] + other.phases[1]))

    def is_identity(self, tol: float = STATE_TOL) -> bool:
        return bool(np.allclose(self.matrix(), np.eye(2), rtol=0.0, atol=tol))

    @classmethod
    def identity(cls) -> "DiagonalUnitary":
        return cls((0.0, 0.0))

    @classmethod
    def from_matrix(cls, u: Matrix2, tol: float = STATE_TOL) -> "DiagonalUnitary":
        u = np.asarray(u, dtype=complex)
        if u.shape != (2, 2):
            raise NotDiagonalUnitary(f"expected a 2×2 matrix, got shape {u.shape}")
        if abs(u[0, 1]) > tol or abs(u[1, 0]) > tol:
            raise NotDiagonalUnitary("matrix has off-diagonal entries")
        if abs(abs(u[0, 0]) - 1.0) > tol or abs(abs(u[1, 1]) - 1.0) > tol:
            raise NotDiagonalUnitary("diagonal entries are not unit-modulus")
        return cls((float(np.angle(u[0, 0])), float(np.angle(u[1, 1]))))


@dataclass(frozen=True)
class DephasingPair:
    """Input-side and output-side diagonal unitaries of a phase conjugation.

    ``u1`` rotates the source state, ``u2`` the target state; a channel on the
    real representatives becomes K = U₂ K̃ U₁† on the original states.
    """

    u1: DiagonalUnitary = DiagonalUnitary()
    u2: DiagonalUnitary = DiagonalUnitary()

    @classmethod
    def from_states(cls, source: BlochState, target: BlochState) -> tuple[BlochState, BlochState, "DephasingPair"]:
        """Phase-reduce both endpoints; returns (source~, target~, pair)"""
        reduced_source, u1 = phase_reduce(source)
        reduced_target, u2 = phase_reduce(target)
        return reduced_source, reduced_target, cls(u1, u2)

    @property
    def is_trivial(self) -> bool:
        return self.u1.is_identity() and self.u2.is_identity()


def bloch_to_density(s: BlochState) -> DensityMatrix:
    """Density matrix of a Bloch state"""
    off = s.r * complex(math.cos(s.theta), math.sin(s.theta))
    return DensityMatrix(0.5 * np.array([[1.0 + s.z, off.conjugate()], [off, 1.0 - s.z]], dtype=complex))


def density_to_bloch(m: DensityMatrix, tol: float = STATE_TOL) -> BlochState:
    """Bloch coordinates of a density matrix; r is returned nonnegative"""
    if not isinstance(m, DensityMatrix):
        m = DensityMatrix(m)
    z = float((m.data[0, 0] - m.data[1, 1]).real)
    r = 2.0 * float(abs(m.data[0, 1]))
    theta = 0.0 if r < tol else float(np.angle(m.data[1, 0]))
    # round-off can push a pure state a hair outside the sphere
    norm = math.hypot(z, r)
    if norm > 1.0:
        z, r = z / norm, r / norm
    return BlochState(z, r, theta)


def l1_coherence(s: BlochState) -> float:
    """l1 norm of coherence, Σ_{i≠j} |ρ_ij| = |r|"""
    return abs(s.r)


def phase_reduce(s: BlochState) -> tuple[BlochState, DiagonalUnitary]:
    """Split a state into its real representative and U with ρ = U ρ̃ U†"""
    u = DiagonalUnitary((-s.theta / 2.0, s.theta / 2.0))
    return BlochState(s.z, s.r, 0.0), u


def random_state(rng: np.random.Generator, pure: bool = False, signed: bool = True, phase: bool = True) -> BlochState:
    """Uniform state in the Bloch ball (or on its surface when pure)"""
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    if not pure:
        v *= rng.random() ** (1.0 / 3.0)
    z = float(v[2])
    r = float(math.hypot(v[0], v[1]))
    theta = float(math.atan2(v[1], v[0])) if phase else 0.0
    if signed and rng.random() < 0.5:
        r = -r
    return BlochState(z, r, theta)
