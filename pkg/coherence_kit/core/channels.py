"""
Kraus-set channels on a single qubit: application, completeness and the
structural classification into IO ⊃ SIO ⊃ PIO ⊃ CPO.
"""
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional, Union
import logging
import numpy as np
from coherence_kit.core.types import (
    ChannelKind,
    Matrix2,
    PioFamily,
    COMPLETENESS_TOL,
    PATTERN_TOL,
)
from coherence_kit.core.errors import IncompleteChannel
from coherence_kit.core.qubit import (
    BlochState,
    DensityMatrix,
    DephasingPair,
    DiagonalUnitary,
    bloch_to_density,
    density_to_bloch,
)

logger = logging.getLogger(__name__)

UnitaryLike = Union[DiagonalUnitary, Matrix2]


@dataclass(frozen=True, eq=False)
class KrausSet:
    """Ordered, immutable list of 2×2 Kraus operators"""

    operators: tuple[Matrix2, ...]

    def __post_init__(self):
        ops = []
        for k in self.operators:
            a = np.array(k, dtype=complex)
            if a.shape != (2, 2):
                raise IncompleteChannel(f"Kraus operators must be 2×2, got shape {a.shape}")
            a.setflags(write=False)
            ops.append(a)
        if not ops:
            raise IncompleteChannel("a channel needs at least one Kraus operator")
        object.__setattr__(self, "operators", tuple(ops))

    def __len__(self) -> int:
        return len(self.operators)

    def __iter__(self) -> Iterator[Matrix2]:
        return iter(self.operators)

    def __getitem__(self, index: int) -> Matrix2:
        return self.operators[index]

    def __repr__(self) -> str:
        return f"KrausSet({len(self)} operators)"

    def stacked(self) -> np.ndarray:
        """Operators as an (n, 2, 2) array"""
        return np.stack(self.operators)

    def completeness_residual(self) -> float:
        """Frobenius norm of Σ K†K − I"""
        ks = self.stacked()
        total = np.einsum("nji,njk->ik", ks.conj(), ks)
        return float(np.linalg.norm(total - np.eye(2)))

    def is_complete(self, tol: float = COMPLETENESS_TOL) -> bool:
        return self.completeness_residual() <= tol

    def require_complete(self, tol: float = COMPLETENESS_TOL) -> "KrausSet":
        residual = self.completeness_residual()
        if residual > tol:
            raise IncompleteChannel(f"Σ K†K deviates from identity by {residual:.3e}")
        return self

    @classmethod
    def identity(cls) -> "KrausSet":
        return cls((np.eye(2),))

    @classmethod
    def dephasing(cls) -> "KrausSet":
        return cls((np.diag([1.0, 0.0]), np.diag([0.0, 1.0])))


@dataclass(frozen=True)
class ChannelClass:
    """Most restrictive class a Kraus representation matches"""

    kind: ChannelKind
    families: tuple[tuple[PioFamily, float], ...] = field(default=())

    @property
    def family_tags(self) -> list[str]:
        return [family.value for family, _ in self.families]

    def at_least(self, kind: ChannelKind) -> bool:
        return self.kind.implies(kind)

    def __str__(self) -> str:
        return self.kind.value


class Branch(NamedTuple):
    """One outcome of a selective channel application"""

    probability: float
    outcome: Optional[DensityMatrix]


def _nonzero(k: Matrix2, tol: float) -> np.ndarray:
    return np.abs(k) > tol


def is_incoherent_operator(k: Matrix2, tol: float = PATTERN_TOL) -> bool:
    """At most one nonzero entry in every column"""
    return bool(np.all(_nonzero(k, tol).sum(axis=0) <= 1))


def is_strictly_incoherent_operator(k: Matrix2, tol: float = PATTERN_TOL) -> bool:
    """At most one nonzero entry in every column and every row"""
    mask = _nonzero(k, tol)
    return bool(np.all(mask.sum(axis=0) <= 1) and np.all(mask.sum(axis=1) <= 1))


def is_incoherent(ch: KrausSet, tol: float = PATTERN_TOL) -> bool:
    return all(is_incoherent_operator(k, tol) for k in ch)


def is_strictly_incoherent(ch: KrausSet, tol: float = PATTERN_TOL) -> bool:
    return all(is_strictly_incoherent_operator(k, tol) for k in ch)


def pio_decomposition(ch: KrausSet, tol: float = PATTERN_TOL) -> Optional[tuple[tuple[PioFamily, float], ...]]:
    """Family weights of a flat PIO mixture, or None when some operator is
    not proportional to a PIO family operator.

    Single-entry operators |i⟩⟨j| are pooled into a population transfer table
    and split canonically into keep (K1), flip (K2), reset-to-0 (K3) and
    reset-to-1 (K4); equal-modulus diagonal and anti-diagonal operators add
    to K5 and K6.
    """
    transfer = np.zeros((2, 2))
    unitary = {PioFamily.K5: 0.0, PioFamily.K6: 0.0}
    for k in ch:
        mask = _nonzero(k, tol)
        count = int(mask.sum())
        if count == 0:
            continue
        if count == 1:
            i, j = np.argwhere(mask)[0]
            transfer[i, j] += abs(k[i, j]) ** 2
            continue
        if count != 2:
            return None
        if mask[0, 0] and mask[1, 1]:
            family, a, b = PioFamily.K5, k[0, 0], k[1, 1]
        elif mask[1, 0] and mask[0, 1]:
            family, a, b = PioFamily.K6, k[1, 0], k[0, 1]
        else:
            return None
        if abs(abs(a) - abs(b)) > tol:
            return None
        unitary[family] += abs(a) ** 2

    keep = min(transfer[0, 0], transfer[1, 1])
    flip = min(transfer[1, 0], transfer[0, 1])
    rest = transfer - np.array([[keep, flip], [flip, keep]])
    weights = {
        PioFamily.K1: keep,
        PioFamily.K2: flip,
        PioFamily.K3: max(0.0, min(rest[0, 0], rest[0, 1])),
        PioFamily.K4: max(0.0, min(rest[1, 0], rest[1, 1])),
        **unitary,
    }
    return tuple((family, float(w)) for family, w in weights.items() if w > tol)


def apply(ch: KrausSet, m: DensityMatrix, tol: float = COMPLETENESS_TOL) -> DensityMatrix:
    """Non-selective application Σ K ρ K†"""
    ch.require_complete(tol)
    ks = ch.stacked()
    out = np.einsum("nij,jk,nlk->il", ks, m.data, ks.conj())
    return DensityMatrix(0.5 * (out + out.conj().T))


def apply_selective(ch: KrausSet, m: DensityMatrix, tol: float = COMPLETENESS_TOL) -> list[Branch]:
    """Per-operator outcomes p_n = Tr(K_n ρ K_n†), ρ_n = K_n ρ K_n† / p_n.

    Branches with p_n below tol keep their slot with a None outcome so that
    branch indices stay aligned with Kraus indices.
    """
    ch.require_complete(tol)
    branches = []
    for k in ch:
        raw = k @ m.data @ k.conj().T
        p = float(np.trace(raw).real)
        if p < tol:
            branches.append(Branch(max(p, 0.0), None))
            continue
        normalized = raw / p
        branches.append(Branch(p, DensityMatrix(0.5 * (normalized + normalized.conj().T))))
    return branches


def classify(ch: KrausSet, tol: float = PATTERN_TOL, completeness_tol: float = COMPLETENESS_TOL) -> ChannelClass:
    """Most restrictive of NotIncoherent, IO, SIO, PIO, CPO matching ch"""
    ch.require_complete(completeness_tol)
    if not is_incoherent(ch, tol):
        return ChannelClass(ChannelKind.NOT_INCOHERENT)
    families = pio_decomposition(ch, tol)
    if len(ch) == 1:
        # a lone complete incoherent operator is a phased permutation
        return ChannelClass(ChannelKind.CPO, families or ())
    if families is not None:
        logger.debug("PIO mixture over %s", [f.value for f, _ in families])
        return ChannelClass(ChannelKind.PIO, families)
    if is_strictly_incoherent(ch, tol):
        return ChannelClass(ChannelKind.SIO)
    return ChannelClass(ChannelKind.IO)


def _as_diagonal(u: UnitaryLike) -> Matrix2:
    if isinstance(u, DiagonalUnitary):
        return u.matrix()
    return DiagonalUnitary.from_matrix(u).matrix()


def conjugate_channel(ch: KrausSet, u1: UnitaryLike, u2: UnitaryLike, tol: float = COMPLETENESS_TOL) -> KrausSet:
    """Return {U₂† K U₁}"""
    ch.require_complete(tol)
    m1, m2 = _as_diagonal(u1), _as_diagonal(u2)
    return KrausSet(tuple(m2.conj().T @ k @ m1 for k in ch))


def lift_channel(ch: KrausSet, pair: DephasingPair) -> KrausSet:
    """Move a channel on real representatives back to the original states.

    If K̃ maps ρ̃₁ to ρ̃₂ then K = U₂ K̃ U₁† maps ρ₁ = U₁ρ̃₁U₁† to ρ₂ = U₂ρ̃₂U₂†.
    """
    if pair.is_trivial:
        return ch
    return conjugate_channel(ch, pair.u1.dagger(), pair.u2.dagger())


def output_state(ch: KrausSet, s: BlochState) -> BlochState:
    """Bloch coordinates of apply(ch, ρ(s))"""
    return density_to_bloch(apply(ch, bloch_to_density(s)))
