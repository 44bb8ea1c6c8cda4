"""
Two-operator IO synthesis.

Every target in the IO region of a source is reached by a channel of the form

    K0 = diag(c00, c11),   K1 = [[0, c01], [c10, 0]]

with |c00|² = α, |c11|² = β, |c01|² = 1 − β, |c10|² = 1 − α. On real
representatives it maps (z, r) to

    z' = (α − β) + z (α + β − 1),   r' = λ r,

where λ = ±√(αβ) ± √((1 − α)(1 − β)) depending on the signs of c00 and c10.
Writing α̃ = λ sin θ / √2 and β̃ = cos θ √((1 − λ²)/2) turns the first line
into z' = s sin(θ + φ) with s = √(λ²z² + 1 − λ²), which is solved for θ.
"""
from dataclasses import dataclass, asdict
from typing import Optional
import logging
import math
import numpy as np
from coherence_kit.core.types import CASE_TOL, REGION_TOL
from coherence_kit.core.errors import DegenerateSource, TargetUnreachable
from coherence_kit.core.qubit import BlochState, DephasingPair
from coherence_kit.core.channels import KrausSet, lift_channel
from coherence_kit.regions.io import io_region_contains

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)

# |x| this close to 1 is a tangent point of z' = s sin(θ + φ)
TANGENT_SNAP = 1e-12

# (sign of c00, sign of c10) for cases 1..4
CASE_SIGNS = {1: (1.0, 1.0), 2: (1.0, -1.0), 3: (-1.0, 1.0), 4: (-1.0, -1.0)}


@dataclass(frozen=True)
class SynthesisSolution:
    alpha: float
    beta: float
    one_minus_alpha: float
    one_minus_beta: float
    lam: float
    theta_param: float
    phi: float
    case_index: int
    alpha_tilde: float
    beta_tilde: float

    def case_values(self) -> list[float]:
        """λ as produced by each of the four sign cases"""
        return case_values(self.alpha, self.beta, self.one_minus_alpha, self.one_minus_beta)

    def case_residual(self) -> float:
        return abs(self.case_values()[self.case_index - 1] - self.lam)

    def ellipse_residual(self) -> float:
        """(2/λ²)α̃² + (2/(1 − λ²))β̃² − 1, defined for 0 < |λ| < 1"""
        lam2 = self.lam * self.lam
        return 2.0 * self.alpha_tilde**2 / lam2 + 2.0 * self.beta_tilde**2 / (1.0 - lam2) - 1.0

    def to_dict(self) -> dict:
        data = asdict(self)
        data["lambda"] = data.pop("lam")
        return data


def case_values(
    alpha: float,
    beta: float,
    one_minus_alpha: Optional[float] = None,
    one_minus_beta: Optional[float] = None,
) -> list[float]:
    """λ for the four sign cases; pass the complements when α or β is near 1"""
    one_minus_alpha = 1.0 - alpha if one_minus_alpha is None else one_minus_alpha
    one_minus_beta = 1.0 - beta if one_minus_beta is None else one_minus_beta
    p = math.sqrt(alpha * beta)
    q = math.sqrt(one_minus_alpha * one_minus_beta)
    return [p + q, p - q, -p + q, -p - q]


def _wrap(angle: float) -> float:
    """Map to (−π, π]"""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    return math.pi if wrapped == -math.pi else wrapped


def _solve_theta(lam: float, z: float, z_target: float) -> tuple[float, float]:
    """Return (θ, φ) with z_target = s sin(θ + φ)"""
    s = math.sqrt(max(0.0, lam * lam * z * z + 1.0 - lam * lam))
    if s < TANGENT_SNAP:
        # z = 0 and |λ| = 1: the region pinches to z' = 0
        return math.copysign(math.pi / 2.0, lam) if lam != 0.0 else math.pi / 2.0, 0.0
    phi = math.atan2(math.sqrt(max(0.0, 1.0 - lam * lam)), lam * z)
    x = max(-1.0, min(1.0, z_target / s))
    base = math.copysign(math.pi / 2.0, x) if abs(x) > 1.0 - TANGENT_SNAP else math.asin(x)
    candidates = [_wrap(base - phi), _wrap(math.pi - base - phi)]
    scores = [lam * math.sin(t) for t in candidates]
    if abs(scores[0] - scores[1]) <= 1e-12:
        theta = min(candidates, key=abs)
    else:
        theta = candidates[int(np.argmax(scores))]
    logger.debug("θ candidates %s, chose %.17g", candidates, theta)
    return theta, phi


def _half_angles(lam: float, theta: float) -> tuple[float, float, float, float]:
    """(√α, √(1 − α), √β, √(1 − β)) without forming 1 − α by subtraction

    With sin ψ = λ, cos ψ = √(1 − λ²): α = cos²((θ − ψ)/2), β = sin²((θ + ψ)/2).
    """
    psi = math.asin(lam)
    minus = 0.5 * (theta - psi)
    plus = 0.5 * (theta + psi)
    return abs(math.cos(minus)), abs(math.sin(minus)), abs(math.sin(plus)), abs(math.cos(plus))


def solve_real(source: BlochState, target: BlochState, tol: float = REGION_TOL, case_tol: float = CASE_TOL) -> tuple[KrausSet, SynthesisSolution]:
    """Synthesis between real representatives (θ ignored)"""
    z, r = source.z, source.r
    z_target, r_target = target.z, target.r
    lam = r_target / r if abs(r) >= tol else 0.0
    if abs(lam) > 1.0 and abs(r_target) - abs(r) > tol:
        logger.warning("λ = %.17g outside [-1, 1], clamped", lam)
    lam = max(-1.0, min(1.0, lam))

    theta, phi = _solve_theta(lam, z, z_target)
    alpha_tilde = lam * math.sin(theta) / SQRT2
    beta_tilde = math.cos(theta) * math.sqrt(max(0.0, (1.0 - lam * lam) / 2.0))
    root_alpha, root_alpha_c, root_beta, root_beta_c = _half_angles(lam, theta)
    alpha, one_minus_alpha = root_alpha**2, root_alpha_c**2
    beta, one_minus_beta = root_beta**2, root_beta_c**2

    values = case_values(alpha, beta, one_minus_alpha, one_minus_beta)
    case_index = next(
        (i + 1 for i, v in enumerate(values) if abs(v - lam) <= case_tol),
        int(np.argmin([abs(v - lam) for v in values])) + 1,
    )
    if abs(values[case_index - 1] - lam) > case_tol:
        logger.warning("no sign case reproduces λ = %.17g (closest %.3e)", lam, abs(values[case_index - 1] - lam))

    sign00, sign10 = CASE_SIGNS[case_index]
    k0 = np.diag([sign00 * root_alpha, root_beta]).astype(complex)
    k1 = np.array([[0.0, root_beta_c], [sign10 * root_alpha_c, 0.0]], dtype=complex)
    solution = SynthesisSolution(
        alpha=alpha,
        beta=beta,
        one_minus_alpha=one_minus_alpha,
        one_minus_beta=one_minus_beta,
        lam=lam,
        theta_param=theta,
        phi=phi,
        case_index=case_index,
        alpha_tilde=alpha_tilde,
        beta_tilde=beta_tilde,
    )
    return KrausSet((k0, k1)), solution


def synth_io(source: BlochState, target: BlochState, tol: float = REGION_TOL, case_tol: float = CASE_TOL) -> tuple[KrausSet, SynthesisSolution]:
    """Build an incoherent channel taking source to target.

    States with nonzero phases are handled on their real representatives and
    the channel is conjugated back afterwards.
    """
    if abs(source.r) < tol and abs(target.r) >= tol:
        raise DegenerateSource(f"incoherent source cannot reach coherence {abs(target.r):.6g}")
    report = io_region_contains(source, target, tol)
    if not report.verdict:
        raise TargetUnreachable(
            f"({target.z:.6g}, {target.r:.6g}) lies outside the IO region of "
            f"({source.z:.6g}, {source.r:.6g}), margin {report.margin:.3e} ({report.binding_constraint})"
        )
    reduced_source, reduced_target, pair = DephasingPair.from_states(source, target)
    kraus, solution = solve_real(reduced_source, reduced_target, tol, case_tol)
    logger.debug("IO synthesis case %d, α=%.17g β=%.17g", solution.case_index, solution.alpha, solution.beta)
    return lift_channel(kraus, pair), solution
