"""
IO to SIO conversion for a fixed input state.

Kraus operators with two nonzero entries in one row (top row: A_i, B_i;
bottom row: C_j, D_j) are the only source of non-strict incoherence. Their
combined action on a given state is reproduced by one diagonal and one
anti-diagonal operator; every other operator passes through unchanged.
"""
from dataclasses import dataclass
import cmath
import logging
import math
import numpy as np
from coherence_kit.core.types import COMPLETENESS_TOL, PATTERN_TOL
from coherence_kit.core.errors import CoherenceKitError, NotIncoherent
from coherence_kit.core.qubit import BlochState, bloch_to_density
from coherence_kit.core.channels import KrausSet, is_incoherent_operator

logger = logging.getLogger(__name__)


def _pair(x: complex) -> list[float]:
    return [x.real, x.imag]


@dataclass(frozen=True)
class SioConversionSolution:
    """K0 = diag(a, b), K1 = [[0, d], [c, 0]] with the weights h1, h2"""

    a: complex
    b: complex
    c: complex
    d: complex
    h1: float
    h2: float
    theta: float = 0.0

    @property
    def moduli_squared(self) -> tuple[float, float, float, float]:
        return (abs(self.a) ** 2, abs(self.b) ** 2, abs(self.c) ** 2, abs(self.d) ** 2)

    def cancellation_residual(self) -> float:
        """|a b* e^{-iθ} + c* d e^{iθ}|; reduces to |a b* + c* d| at θ = 0"""
        phase = cmath.exp(1j * self.theta)
        return abs(self.a * self.b.conjugate() / phase + self.c.conjugate() * self.d * phase)

    def operators(self) -> tuple[np.ndarray, np.ndarray]:
        k0 = np.array([[self.a, 0.0], [0.0, self.b]], dtype=complex)
        k1 = np.array([[0.0, self.d], [self.c, 0.0]], dtype=complex)
        return k0, k1

    def to_dict(self) -> dict:
        return {
            "a": _pair(self.a),
            "b": _pair(self.b),
            "c": _pair(self.c),
            "d": _pair(self.d),
            "h1": self.h1,
            "h2": self.h2,
        }


def partition(ch: KrausSet, tol: float = PATTERN_TOL) -> tuple[list[np.ndarray], list[np.ndarray], list[np.ndarray]]:
    """Split into (top-row pairs, bottom-row pairs, pass-through)"""
    top, bottom, rest = [], [], []
    for k in ch:
        if not is_incoherent_operator(k, tol):
            raise NotIncoherent(f"operator {np.array2string(k, precision=4)} has two nonzero entries in a column")
        mask = np.abs(k) > tol
        if mask[0, 0] and mask[0, 1]:
            top.append(k)
        elif mask[1, 0] and mask[1, 1]:
            bottom.append(k)
        else:
            rest.append(k)
    return top, bottom, rest


def io_to_sio(
    ch: KrausSet,
    state: BlochState,
    tol: float = PATTERN_TOL,
    completeness_tol: float = COMPLETENESS_TOL,
) -> tuple[KrausSet, SioConversionSolution | None]:
    """Replace the row-paired operators of ch by an SIO pair acting identically on state.

    Returns the input unchanged (and no solution) when ch has no row-paired
    operators.
    """
    ch.require_complete(completeness_tol)
    top, bottom, rest = partition(ch, tol)
    if not top and not bottom:
        return ch, None

    rho = bloch_to_density(state).data
    h1 = 2.0 * sum(float((k @ rho @ k.conj().T)[0, 0].real) for k in top)
    h2 = 2.0 * sum(float((k @ rho @ k.conj().T)[1, 1].real) for k in bottom)
    h1, h2 = max(h1, 0.0), max(h2, 0.0)
    s_total = sum(abs(k[0, 0]) ** 2 for k in top) + sum(abs(k[1, 0]) ** 2 for k in bottom)
    t_total = sum(abs(k[0, 1]) ** 2 for k in top) + sum(abs(k[1, 1]) ** 2 for k in bottom)
    h_total = h1 + h2

    if h_total <= 0.0:
        logger.debug("paired operators annihilate the state, folding them into K1")
        a = d = 0.0
        b = math.sqrt(t_total)
        c: complex = math.sqrt(s_total)
    else:
        a = math.sqrt(s_total * h1 / h_total)
        d = math.sqrt(t_total * h1 / h_total)
        b = math.sqrt(t_total * h2 / h_total)
        if d > 0.0:
            # |c| = ab/d, taken from its own closed form
            c = -math.sqrt(s_total * h2 / h_total) * cmath.exp(2j * state.theta)
        else:
            if a * b > 1e-12:
                raise CoherenceKitError(f"inconsistent conversion: d = 0 with a·b = {a * b:.3e}")
            c = math.sqrt(s_total * h2 / h_total)

    solution = SioConversionSolution(complex(a), complex(b), complex(c), complex(d), h1, h2, state.theta)
    logger.debug("converted %d+%d paired operators, h1=%.6g h2=%.6g", len(top), len(bottom), h1, h2)
    return KrausSet(solution.operators() + tuple(rest)), solution
