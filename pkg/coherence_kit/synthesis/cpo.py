import math
import numpy as np
from coherence_kit.core.types import REGION_TOL
from coherence_kit.core.errors import TargetUnreachable
from coherence_kit.core.qubit import BlochState, DephasingPair
from coherence_kit.core.channels import KrausSet, lift_channel

# Phased permutations in orbit order: (z, r), (z, −r), (−z, r), (−z, −r)
_PERMUTATIONS = (
    (np.eye(2), 1.0, 1.0),
    (np.diag([1.0, -1.0]), 1.0, -1.0),
    (np.array([[0.0, 1.0], [1.0, 0.0]]), -1.0, 1.0),
    (np.array([[0.0, -1.0], [1.0, 0.0]]), -1.0, -1.0),
)


def synth_cpo(source: BlochState, target: BlochState, tol: float = REGION_TOL) -> KrausSet:
    """Single phased permutation taking source to target"""
    reduced_source, reduced_target, pair = DephasingPair.from_states(source, target)
    z, r = reduced_source.point
    for operator, z_sign, r_sign in _PERMUTATIONS:
        if math.dist((z_sign * z, r_sign * r), reduced_target.point) <= tol:
            return lift_channel(KrausSet((operator.astype(complex),)), pair)
    raise TargetUnreachable(
        f"({target.z:.6g}, {target.r:.6g}) is not in the CPO orbit of ({source.z:.6g}, {source.r:.6g})"
    )
