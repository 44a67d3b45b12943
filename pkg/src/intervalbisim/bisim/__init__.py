from .oracle import brute_force_bisimulation, candidate_partitions, is_stable
from .quotient import quotient, representative
from .refinement import (
    CompetitiveSignature,
    CooperativeSignature,
    Refinement,
    bisimulation,
    initial_partition,
    signature_for,
    violate_comp,
    violate_coop,
)

__all__ = [
    "CompetitiveSignature",
    "CooperativeSignature",
    "Refinement",
    "bisimulation",
    "brute_force_bisimulation",
    "candidate_partitions",
    "initial_partition",
    "is_stable",
    "quotient",
    "representative",
    "signature_for",
    "violate_comp",
    "violate_coop",
]
