"""Generalized quantum entropies, Holevo quantities, and discord.

A small numpy/scipy library for finite-dimensional quantum information:
the von Neumann / Renyi / Tsallis / quadratic entropy families, mutual
information and measured Holevo quantities, generalized discord,
evaluators for the firm-subadditivity condition family, and a
randomized search that exhibits Tsallis discord going negative for
exponents between 2 and 3.
"""

from .entropy import (
    QUADRATIC,
    VON_NEUMANN,
    EntropyKind,
    entropy,
    entropy_from_spectrum,
    hs_distance,
    renyi,
    schatten_q_distance,
    tsallis,
)
from .errors import FirmsaError
from .infotheory import (
    BipartiteInstance,
    ChannelEnsembleInstance,
    ConditionReport,
    TripartiteInstance,
    additivity_gap,
    classical_quantum_state,
    conditional_entropy,
    discord,
    discord_identity_gap,
    fsa_condition,
    generalized_additivity_gap,
    holevo,
    holevo_measured,
    holevo_quadratic_pairwise,
    mutual_information,
    ssa_gap,
    vn_strong_condition,
)
from .search import (
    SearchConfig,
    SearchOutcome,
    SweepResult,
    ViolationCertificate,
    find_violation,
    run_search,
    scan_window,
    sweep_q,
)
from .states import (
    DensityMatrix,
    Ensemble,
    KrausChannel,
    Povm,
    apply_channel,
    coarse_grain,
    make_rng,
    maximally_mixed,
    measure_ensemble,
    measure_joint,
    naimark_extend,
    naimark_lift,
    povm_from_basis,
    pure_state,
    purify,
    random_basis_povm,
    random_channel,
    random_density,
    random_ensemble,
    random_povm,
    random_unitary,
)

__version__ = "0.1.0"

__all__ = [
    "QUADRATIC",
    "VON_NEUMANN",
    "EntropyKind",
    "entropy",
    "entropy_from_spectrum",
    "hs_distance",
    "renyi",
    "schatten_q_distance",
    "tsallis",
    "FirmsaError",
    "BipartiteInstance",
    "ChannelEnsembleInstance",
    "ConditionReport",
    "TripartiteInstance",
    "additivity_gap",
    "classical_quantum_state",
    "conditional_entropy",
    "discord",
    "discord_identity_gap",
    "fsa_condition",
    "generalized_additivity_gap",
    "holevo",
    "holevo_measured",
    "holevo_quadratic_pairwise",
    "mutual_information",
    "ssa_gap",
    "vn_strong_condition",
    "SearchConfig",
    "SearchOutcome",
    "SweepResult",
    "ViolationCertificate",
    "find_violation",
    "run_search",
    "scan_window",
    "sweep_q",
    "DensityMatrix",
    "Ensemble",
    "KrausChannel",
    "Povm",
    "apply_channel",
    "coarse_grain",
    "make_rng",
    "maximally_mixed",
    "measure_ensemble",
    "measure_joint",
    "naimark_extend",
    "naimark_lift",
    "povm_from_basis",
    "pure_state",
    "purify",
    "random_basis_povm",
    "random_channel",
    "random_density",
    "random_ensemble",
    "random_povm",
    "random_unitary",
]
