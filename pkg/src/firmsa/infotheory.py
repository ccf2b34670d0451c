"""Composite information quantities and inequality evaluators.

Mutual information, Holevo quantities, measured conditional entropies,
generalized discord, the four firm-subadditivity (FSA) condition
variants, the four strengthened von Neumann conditions, the strong
subadditivity gap, additivity gaps, and the pairwise-distance form of
the quadratic Holevo quantity.

Sign convention throughout: a report's ``gap`` is ``rhs - lhs`` and the
condition *holds* when ``gap >= -tolerance``.  Negative mutual
information for non-subadditive kinds is returned as-is, never clamped;
exhibiting those signs is the point.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .entropy import VON_NEUMANN, EntropyKind, entropy, hs_distance
from .errors import DimensionMismatch, InvariantViolation, NotOrthonormal
from .states import (
    DensityMatrix,
    Ensemble,
    KrausChannel,
    Povm,
    apply_channel,
    measure_ensemble,
    measure_joint,
    purify,
    require_rank1,
)

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a single inequality/identity evaluation."""

    label: str
    lhs: float
    rhs: float
    tolerance: float = DEFAULT_TOL

    @property
    def gap(self) -> float:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.gap >= -self.tolerance

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "gap": self.gap,
            "holds": self.holds,
            "tolerance": self.tolerance,
        }


def _require_multipartite(rho: DensityMatrix, least: int = 2) -> None:
    if len(rho.dims) < least:
        raise DimensionMismatch(f"state needs at least {least} subsystems, has dims {rho.dims}")


def mutual_information(kind: EntropyKind, rho_ab: DensityMatrix) -> float:
    """``S_K(rho_a) + S_K(rho_b) - S_K(rho_ab)`` with b = all subsystems past the first."""
    _require_multipartite(rho_ab)
    s_a = entropy(kind, rho_ab.ptrace([0]))
    s_b = entropy(kind, rho_ab.ptrace(range(1, len(rho_ab.dims))))
    return s_a + s_b - entropy(kind, rho_ab)


def holevo(kind: EntropyKind, ens: Ensemble) -> float:
    """Ensemble-average entropy minus average member entropy."""
    avg = entropy(kind, ens.average())
    return avg - float(sum(p * entropy(kind, st) for p, st in zip(ens.probs, ens.states)))


def holevo_measured(kind: EntropyKind, rho_ab: DensityMatrix, povm: Povm) -> float:
    """Holevo quantity of the conditional ensemble induced by measuring the first subsystem."""
    return holevo(kind, measure_ensemble(rho_ab, povm))


def conditional_entropy(kind: EntropyKind, rho_ab: DensityMatrix, povm: Povm, target: str = "b") -> float:
    """Probability-weighted entropy after measuring the first subsystem.

    ``target="b"``: conditional states on the unmeasured subsystems;
    ``target="a"``: post-measurement states of the measured subsystem,
    via the canonical Kraus operators; ``target="joint"``: the measured
    conditional mutual information (weighted sum of per-outcome mutual
    informations of the post-measurement joint states).
    """
    _require_multipartite(rho_ab)
    if target == "b":
        ens = measure_ensemble(rho_ab, povm)
        return float(sum(p * entropy(kind, st) for p, st in zip(ens.probs, ens.states)))
    if target == "a":
        rho_a = rho_ab.ptrace([0])
        out = 0.0
        for k in povm.kraus_ops():
            m = k @ rho_a.mat @ linalg.dagger(k)
            p = float(np.trace(m).real)
            if p < 1e-12:
                continue
            out += p * entropy(kind, m / p)
        return out
    if target == "joint":
        ens = measure_joint(rho_ab, povm)
        rest = range(1, len(rho_ab.dims))
        out = 0.0
        for p, st in zip(ens.probs, ens.states):
            mi = entropy(kind, st.ptrace([0])) + entropy(kind, st.ptrace(rest)) - entropy(kind, st)
            out += p * mi
        return out
    raise ValueError(f"target must be 'a', 'b', or 'joint', got {target!r}")


def discord(kind: EntropyKind, rho_ab: DensityMatrix, povm: Povm) -> float:
    """Mutual information minus the measured Holevo quantity (no POVM minimization)."""
    return mutual_information(kind, rho_ab) - holevo_measured(kind, rho_ab, povm)


def discord_identity_gap(kind: EntropyKind, rho_ab: DensityMatrix, povm: Povm) -> float:
    """|discord toward the purifying system - (S_K(rho_a) - chi_K toward b)|.

    The POVM must be rank-1.  The identity holds for every concave kind;
    the returned gap should sit at roundoff level.
    """
    require_rank1(povm)
    _require_multipartite(rho_ab)
    rho_abc = purify(rho_ab)
    n_sub = len(rho_abc.dims)
    rho_ac = rho_abc.ptrace([0, n_sub - 1])
    lhs = discord(kind, rho_ac, povm)
    rhs = entropy(kind, rho_ab.ptrace([0])) - holevo_measured(kind, rho_ab, povm)
    return abs(lhs - rhs)


# ----------------------------------------------------------------------
# Condition instances and evaluators
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class BipartiteInstance:
    """State plus POVM on the first subsystem (condition variants i and ii)."""

    rho_ab: DensityMatrix
    povm: Povm


@dataclass(frozen=True)
class TripartiteInstance:
    """Tripartite state plus POVM on the first subsystem (variant iii)."""

    rho_abc: DensityMatrix
    povm: Povm

    def __post_init__(self):
        if len(self.rho_abc.dims) != 3:
            raise DimensionMismatch(f"variant iii needs exactly 3 subsystems, got dims {self.rho_abc.dims}")


@dataclass(frozen=True)
class ChannelEnsembleInstance:
    """Input ensemble plus channel (variant iv)."""

    ensemble: Ensemble
    channel: KrausChannel


def _ensure_pure(rho: DensityMatrix, what: str, tol: float = 1e-8) -> None:
    if not rho.is_pure(tol):
        raise InvariantViolation(f"{what} must be pure, purity {rho.purity()!r}")


def _channel_output_ensemble(inst: ChannelEnsembleInstance) -> Ensemble:
    outs = [apply_channel(inst.channel, st) for st in inst.ensemble.states]
    return Ensemble(inst.ensemble.probs, outs)


def fsa_condition(kind: EntropyKind, variant: str, instance) -> ConditionReport:
    """One of the four equivalent firm-subadditivity conditions.

    (i) measured Holevo <= mutual information, (ii) measured Holevo <=
    entropy of the measured marginal, (iii) for pure tripartite states
    and rank-1 POVMs, the Holevo toward b does not exceed the Holevo
    toward bc, (iv) Holevo of a pure-state ensemble does not increase
    under a channel.  The gap is rhs - lhs.
    """
    if variant == "i":
        lhs = holevo_measured(kind, instance.rho_ab, instance.povm)
        rhs = mutual_information(kind, instance.rho_ab)
    elif variant == "ii":
        lhs = holevo_measured(kind, instance.rho_ab, instance.povm)
        rhs = entropy(kind, instance.rho_ab.ptrace([0]))
    elif variant == "iii":
        _ensure_pure(instance.rho_abc, "the tripartite state in variant iii")
        require_rank1(instance.povm)
        lhs = holevo_measured(kind, instance.rho_abc.ptrace([0, 1]), instance.povm)
        rhs = holevo_measured(kind, instance.rho_abc, instance.povm)
    elif variant == "iv":
        for st in instance.ensemble.states:
            _ensure_pure(st, "every ensemble member in variant iv")
        lhs = holevo(kind, _channel_output_ensemble(instance))
        rhs = holevo(kind, instance.ensemble)
    else:
        raise ValueError(f"variant must be one of i, ii, iii, iv; got {variant!r}")
    return ConditionReport(f"Thm2.{variant}", lhs, rhs)


def vn_strong_condition(variant: str, instance) -> ConditionReport:
    """The strengthened von Neumann counterparts of the FSA conditions.

    (i) chi <= S(a:b) - S(a:b|P_a), (ii) chi <= S(rho_a) - S(rho_a|P_a),
    (iii) chi toward b <= chi toward bc for arbitrary (mixed) tripartite
    states and general POVMs, (iv) Holevo of an arbitrary ensemble does
    not increase under a channel.
    """
    kind = VON_NEUMANN
    if variant == "i":
        lhs = holevo_measured(kind, instance.rho_ab, instance.povm)
        rhs = mutual_information(kind, instance.rho_ab) - conditional_entropy(
            kind, instance.rho_ab, instance.povm, target="joint"
        )
    elif variant == "ii":
        lhs = holevo_measured(kind, instance.rho_ab, instance.povm)
        rhs = entropy(kind, instance.rho_ab.ptrace([0])) - conditional_entropy(
            kind, instance.rho_ab, instance.povm, target="a"
        )
    elif variant == "iii":
        lhs = holevo_measured(kind, instance.rho_abc.ptrace([0, 1]), instance.povm)
        rhs = holevo_measured(kind, instance.rho_abc, instance.povm)
    elif variant == "iv":
        lhs = holevo(kind, _channel_output_ensemble(instance))
        rhs = holevo(kind, instance.ensemble)
    else:
        raise ValueError(f"variant must be one of i, ii, iii, iv; got {variant!r}")
    return ConditionReport(f"Thm3.{variant}", lhs, rhs)


def ssa_gap(rho_abc: DensityMatrix) -> float:
    """``S(a:bc) - S(a:b)``: von Neumann mutual information never grows
    when a subsystem is discarded."""
    if len(rho_abc.dims) != 3:
        raise DimensionMismatch(f"ssa_gap needs exactly 3 subsystems, got dims {rho_abc.dims}")
    mi_abc = mutual_information(VON_NEUMANN, rho_abc)
    mi_ab = mutual_information(VON_NEUMANN, rho_abc.ptrace([0, 1]))
    return mi_abc - mi_ab


# ----------------------------------------------------------------------
# Additivity
# ----------------------------------------------------------------------

def classical_quantum_state(probs, basis: np.ndarray, states_b) -> DensityMatrix:
    """``sum_j p_j |w_j><w_j| ⊗ rho_bj`` for an orthonormal family ``w``."""
    basis = linalg.as_complex_matrix(basis)
    probs = np.asarray(probs, dtype=float)
    n = probs.size
    if basis.shape[1] != n or len(states_b) != n:
        raise DimensionMismatch("need one basis column and one conditional state per probability")
    gram_dev = linalg.max_abs_diff(linalg.dagger(basis) @ basis, np.eye(n))
    if gram_dev > 1e-9:
        raise NotOrthonormal(f"basis columns deviate from orthonormality by {gram_dev:.3e}")
    d_a = basis.shape[0]
    d_b = states_b[0].dim
    out = np.zeros((d_a * d_b, d_a * d_b), dtype=complex)
    for p, w, st in zip(probs, basis.T, states_b):
        out += p * linalg.tensor(np.outer(w, w.conj()), st.mat)
    return DensityMatrix(out, (d_a, d_b))


def additivity_gap(kind: EntropyKind, rho_a: DensityMatrix, rho_b: DensityMatrix) -> float:
    """|S_K(rho_a ⊗ rho_b) - S_K(rho_a) - S_K(rho_b)|."""
    joint = rho_a.tensor(rho_b)
    return abs(entropy(kind, joint) - entropy(kind, rho_a) - entropy(kind, rho_b))


def generalized_additivity_gap(kind: EntropyKind, probs, basis: np.ndarray, states_b) -> float:
    """Gap in the classical-quantum additivity identity.

    |S_K(sum_j p_j |w_j><w_j| ⊗ rho_bj) - S_K(rho_a) - sum_j p_j S_K(rho_bj)|
    with ``rho_a = sum_j p_j |w_j><w_j|``.  Zero (to roundoff) for the
    von Neumann entropy; generically positive for every other family.
    """
    probs = np.asarray(probs, dtype=float)
    rho_ab = classical_quantum_state(probs, basis, states_b)
    lhs = entropy(kind, rho_ab)
    rhs = entropy(kind, rho_ab.ptrace([0])) + float(
        sum(p * entropy(kind, st) for p, st in zip(probs, states_b))
    )
    return abs(lhs - rhs)


def holevo_quadratic_pairwise(ens: Ensemble) -> float:
    """Quadratic Holevo quantity as the pairwise Hilbert-Schmidt sum
    ``sum_{j<j'} p_j p_j' D_HS(rho_j, rho_j')``."""
    total = 0.0
    for j in range(ens.size):
        for jp in range(j + 1, ens.size):
            total += ens.probs[j] * ens.probs[jp] * hs_distance(ens.states[j], ens.states[jp])
    return float(total)
