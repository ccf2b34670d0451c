"""Randomized property suites behind ``firmsa check``.

Each suite draws deterministic instances from a seed, evaluates the
production condition evaluators, and reports the worst gap seen.
Inequality checks pass when the worst gap stays above ``-tolerance``;
identity checks pass when the worst absolute deviation stays below
``tolerance``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .entropy import QUADRATIC, VON_NEUMANN, EntropyKind, renyi, schatten_q_distance, tsallis
from .infotheory import (
    BipartiteInstance,
    ChannelEnsembleInstance,
    TripartiteInstance,
    discord_identity_gap,
    entropy,
    fsa_condition,
    generalized_additivity_gap,
    holevo,
    holevo_quadratic_pairwise,
    mutual_information,
    ssa_gap,
    vn_strong_condition,
)
from .states import (
    DensityMatrix,
    Ensemble,
    KrausChannel,
    apply_channel,
    coarse_grain,
    make_rng,
    measure_ensemble,
    purify,
    random_basis_povm,
    random_channel,
    random_density,
    random_ensemble,
    random_povm,
    random_unitary,
)

BIPARTITE_DIMS = ((2, 2), (2, 3), (3, 3), (2, 4))

INEQ_TOL = 1e-9
IDENT_TOL = 1e-9
EQ25_TOL = 1e-10

SUITE_NAMES = ("thm2", "thm3", "lemma4", "eq10", "eq25", "eq27", "sa", "concavity")


@dataclass
class CheckResult:
    label: str
    trials: int
    worst_gap: float
    tolerance: float
    mode: str  # "ineq": pass iff worst_gap >= -tol; "ident": pass iff worst_gap <= tol

    @property
    def passed(self) -> bool:
        if self.mode == "ineq":
            return self.worst_gap >= -self.tolerance
        return self.worst_gap <= self.tolerance

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "trials": self.trials,
            "worst_gap": self.worst_gap,
            "tolerance": self.tolerance,
            "mode": self.mode,
            "pass": self.passed,
        }


def _worst(label, gaps, tol, mode) -> CheckResult:
    gaps = list(gaps)
    worst = (min(gaps) if mode == "ineq" else max(gaps)) if gaps else 0.0
    return CheckResult(label, len(gaps), float(worst), tol, mode)


def _trial_povm(d: int, rng, style: int):
    """Projective, rank-1 non-projective, or coarse-grained POVM, plus a
    rank-1 parent usable where a condition demands rank 1."""
    style = style % 3
    if style == 0:
        povm = random_basis_povm(d, rng)
        return povm, povm
    if style == 1:
        povm = random_povm(d, d + 2, rng, rank1=True)
        return povm, povm
    parent = random_povm(d, d + 2, rng, rank1=True)
    n = parent.n_outcomes
    order = rng.permutation(n)
    n_blocks = int(rng.integers(2, n))
    cuts = sorted(rng.choice(np.arange(1, n), size=n_blocks - 1, replace=False))
    blocks = [order[a:b].tolist() for a, b in zip([0] + cuts, cuts + [n])]
    return coarse_grain(parent, blocks), parent


def _trace_out_second_channel(d_keep: int, d_drop: int) -> KrausChannel:
    kraus = []
    for m in range(d_drop):
        k = np.zeros((d_keep, d_keep * d_drop), dtype=complex)
        for i in range(d_keep):
            k[i, i * d_drop + m] = 1.0
        kraus.append(k)
    return KrausChannel(kraus)


def _random_channel_for(d_in: int, rng) -> KrausChannel:
    d_out = int(rng.integers(2, 4))
    kraus = math.ceil(d_in / d_out) + 1
    return random_channel(d_in, d_out, kraus, rng)


def suite_thm2(trials: int, seed: int, kinds=(VON_NEUMANN, QUADRATIC)) -> list[CheckResult]:
    """All four firm-subadditivity variants for kinds known to satisfy them."""
    results = []
    for kind in kinds:
        rng = make_rng(seed)
        gaps = {v: [] for v in ("i", "ii", "iii", "iv")}
        for t in range(trials):
            d_a, d_b = BIPARTITE_DIMS[t % len(BIPARTITE_DIMS)]
            total = d_a * d_b
            rho = random_density(total, int(rng.integers(1, total + 1)), rng, dims=(d_a, d_b))
            povm, rank1 = _trial_povm(d_a, rng, t)
            bip = BipartiteInstance(rho, povm)
            gaps["i"].append(fsa_condition(kind, "i", bip).gap)
            gaps["ii"].append(fsa_condition(kind, "ii", bip).gap)

            rho_abc = purify(rho)
            gaps["iii"].append(fsa_condition(kind, "iii", TripartiteInstance(rho_abc, rank1)).gap)

            ens = measure_ensemble(rho_abc, rank1)  # pure members on (b, c)
            d_c = rho_abc.dims[2]
            if t % 2 == 0:
                channel = _trace_out_second_channel(d_b, d_c)
            else:
                channel = _random_channel_for(d_b * d_c, rng)
            gaps["iv"].append(fsa_condition(kind, "iv", ChannelEnsembleInstance(ens, channel)).gap)
        for v in ("i", "ii", "iii", "iv"):
            results.append(_worst(f"Thm2.{v}[{kind.label()}]", gaps[v], INEQ_TOL, "ineq"))
    return results


def suite_thm3(trials: int, seed: int) -> list[CheckResult]:
    """Strengthened von Neumann conditions plus the SSA gap."""
    rng = make_rng(seed)
    gaps = {v: [] for v in ("i", "ii", "iii", "iv")}
    ssa = []
    for t in range(trials):
        d_a, d_b = BIPARTITE_DIMS[t % len(BIPARTITE_DIMS)]
        total = d_a * d_b
        rho = random_density(total, int(rng.integers(1, total + 1)), rng, dims=(d_a, d_b))
        povm, _ = _trial_povm(d_a, rng, t)
        bip = BipartiteInstance(rho, povm)
        gaps["i"].append(vn_strong_condition("i", bip).gap)
        gaps["ii"].append(vn_strong_condition("ii", bip).gap)

        tri_dims = ((2, 2, 2), (2, 2, 3))[t % 2]
        tri_total = int(np.prod(tri_dims))
        rho_abc = random_density(tri_total, int(rng.integers(1, tri_total + 1)), rng, dims=tri_dims)
        tri_povm, _ = _trial_povm(tri_dims[0], rng, t + 1)
        gaps["iii"].append(vn_strong_condition("iii", TripartiteInstance(rho_abc, tri_povm)).gap)

        d = int(rng.integers(2, 5))
        ens = random_ensemble(d, int(rng.integers(2, 5)), rng)
        gaps["iv"].append(
            vn_strong_condition("iv", ChannelEnsembleInstance(ens, _random_channel_for(d, rng))).gap
        )

        rho_222 = random_density(8, int(rng.integers(1, 9)), rng, dims=(2, 2, 2))
        ssa.append(ssa_gap(rho_222))
    out = [_worst(f"Thm3.{v}[von_neumann]", gaps[v], INEQ_TOL, "ineq") for v in ("i", "ii", "iii", "iv")]
    out.append(_worst("Eq4.ssa[von_neumann]", ssa, INEQ_TOL, "ineq"))
    return out


def suite_lemma4(trials: int, seed: int) -> list[CheckResult]:
    """Schatten-q contraction under channels for pure-state differences."""
    rng = make_rng(seed)
    gaps = []
    for _ in range(trials):
        d = int(rng.integers(2, 4))
        rho = random_density(d, 1, rng)
        sigma = random_density(d, 1, rng)
        channel = _random_channel_for(d, rng)
        out_rho = apply_channel(channel, rho)
        out_sigma = apply_channel(channel, sigma)
        for q in (1.0, 1.5, 2.0, 2.5, 3.0):
            before = schatten_q_distance(rho, sigma, q)
            after = schatten_q_distance(out_rho, out_sigma, q)
            gaps.append(before - after)
    return [_worst("Lemma4.contraction", gaps, INEQ_TOL, "ineq")]


EQ10_KINDS = (VON_NEUMANN, QUADRATIC, tsallis(1.5), tsallis(2.5), renyi(0.5))


def suite_eq10(trials: int, seed: int, kinds=EQ10_KINDS) -> list[CheckResult]:
    """Purification identity: discord toward the purifier equals
    S_K(rho_a) minus the Holevo quantity toward b."""
    results = []
    for kind in kinds:
        rng = make_rng(seed)
        gaps = []
        for t in range(trials):
            d_a, d_b = BIPARTITE_DIMS[t % len(BIPARTITE_DIMS)]
            total = d_a * d_b
            rho = random_density(total, int(rng.integers(1, total + 1)), rng, dims=(d_a, d_b))
            if t % 2 == 0:
                povm = random_basis_povm(d_a, rng)
            else:
                povm = random_povm(d_a, d_a + 2, rng, rank1=True)
            gaps.append(discord_identity_gap(kind, rho, povm))
        results.append(_worst(f"Eq10.identity[{kind.label()}]", gaps, IDENT_TOL, "ident"))
    return results


def suite_eq25(trials: int, seed: int) -> list[CheckResult]:
    """Quadratic Holevo quantity equals its pairwise-distance form."""
    rng = make_rng(seed)
    gaps = []
    for _ in range(trials):
        d = int(rng.integers(2, 5))
        ens = random_ensemble(d, int(rng.integers(2, 6)), rng)
        gaps.append(abs(holevo(QUADRATIC, ens) - holevo_quadratic_pairwise(ens)))
    return [_worst("Eq25.pairwise", gaps, EQ25_TOL, "ident")]


def random_cq_instance(rng, d_a: int | None = None, d_b: int | None = None):
    """Probabilities, orthonormal basis, and conditional states for a
    classical-quantum state."""
    d_a = d_a or int(rng.integers(2, 4))
    d_b = d_b or int(rng.integers(2, 4))
    n = int(rng.integers(2, d_a + 1))
    basis = random_unitary(d_a, rng)[:, :n]
    probs = rng.dirichlet(np.ones(n))
    states_b = [random_density(d_b, int(rng.integers(1, d_b + 1)), rng) for _ in range(n)]
    return probs, basis, states_b


def suite_eq27(trials: int, seed: int) -> list[CheckResult]:
    """Generalized additivity of the von Neumann entropy on
    classical-quantum states."""
    rng = make_rng(seed)
    gaps = []
    for _ in range(trials):
        probs, basis, states_b = random_cq_instance(rng)
        gaps.append(generalized_additivity_gap(VON_NEUMANN, probs, basis, states_b))
    return [_worst("Eq27.generalized_additivity[von_neumann]", gaps, IDENT_TOL, "ident")]


SA_KINDS = (VON_NEUMANN, QUADRATIC, tsallis(1.0), tsallis(1.5), tsallis(2.0), tsallis(3.0))


def suite_sa(trials: int, seed: int, kinds=SA_KINDS) -> list[CheckResult]:
    """Subadditivity (non-negative mutual information) for the kinds
    that have it; Tsallis/Renyi below q = 1 are deliberately absent."""
    results = []
    for kind in kinds:
        rng = make_rng(seed)
        gaps = []
        for t in range(trials):
            d_a, d_b = BIPARTITE_DIMS[t % len(BIPARTITE_DIMS)]
            total = d_a * d_b
            rho = random_density(total, int(rng.integers(1, total + 1)), rng, dims=(d_a, d_b))
            gaps.append(mutual_information(kind, rho))
        results.append(_worst(f"Eq3.sa[{kind.label()}]", gaps, INEQ_TOL, "ineq"))
    return results


CONCAVITY_KINDS = (VON_NEUMANN, QUADRATIC, tsallis(0.5), tsallis(1.5), tsallis(2.5), renyi(0.5))


def suite_concavity(trials: int, seed: int, kinds=CONCAVITY_KINDS) -> list[CheckResult]:
    results = []
    for kind in kinds:
        rng = make_rng(seed)
        gaps = []
        for _ in range(trials):
            d = int(rng.integers(2, 5))
            p = float(rng.uniform(0.05, 0.95))
            rho1 = random_density(d, int(rng.integers(1, d + 1)), rng)
            rho2 = random_density(d, int(rng.integers(1, d + 1)), rng)
            mix = DensityMatrix(p * rho1.mat + (1 - p) * rho2.mat, validate=False)
            gaps.append(entropy(kind, mix) - p * entropy(kind, rho1) - (1 - p) * entropy(kind, rho2))
        results.append(_worst(f"concavity[{kind.label()}]", gaps, INEQ_TOL, "ineq"))
    return results


_SUITES = {
    "thm2": suite_thm2,
    "thm3": suite_thm3,
    "lemma4": suite_lemma4,
    "eq10": suite_eq10,
    "eq25": suite_eq25,
    "eq27": suite_eq27,
    "sa": suite_sa,
    "concavity": suite_concavity,
}


def run_suite(name: str, trials: int, seed: int) -> dict:
    if name not in _SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(_SUITES)} or 'all'")
    checks = _SUITES[name](trials, seed)
    return {
        "suite": name,
        "trials": trials,
        "seed": seed,
        "checks": [c.to_json_dict() for c in checks],
        "pass": all(c.passed for c in checks),
    }


def run_suites(names, trials: int, seed: int) -> dict:
    reports = [run_suite(name, trials, seed) for name in names]
    return {"suites": reports, "pass": all(r["pass"] for r in reports)}


# Convenience ensemble used in a few demos/tests.
def two_state_ensemble(p: float, rho0: DensityMatrix, rho1: DensityMatrix) -> Ensemble:
    return Ensemble([p, 1.0 - p], [rho0, rho1])
