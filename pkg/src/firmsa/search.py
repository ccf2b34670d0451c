"""Sweeps over the Tsallis exponent and randomized counterexample search.

The search minimizes either the generalized discord (firm-subadditivity
objective) or the mutual information (subadditivity objective) over a
smooth unconstrained parameterization: states through a lower-triangular
complex factor ``rho = L L† / Tr(L L†)``, POVMs through normalized
Ginibre blocks ``P_j = T^(-1/2) A_j T^(-1/2)``, and optionally the
exponent q through a logistic map into its window.  Local refinement is
Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2);
each restart spends its iteration budget across two simplex starts,
since a fresh simplex at the incumbent rescues stagnation in these
20+-dimensional landscapes.  Everything is deterministic given the
config seed (restart r draws its start from seed + r).
"""

import time
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import minimize

from . import serialize
from .entropy import RENYI_FAMILY, TSALLIS_FAMILY, EntropyKind, tsallis
from .errors import ConfigError, FirmsaError
from .infotheory import discord, mutual_information
from .states import DensityMatrix, Povm

# A certificate requires the objective materially negative, three orders
# beyond the numerical tolerance of the property suites.
VIOLATION_MARGIN = -1e-6

_PENALTY = 1e2

OBJECTIVE_FSA = "fsa"
OBJECTIVE_SA = "sa"


@dataclass(frozen=True)
class SearchConfig:
    """Budget and shape of one randomized search run."""

    objective: str
    kind: EntropyKind
    dims: tuple[int, int] = (2, 2)
    povm_outcomes: int = 2
    q_range: tuple[float, float] | None = None
    restarts: int = 40
    local_steps: int = 1200
    seed: int = 0

    def __post_init__(self):
        if self.objective not in (OBJECTIVE_FSA, OBJECTIVE_SA):
            raise ConfigError(f"objective must be '{OBJECTIVE_FSA}' or '{OBJECTIVE_SA}', got {self.objective!r}")
        if len(self.dims) != 2 or any(d < 2 for d in self.dims):
            raise ConfigError(f"dims must be two subsystem dimensions >= 2, got {self.dims}")
        if self.restarts < 1:
            raise ConfigError("restarts must be >= 1")
        if self.local_steps < 10:
            raise ConfigError("local_steps must be >= 10")
        if self.povm_outcomes < 2:
            raise ConfigError("povm_outcomes must be >= 2")
        if self.q_range is not None:
            if self.kind.q is None:
                raise ConfigError(f"{self.kind.family} entropy has no exponent to scan")
            lo, hi = self.q_range
            if not (0 < lo < hi):
                raise ConfigError(f"q_range must satisfy 0 < low < high, got {self.q_range}")
            for q in self.q_range:
                replace(self.kind, q=q)  # endpoint must be valid for the family


@dataclass(frozen=True)
class ViolationCertificate:
    """Reproducible witness of a negative discord or mutual information."""

    kind: EntropyKind
    rho_ab: DensityMatrix
    povm: Povm | None
    q: float | None
    discord_value: float
    seed: int
    wall_time: float
    objective: str = OBJECTIVE_FSA

    def replay(self) -> float:
        """Re-evaluate the certified quantity from the stored objects."""
        if self.objective == OBJECTIVE_FSA:
            return discord(self.kind, self.rho_ab, self.povm)
        return mutual_information(self.kind, self.rho_ab)

    def to_json_dict(self) -> dict:
        # wall_time is deliberately not serialized: certificate bytes are a
        # pure function of the search config.
        return {
            "objective": self.objective,
            "kind": {"family": self.kind.family, "q": self.kind.q},
            "q": self.q,
            "discord_value": self.discord_value,
            "seed": self.seed,
            "rho_ab": serialize.state_to_obj(self.rho_ab),
            "povm": None if self.povm is None else serialize.povm_to_obj(self.povm),
        }

    @staticmethod
    def from_json_dict(obj) -> "ViolationCertificate":
        kind_obj = obj["kind"]
        kind = EntropyKind(
            kind_obj["family"],
            kind_obj["q"],
            allow_nonconcave=(kind_obj["family"] == RENYI_FAMILY and (kind_obj["q"] or 0) > 1),
        )
        return ViolationCertificate(
            kind=kind,
            rho_ab=serialize.state_from_obj(obj["rho_ab"]),
            povm=None if obj.get("povm") is None else serialize.povm_from_obj(obj["povm"]),
            q=obj.get("q"),
            discord_value=obj["discord_value"],
            seed=obj["seed"],
            wall_time=0.0,
            objective=obj.get("objective", OBJECTIVE_FSA),
        )


@dataclass(frozen=True)
class SearchOutcome:
    """Best candidate of a full search run, certified or not."""

    config: SearchConfig
    best_value: float
    certificate: ViolationCertificate | None
    wall_time: float
    history: tuple[float, ...]  # best-so-far after each restart; non-increasing


@dataclass(frozen=True)
class SweepResult:
    """Discord values over a q grid for one (state, POVM) instance."""

    q_grid: np.ndarray
    discord_values: np.ndarray
    state_ref: dict
    povm_ref: dict

    def __post_init__(self):
        if self.q_grid.shape != self.discord_values.shape:
            raise ConfigError("q grid and values must have equal length")
        if not np.all(np.isfinite(self.discord_values)):
            raise ConfigError("sweep produced non-finite values")

    def to_json_dict(self) -> dict:
        return {
            "q_grid": self.q_grid.tolist(),
            "discord_values": self.discord_values.tolist(),
            "state_ref": self.state_ref,
            "povm_ref": self.povm_ref,
        }

    def to_csv(self) -> str:
        return serialize.sweep_csv_text(self.q_grid, self.discord_values)


def sweep_q(rho_ab: DensityMatrix, povm: Povm, q_grid, kind_family: str = TSALLIS_FAMILY) -> SweepResult:
    """Discord at every grid point (the q -> 1 limit rule keeps it continuous)."""
    qs = np.asarray(q_grid, dtype=float)
    if qs.ndim != 1 or qs.size == 0:
        raise ConfigError("q_grid must be a non-empty 1-d array")
    if np.any(np.diff(qs) < 0) or qs[0] <= 0:
        raise ConfigError("q_grid must be sorted ascending within (0, inf)")
    vals = np.array(
        [discord(EntropyKind(kind_family, q, allow_nonconcave=True), rho_ab, povm) for q in qs]
    )
    return SweepResult(qs, vals, serialize.state_to_obj(rho_ab), serialize.povm_to_obj(povm))


# ----------------------------------------------------------------------
# Parameterization
# ----------------------------------------------------------------------

def _rho_from_params(x: np.ndarray, d: int) -> np.ndarray | None:
    low = np.zeros((d, d), dtype=complex)
    idx = 0
    for i in range(d):
        low[i, i] = x[idx]
        idx += 1
        for j in range(i):
            low[i, j] = x[idx] + 1j * x[idx + 1]
            idx += 2
    m = low @ low.conj().T
    tr = float(np.trace(m).real)
    if tr < 1e-12:
        return None
    return m / tr


def _povm_from_params(x: np.ndarray, d: int, n: int, block_rank: int) -> list[np.ndarray] | None:
    per = 2 * d * block_rank
    blocks = []
    for j in range(n):
        flat = x[j * per:(j + 1) * per]
        g = (flat[0::2] + 1j * flat[1::2]).reshape(d, block_rank)
        blocks.append(g @ g.conj().T)
    total = sum(blocks)
    w, u = np.linalg.eigh(total)
    if float(w.min()) < 1e-12:
        return None
    inv_sqrt = (u * (w**-0.5)) @ u.conj().T
    return [inv_sqrt @ a @ inv_sqrt for a in blocks]


def _q_from_param(t: float, lo: float, hi: float) -> float:
    return lo + (hi - lo) / (1.0 + np.exp(-t))


class _Problem:
    """Maps flat parameter vectors to a typed objective value."""

    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        d_a, d_b = cfg.dims
        self.d_total = d_a * d_b
        self.n_state = self.d_total**2
        if cfg.objective == OBJECTIVE_FSA:
            # rank-1 blocks when there are enough outcomes to span the
            # space (n >= d gives non-singular totals; n == d is then
            # automatically projective), full-rank blocks otherwise.
            self.block_rank = 1 if cfg.povm_outcomes >= d_a else d_a
            self.n_povm = 2 * d_a * self.block_rank * cfg.povm_outcomes
        else:
            self.block_rank = 0
            self.n_povm = 0
        self.n_q = 1 if cfg.q_range is not None else 0
        self.n_params = self.n_state + self.n_povm + self.n_q

    def split(self, x: np.ndarray):
        d_a = self.cfg.dims[0]
        rho = _rho_from_params(x[: self.n_state], self.d_total)
        els = None
        if self.n_povm:
            els = _povm_from_params(x[self.n_state:self.n_state + self.n_povm], d_a, self.cfg.povm_outcomes, self.block_rank)
        q = self.cfg.kind.q
        if self.n_q:
            q = _q_from_param(float(x[-1]), *self.cfg.q_range)
        return rho, els, q

    def kind_at(self, q) -> EntropyKind:
        if q is None or self.cfg.kind.q is None:
            return self.cfg.kind
        return replace(self.cfg.kind, q=float(q))

    def value(self, x: np.ndarray, validate: bool = False) -> float:
        rho_mat, els, q = self.split(x)
        if rho_mat is None or (self.n_povm and els is None):
            return _PENALTY
        kind = self.kind_at(q)
        rho = DensityMatrix(rho_mat, self.cfg.dims, validate=validate)
        if self.cfg.objective == OBJECTIVE_SA:
            return mutual_information(kind, rho)
        povm = Povm(els, self.cfg.dims[0], validate=validate)
        return discord(kind, rho, povm)

    def __call__(self, x: np.ndarray) -> float:
        try:
            return self.value(x)
        except FirmsaError:
            return _PENALTY


def _refine(problem: _Problem, x0: np.ndarray, steps: int) -> tuple[np.ndarray, float]:
    first = max(steps // 2, 5)
    res = minimize(
        problem, x0, method="Nelder-Mead",
        options={"maxiter": first, "xatol": 1e-12, "fatol": 1e-14},
    )
    res = minimize(
        problem, res.x, method="Nelder-Mead",
        options={"maxiter": max(steps - first, 5), "xatol": 1e-12, "fatol": 1e-14},
    )
    return res.x, float(res.fun)


def run_search(cfg: SearchConfig) -> SearchOutcome:
    """Randomized restarts plus Nelder-Mead refinement; fully deterministic."""
    t0 = time.perf_counter()
    problem = _Problem(cfg)
    best_x, best_val = None, np.inf
    history = []
    for r in range(cfg.restarts):
        rng = np.random.Generator(np.random.PCG64(cfg.seed + r))
        x0 = rng.standard_normal(problem.n_params)
        x, val = _refine(problem, x0, cfg.local_steps)
        if val < best_val:  # strict: ties keep the lowest restart index
            best_x, best_val = x, val
        history.append(best_val)

    # Re-project onto the constraint set (the parameterization is exact,
    # so this is a rebuild) and re-validate before certifying.
    rho_mat, els, q = problem.split(best_x)
    rho = DensityMatrix(rho_mat, cfg.dims)
    povm = Povm(els, cfg.dims[0]) if els is not None else None
    kind = problem.kind_at(q)
    if cfg.objective == OBJECTIVE_FSA:
        value = discord(kind, rho, povm)
    else:
        value = mutual_information(kind, rho)
    wall = time.perf_counter() - t0

    certificate = None
    if value < VIOLATION_MARGIN:
        certificate = ViolationCertificate(
            kind=kind, rho_ab=rho, povm=povm, q=kind.q,
            discord_value=value, seed=cfg.seed, wall_time=wall,
            objective=cfg.objective,
        )
    return SearchOutcome(cfg, value, certificate, wall, tuple(history))


def find_violation(cfg: SearchConfig) -> ViolationCertificate | None:
    """Best certificate found within the budget, or None.

    An empty result never claims non-existence; it only reflects the
    budget in ``cfg``.
    """
    return run_search(cfg).certificate


def scan_window(kind_family: str, q_grid, cfg: SearchConfig) -> dict[float, SearchOutcome]:
    """Independent search at each grid point; maps q to its outcome.

    The report layer must phrase empty entries as "none found at this
    budget", never as non-existence.
    """
    qs = [float(q) for q in q_grid]
    if not qs:
        raise ConfigError("q_grid must be non-empty")
    out = {}
    for q in qs:
        kind = EntropyKind(kind_family, q, allow_nonconcave=True)
        out[q] = run_search(replace(cfg, kind=kind, q_range=None))
    return out
