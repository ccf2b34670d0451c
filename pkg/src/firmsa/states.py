"""Quantum state, POVM, and channel model.

Validation, deterministic random generation, purification, measurement
ensembles, Naimark extension, and POVM coarse-graining.  All randomness
flows through an explicit ``numpy.random.Generator`` (PCG64 via
:func:`make_rng`); there is no hidden global state.
"""

from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .errors import (
    BadPartition,
    BadRank,
    DimensionMismatch,
    InvariantViolation,
    NotRank1,
    SingularTotal,
)

TRACE_TOL = 1e-10
POVM_SUM_TOL = 1e-9
KRAUS_SUM_TOL = 1e-9
PROB_SUM_TOL = 1e-10
# Measurement outcomes below this probability are dropped (avoids 0/0 in
# conditional states; entropies ignore zero-probability branches anyway).
OUTCOME_PROB_FLOOR = 1e-12


def make_rng(seed: int) -> np.random.Generator:
    """Deterministic generator: PCG64 seeded with ``seed``.

    NumPy guarantees an identical stream for identical seeds across
    platforms for a fixed bit generator, which makes every random
    object in this package reproducible from its seed.
    """
    return np.random.Generator(np.random.PCG64(seed))


def ginibre(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    """Complex standard-normal matrix (variance 1 per complex entry)."""
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR with the standard phase fix."""
    q, r = np.linalg.qr(ginibre(rng, d, d))
    ph = np.diag(r).copy()
    ph /= np.abs(ph)
    return q * ph


class DensityMatrix:
    """Hermitian PSD unit-trace matrix with an attached subsystem layout.

    ``dims`` lists the subsystem dimensions; their product equals the
    matrix dimension.  Subsystem 0 is the leftmost Kronecker factor.
    """

    __slots__ = ("mat", "dims")

    def __init__(self, mat, dims: Iterable[int] | None = None, *, validate: bool = True):
        mat = linalg.as_complex_matrix(mat)
        if dims is None:
            dims = (mat.shape[0],)
        dims = tuple(int(d) for d in dims)
        if any(d < 1 for d in dims):
            raise DimensionMismatch(f"subsystem dimensions must be >= 1, got {dims}")
        total = int(np.prod(dims, dtype=int))
        if mat.shape != (total, total):
            raise DimensionMismatch(f"dims {dims} imply dimension {total}, matrix is {mat.shape}")
        self.mat = mat
        self.dims = dims
        if validate:
            self._validate()

    def _validate(self):
        linalg._require_hermitian(self.mat)  # raises NotHermitian naming the deviation
        tr = float(np.trace(self.mat).real)
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvariantViolation(f"trace must be 1 within {TRACE_TOL:.1e}, got {tr!r}")
        lo = float(np.linalg.eigvalsh(self.mat).min())
        if lo < -linalg.NEG_EIG_TOL:
            raise InvariantViolation(
                f"eigenvalues must be >= -{linalg.NEG_EIG_TOL:.1e}, found {lo:.3e}"
            )

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def eigvals(self) -> np.ndarray:
        return linalg.eigvals_hermitian(self.mat)

    def purity(self) -> float:
        return float(np.trace(self.mat @ self.mat).real)

    def is_pure(self, tol: float = 1e-9) -> bool:
        return self.purity() >= 1.0 - tol

    def rank(self, tol: float = 1e-12) -> int:
        return int(np.sum(self.eigvals() > tol))

    def ptrace(self, keep: Iterable[int]) -> "DensityMatrix":
        keep = sorted(set(int(k) for k in keep))
        red = linalg.partial_trace(self.mat, self.dims, keep)
        return DensityMatrix(red, [self.dims[k] for k in keep], validate=False)

    def tensor(self, other: "DensityMatrix") -> "DensityMatrix":
        return DensityMatrix(
            linalg.tensor(self.mat, other.mat), self.dims + other.dims, validate=False
        )

    def allclose(self, other: "DensityMatrix", tol: float = 1e-10) -> bool:
        return self.dims == other.dims and linalg.max_abs_diff(self.mat, other.mat) <= tol

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim}, dims={self.dims})"


def pure_state(vec, dims: Iterable[int] | None = None) -> DensityMatrix:
    """|v><v| / <v|v> for a state vector ``vec``."""
    v = np.asarray(vec, dtype=complex).reshape(-1)
    n2 = float(np.vdot(v, v).real)
    if n2 <= 0:
        raise InvariantViolation("pure_state requires a non-zero vector")
    return DensityMatrix(np.outer(v, v.conj()) / n2, dims, validate=False)


def maximally_mixed(dims: Iterable[int] | int) -> DensityMatrix:
    dims = (dims,) if isinstance(dims, int) else tuple(dims)
    d = int(np.prod(dims, dtype=int))
    return DensityMatrix(np.eye(d, dtype=complex) / d, dims, validate=False)


class Povm:
    """Ordered list of PSD operators on one subsystem summing to identity."""

    __slots__ = ("elements", "dim")

    def __init__(self, elements: Sequence[np.ndarray], dim: int | None = None, *, validate: bool = True):
        elements = [linalg.as_complex_matrix(e) for e in elements]
        if not elements:
            raise InvariantViolation("a POVM needs at least one element")
        if dim is None:
            dim = elements[0].shape[0]
        self.elements = elements
        self.dim = int(dim)
        if validate:
            self._validate()

    def _validate(self):
        total = np.zeros((self.dim, self.dim), dtype=complex)
        for j, e in enumerate(self.elements):
            if e.shape != (self.dim, self.dim):
                raise DimensionMismatch(f"element {j} has shape {e.shape}, expected ({self.dim}, {self.dim})")
            linalg._require_hermitian(e)
            lo = float(np.linalg.eigvalsh(e).min())
            if lo < -1e-10:
                raise InvariantViolation(f"element {j} must be PSD within 1e-10, min eigenvalue {lo:.3e}")
            total += e
        dev = linalg.max_abs_diff(total, np.eye(self.dim))
        if dev > POVM_SUM_TOL:
            raise InvariantViolation(f"elements must sum to identity within {POVM_SUM_TOL:.1e}, deviation {dev:.3e}")

    @property
    def n_outcomes(self) -> int:
        return len(self.elements)

    def is_rank1(self, tol: float = 1e-9) -> bool:
        for e in self.elements:
            w = np.linalg.eigvalsh(e)
            if np.sum(w > tol) != 1:
                return False
        return True

    def kraus_ops(self) -> list[np.ndarray]:
        """Canonical Kraus operators ``K_j = P_j**(1/2)`` (positive roots)."""
        return [linalg.sqrtm_psd(e) for e in self.elements]

    def __repr__(self):
        return f"Povm(dim={self.dim}, n_outcomes={self.n_outcomes})"


def povm_from_basis(basis: np.ndarray) -> Povm:
    """Projective rank-1 POVM from the columns of a unitary."""
    basis = linalg.as_complex_matrix(basis)
    d = basis.shape[0]
    els = [np.outer(basis[:, j], basis[:, j].conj()) for j in range(basis.shape[1])]
    return Povm(els, d)


class Ensemble:
    """Probability vector paired with equally-shaped density matrices.

    Zero-probability members are dropped at construction.
    """

    __slots__ = ("probs", "states")

    def __init__(self, probs, states: Sequence[DensityMatrix], *, validate: bool = True):
        probs = np.asarray(probs, dtype=float)
        if probs.ndim != 1 or len(states) != probs.size:
            raise DimensionMismatch(f"{probs.size} probabilities for {len(states)} states")
        if validate:
            if probs.size and float(probs.min()) < -1e-12:
                raise InvariantViolation(f"probabilities must be >= 0, found {probs.min():.3e}")
            s = float(probs.sum())
            if abs(s - 1.0) > PROB_SUM_TOL:
                raise InvariantViolation(f"probabilities must sum to 1 within {PROB_SUM_TOL:.1e}, got {s!r}")
            d0 = states[0].dims if states else None
            for st in states:
                if st.dims != d0:
                    raise DimensionMismatch("ensemble members must share subsystem dimensions")
        keep = probs > 0.0
        self.probs = probs[keep]
        self.states = [st for st, k in zip(states, keep) if k]

    @property
    def size(self) -> int:
        return len(self.states)

    def average(self) -> DensityMatrix:
        avg = sum(p * st.mat for p, st in zip(self.probs, self.states))
        return DensityMatrix(avg, self.states[0].dims, validate=False)

    def __repr__(self):
        return f"Ensemble(size={self.size})"


class KrausChannel:
    """Completely positive trace-preserving map given by Kraus operators."""

    __slots__ = ("kraus", "d_in", "d_out")

    def __init__(self, kraus: Sequence[np.ndarray], *, validate: bool = True):
        kraus = [linalg.as_complex_matrix(k) for k in kraus]
        if not kraus:
            raise InvariantViolation("a channel needs at least one Kraus operator")
        d_out, d_in = kraus[0].shape
        for k in kraus:
            if k.shape != (d_out, d_in):
                raise DimensionMismatch("Kraus operators must share one shape")
        self.kraus = kraus
        self.d_in = d_in
        self.d_out = d_out
        if validate:
            total = sum(linalg.dagger(k) @ k for k in kraus)
            dev = linalg.max_abs_diff(total, np.eye(d_in))
            if dev > KRAUS_SUM_TOL:
                raise InvariantViolation(
                    f"sum K†K must be identity within {KRAUS_SUM_TOL:.1e}, deviation {dev:.3e}"
                )

    def apply_mat(self, mat: np.ndarray) -> np.ndarray:
        out = np.zeros((self.d_out, self.d_out), dtype=complex)
        for k in self.kraus:
            out += k @ mat @ linalg.dagger(k)
        return out

    def __repr__(self):
        return f"KrausChannel(d_in={self.d_in}, d_out={self.d_out}, kraus={len(self.kraus)})"


def apply_channel(ch: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """``sum_j K_j rho K_j†``; trace is preserved."""
    if rho.dim != ch.d_in:
        raise DimensionMismatch(f"channel expects input dimension {ch.d_in}, state has {rho.dim}")
    return DensityMatrix(ch.apply_mat(rho.mat), validate=False)


# ----------------------------------------------------------------------
# Random generation
# ----------------------------------------------------------------------

def random_density(d: int, rank: int, rng: np.random.Generator, dims: Iterable[int] | None = None) -> DensityMatrix:
    """Ginibre state ``G G† / Tr(G G†)`` with ``G`` of shape (d, rank)."""
    if not 1 <= rank <= d:
        raise BadRank(f"rank must satisfy 1 <= rank <= {d}, got {rank}")
    g = ginibre(rng, d, rank)
    m = g @ linalg.dagger(g)
    return DensityMatrix(m / np.trace(m).real, dims)


def random_povm(d: int, n: int, rng: np.random.Generator, rank1: bool = False) -> Povm:
    """Normalized Ginibre-block POVM: ``P_j = T^(-1/2) A_j T^(-1/2)``.

    The blocks ``A_j`` are Ginibre PSD (rank 1 when ``rank1``), and
    ``T = sum_j A_j``.  With rank-1 blocks and n == d the result is
    automatically a projective basis measurement.
    """
    if n < 2:
        raise BadRank(f"a POVM needs at least 2 outcomes, got {n}")
    blocks = []
    for _ in range(n):
        g = ginibre(rng, d, 1 if rank1 else d)
        blocks.append(g @ linalg.dagger(g))
    total = sum(blocks)
    w, u = linalg.eig_hermitian(total)
    if float(w.min()) < 1e-12:
        raise SingularTotal(f"block sum has eigenvalue {w.min():.3e} < 1e-12")
    inv_sqrt = (u * (w**-0.5)) @ linalg.dagger(u)
    return Povm([inv_sqrt @ a @ inv_sqrt for a in blocks], d)


def random_basis_povm(d: int, rng: np.random.Generator) -> Povm:
    """Haar-random orthonormal-basis (projective rank-1) measurement."""
    return povm_from_basis(random_unitary(d, rng))


def random_channel(d_in: int, d_out: int, kraus_count: int, rng: np.random.Generator) -> KrausChannel:
    """Stinespring-style random channel: Haar isometry into out x env, env traced."""
    if kraus_count < 1:
        raise BadRank(f"kraus_count must be >= 1, got {kraus_count}")
    if d_out * kraus_count < d_in:
        raise DimensionMismatch(
            f"no isometry from dimension {d_in} into {d_out}x{kraus_count}"
        )
    g = ginibre(rng, d_out * kraus_count, d_in)
    q, r = np.linalg.qr(g)
    ph = np.diag(r).copy()
    ph /= np.abs(ph)
    v = q * ph  # columns orthonormal: V†V = I_{d_in}
    kraus = [v[j * d_out:(j + 1) * d_out, :] for j in range(kraus_count)]
    return KrausChannel(kraus)


def random_ensemble(
    d: int,
    size: int,
    rng: np.random.Generator,
    pure: bool = False,
    max_rank: int | None = None,
) -> Ensemble:
    """Random ensemble with Dirichlet-flat probabilities."""
    probs = rng.dirichlet(np.ones(size))
    states = []
    for _ in range(size):
        rank = 1 if pure else int(rng.integers(1, (max_rank or d) + 1))
        states.append(random_density(d, rank, rng))
    return Ensemble(probs, states)


# ----------------------------------------------------------------------
# Purification, measurement, Naimark extension, coarse-graining
# ----------------------------------------------------------------------

def purify(rho: DensityMatrix, rank_tol: float = 1e-12) -> DensityMatrix:
    """Pure state on ``dims + (rank,)`` whose reduction over the appended
    ancilla returns ``rho``.

    Uses the eigen-purification ``|psi> = sum_i sqrt(l_i) |e_i>|i>`` with
    the ancilla sized to the numerical rank, which keeps downstream
    tripartite objects small; entropies only see the non-zero spectrum.
    """
    w, u = linalg.eig_hermitian(rho.mat)
    w = linalg.clip_spectrum(w)
    sel = w > rank_tol
    lam = w[sel]
    vecs = u[:, sel]
    r = int(lam.size)
    psi = (vecs * np.sqrt(lam)).reshape(-1)  # index (x, i) -> x*r + i
    return pure_state(psi, rho.dims + (r,))


def _measured_operators(rho: DensityMatrix, povm: Povm) -> list[np.ndarray]:
    if not rho.dims or povm.dim != rho.dims[0]:
        raise DimensionMismatch(
            f"POVM acts on dimension {povm.dim}, first subsystem has {rho.dims[0] if rho.dims else '?'}"
        )
    rest = int(np.prod(rho.dims[1:], dtype=int))
    eye_rest = np.eye(rest, dtype=complex)
    return [linalg.tensor(e, eye_rest) @ rho.mat for e in povm.elements]


def measure_ensemble(rho: DensityMatrix, povm: Povm) -> Ensemble:
    """Conditional states on the unmeasured subsystems.

    Returns ``{p_j, rho_rest,j}`` with ``p_j rho_rest,j = Tr_a(P_j rho)``
    and ``p_j = Tr(P_j rho_a)``; outcomes below the probability floor
    are dropped.  The probability average of the members reconstructs
    ``Tr_a(rho)``.
    """
    keep = range(1, len(rho.dims))
    probs, states = [], []
    for op in _measured_operators(rho, povm):
        p = float(np.trace(op).real)
        if p < OUTCOME_PROB_FLOOR:
            continue
        red = linalg.partial_trace(op, rho.dims, keep)
        states.append(DensityMatrix(red / p, rho.dims[1:], validate=False))
        probs.append(p)
    return Ensemble(probs, states)


def measure_joint(rho: DensityMatrix, povm: Povm) -> Ensemble:
    """Post-measurement joint states ``(K_j ⊗ I) rho (K_j† ⊗ I) / p_j``
    with the canonical Kraus choice ``K_j = P_j**(1/2)``."""
    if not rho.dims or povm.dim != rho.dims[0]:
        raise DimensionMismatch(
            f"POVM acts on dimension {povm.dim}, first subsystem has {rho.dims[0] if rho.dims else '?'}"
        )
    rest = int(np.prod(rho.dims[1:], dtype=int))
    eye_rest = np.eye(rest, dtype=complex)
    probs, states = [], []
    for k in povm.kraus_ops():
        kk = linalg.tensor(k, eye_rest)
        out = kk @ rho.mat @ linalg.dagger(kk)
        p = float(np.trace(out).real)
        if p < OUTCOME_PROB_FLOOR:
            continue
        states.append(DensityMatrix(out / p, rho.dims, validate=False))
        probs.append(p)
    return Ensemble(probs, states)


def naimark_extend(povm: Povm) -> tuple[np.ndarray, Povm]:
    """Isometry ``V = sum_j (|j> ⊗ I_d) P_j**(1/2)`` and the projective
    measurement ``Pi_j = |j><j| ⊗ I_d`` reproducing the POVM statistics:
    ``Tr(P_j rho) = Tr(Pi_j V rho V†)`` for all states."""
    d, n = povm.dim, povm.n_outcomes
    v = np.vstack(povm.kraus_ops())  # (n*d, d); block row j is P_j^(1/2)
    projective = []
    for j in range(n):
        pi = np.zeros((n * d, n * d), dtype=complex)
        pi[j * d:(j + 1) * d, j * d:(j + 1) * d] = np.eye(d)
        projective.append(pi)
    return v, Povm(projective, n * d)


def naimark_lift(rho: DensityMatrix, povm: Povm) -> tuple[DensityMatrix, Povm]:
    """Embed the measured subsystem through the Naimark isometry.

    Returns the lifted state on dims ``(n*d, *rest)`` and the projective
    POVM; measuring the lift projectively reproduces the original
    measurement ensemble exactly.
    """
    v, projective = naimark_extend(povm)
    rest = int(np.prod(rho.dims[1:], dtype=int))
    vi = linalg.tensor(v, np.eye(rest, dtype=complex))
    lifted = vi @ rho.mat @ linalg.dagger(vi)
    dims = (povm.n_outcomes * povm.dim,) + rho.dims[1:]
    return DensityMatrix(lifted, dims, validate=False), projective


def coarse_grain(povm: Povm, partition: Sequence[Iterable[int]]) -> Povm:
    """Merge POVM outcomes by summing each partition block."""
    blocks = [sorted(int(i) for i in block) for block in partition]
    flat = sorted(i for b in blocks for i in b)
    if flat != list(range(povm.n_outcomes)):
        raise BadPartition(
            f"partition must cover outcomes 0..{povm.n_outcomes - 1} exactly once, got {blocks}"
        )
    merged = [sum(povm.elements[i] for i in block) for block in blocks]
    return Povm(merged, povm.dim)


def require_rank1(povm: Povm, tol: float = 1e-9) -> None:
    if not povm.is_rank1(tol):
        raise NotRank1("POVM has an element of rank > 1")
