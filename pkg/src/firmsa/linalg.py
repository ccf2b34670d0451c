"""Dense complex matrix kernel.

Hermitian eigendecomposition, spectral matrix functions, Kronecker
products, partial traces, and Schatten-q sums.  Everything above this
module is pure composition of these primitives.

Conventions fixed here, globally:

* subsystem order maps to Kronecker factors left to right (subsystem 0
  is the leftmost, index-major factor);
* eigenvalues in ``[-1e-10, 0)`` may be clipped to zero on request, so
  that ``x**q`` and ``x*log(x)`` are defined on PSD inputs up to
  roundoff; anything more negative is a hard error.
"""

from typing import Callable, Iterable, NamedTuple

import numpy as np

from .errors import DimensionMismatch, DomainError, InvalidExponent, NoConvergence, NotHermitian

# Hermiticity check: max-abs of (m - m†).
HERM_TOL = 1e-9
# Eigenvalues below -NEG_EIG_TOL signal a non-PSD input, not roundoff.
NEG_EIG_TOL = 1e-10


class HermitianEigen(NamedTuple):
    """Eigendecomposition ``m = U diag(w) U†`` with ``w`` sorted ascending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_complex_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got array of ndim {m.ndim}")
    return m


def is_hermitian(m: np.ndarray, tol: float = HERM_TOL) -> bool:
    m = as_complex_matrix(m)
    if m.shape[0] != m.shape[1]:
        return False
    return float(np.max(np.abs(m - m.conj().T))) <= tol


def _require_hermitian(m: np.ndarray, tol: float = HERM_TOL) -> np.ndarray:
    m = as_complex_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise NotHermitian(f"matrix is {m.shape[0]}x{m.shape[1]}, not square")
    dev = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if dev > tol:
        raise NotHermitian(f"max |m - m†| = {dev:.3e} exceeds tolerance {tol:.1e}")
    return m


def eig_hermitian(m: np.ndarray) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix.

    Returns eigenvalues sorted ascending and the unitary of column
    eigenvectors.  Deterministic for a fixed input.

    Raises
    ------
    NotHermitian
        If ``max|m - m†|`` exceeds ``HERM_TOL``.
    NoConvergence
        If the underlying iteration fails; garbage is never returned.
    """
    m = _require_hermitian(m)
    try:
        w, u = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"hermitian eigensolver failed: {exc}") from exc
    return HermitianEigen(w, u)


def eigvals_hermitian(m: np.ndarray) -> np.ndarray:
    """Eigenvalues only (ascending), with the same checks as eig_hermitian."""
    m = _require_hermitian(m)
    try:
        return np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"hermitian eigensolver failed: {exc}") from exc


def clip_spectrum(w: np.ndarray, tol: float = NEG_EIG_TOL) -> np.ndarray:
    """Clip eigenvalues in ``[-tol, 0)`` to zero; error below ``-tol``."""
    w = np.asarray(w, dtype=float)
    lo = float(w.min()) if w.size else 0.0
    if lo < -tol:
        raise DomainError(f"eigenvalue {lo:.3e} below -{tol:.1e}: input is not PSD up to roundoff")
    return np.clip(w, 0.0, None)


def spectral_fn(m: np.ndarray, f: Callable[[np.ndarray], np.ndarray], clip_negative: bool = False) -> np.ndarray:
    """Apply a real scalar function to a Hermitian matrix: ``U diag(f(w)) U†``.

    ``f`` must accept a real ndarray elementwise.  With ``clip_negative``
    set, eigenvalues in ``[-1e-10, 0)`` are zeroed before applying ``f``
    (so ``w**q`` and ``w*log(w)`` are defined), and anything more
    negative raises DomainError.
    """
    w, u = eig_hermitian(m)
    if clip_negative:
        w = clip_spectrum(w)
    fw = np.asarray(f(w))
    return (u * fw) @ u.conj().T


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the first argument index-major."""
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def _trace_out_one(m: np.ndarray, dims: list, idx: int) -> np.ndarray:
    pre = int(np.prod(dims[:idx], dtype=int))
    d = dims[idx]
    post = int(np.prod(dims[idx + 1:], dtype=int))
    t = m.reshape(pre, d, post, pre, d, post)
    out = np.einsum("aibcid->abcd", t)
    return out.reshape(pre * post, pre * post)


def partial_trace(m: np.ndarray, dims: Iterable[int], keep: Iterable[int]) -> np.ndarray:
    """Trace out every subsystem not in ``keep``.

    Kept subsystems stay in their original relative order; the total
    trace is preserved.
    """
    m = as_complex_matrix(m)
    dims = [int(d) for d in dims]
    total = int(np.prod(dims, dtype=int))
    if m.shape != (total, total):
        raise DimensionMismatch(f"dims {dims} imply total dimension {total}, matrix is {m.shape}")
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise DimensionMismatch("keep must name at least one subsystem")
    if keep[0] < 0 or keep[-1] >= len(dims):
        raise DimensionMismatch(f"keep indices {keep} out of range for {len(dims)} subsystems")
    out = m
    cur = list(dims)
    for idx in reversed(range(len(dims))):
        if idx in keep:
            continue
        out = _trace_out_one(out, cur, idx)
        del cur[idx]
    return out


def schatten_q(m: np.ndarray, q: float) -> float:
    """``sum_i |lambda_i|**q`` for Hermitian ``m`` (this is ``Tr|m|^q``, not the q-th-root norm)."""
    if q < 1:
        raise InvalidExponent(f"schatten_q requires q >= 1, got {q}")
    w = eigvals_hermitian(m)
    return float(np.sum(np.abs(w) ** q))


def sqrtm_psd(m: np.ndarray) -> np.ndarray:
    """Principal square root of a PSD Hermitian matrix (negative roundoff clipped)."""
    return spectral_fn(m, np.sqrt, clip_negative=True)


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) if np.asarray(a).size else 0.0
