"""The four entropy families and the distance functionals built on them.

All entropies use the natural logarithm and the continuity conventions
``0*log(0) = 0`` and ``0**q = 0`` (q > 0); they depend only on the
non-zero spectrum of their input.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from . import linalg
from .errors import DimensionMismatch, InvalidExponent

# Inside |q - 1| < Q1_SWITCH the Tsallis/Renyi quotients are evaluated as
# their common q -> 1 limit (the von Neumann formula) to avoid
# catastrophic cancellation; the Taylor error at this width is << 1e-9.
Q1_SWITCH = 1e-6

# Eigenvalues at or below this floor are treated as exact zeros.  Exact
# zeros of rank-deficient states carry ~1e-16 eigensolver noise, which
# x**q with q < 1 would amplify to ~1e-8; the floor keeps identity
# checks at the 1e-9 level.  True eigenvalues this small do not occur in
# the generators used here.
SPECTRUM_FLOOR = 1e-12

VON_NEUMANN_FAMILY = "von_neumann"
RENYI_FAMILY = "renyi"
TSALLIS_FAMILY = "tsallis"
QUADRATIC_FAMILY = "quadratic"

_FAMILIES = (VON_NEUMANN_FAMILY, RENYI_FAMILY, TSALLIS_FAMILY, QUADRATIC_FAMILY)


@dataclass(frozen=True)
class EntropyKind:
    """Tagged choice of entropy family, with exponent where applicable.

    Renyi is restricted to 0 < q <= 1 (its concave range) unless
    ``allow_nonconcave`` is set explicitly; Tsallis requires q > 0.
    """

    family: str
    q: float | None = None
    allow_nonconcave: bool = False

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise InvalidExponent(f"unknown entropy family {self.family!r}")
        if self.family in (RENYI_FAMILY, TSALLIS_FAMILY):
            if self.q is None:
                raise InvalidExponent(f"{self.family} entropy requires an exponent q")
            if not np.isfinite(self.q) or self.q <= 0:
                raise InvalidExponent(f"{self.family} entropy requires q > 0, got {self.q}")
            if self.family == RENYI_FAMILY and self.q > 1 and not self.allow_nonconcave:
                raise InvalidExponent(
                    f"Renyi q = {self.q} is outside the concave range 0 < q <= 1; "
                    "pass allow_nonconcave=True to evaluate it anyway"
                )
        elif self.q is not None:
            raise InvalidExponent(f"{self.family} entropy takes no exponent")

    @property
    def is_concave(self) -> bool:
        if self.family == RENYI_FAMILY:
            return self.q is not None and self.q <= 1
        return True

    def label(self) -> str:
        if self.q is None:
            return self.family
        return f"{self.family}({self.q:g})"


VON_NEUMANN = EntropyKind(VON_NEUMANN_FAMILY)
QUADRATIC = EntropyKind(QUADRATIC_FAMILY)


def renyi(q: float, allow_nonconcave: bool = False) -> EntropyKind:
    return EntropyKind(RENYI_FAMILY, q, allow_nonconcave)


def tsallis(q: float) -> EntropyKind:
    return EntropyKind(TSALLIS_FAMILY, q)


def entropy_from_spectrum(kind: EntropyKind, evals) -> float:
    """Entropy of a spectrum (clipped at the standard negative tolerance)."""
    lam = linalg.clip_spectrum(np.asarray(evals, dtype=float))
    lam = lam[lam > SPECTRUM_FLOOR]
    fam, q = kind.family, kind.q
    if fam in (RENYI_FAMILY, TSALLIS_FAMILY) and abs(q - 1.0) < Q1_SWITCH:
        fam = VON_NEUMANN_FAMILY
    if fam == VON_NEUMANN_FAMILY:
        return float(-np.sum(xlogy(lam, lam)))
    if fam == QUADRATIC_FAMILY:
        return float(1.0 - np.sum(lam * lam))
    tr_q = float(np.sum(lam**q))
    if fam == TSALLIS_FAMILY:
        return (tr_q - 1.0) / (1.0 - q)
    return float(np.log(tr_q)) / (1.0 - q)


def entropy(kind: EntropyKind, rho) -> float:
    """Entropy of a density matrix (or of any Hermitian PSD unit-trace array)."""
    mat = rho.mat if hasattr(rho, "mat") else np.asarray(rho, dtype=complex)
    return entropy_from_spectrum(kind, linalg.eigvals_hermitian(mat))


def _pair_mats(rho, sigma):
    a = rho.mat if hasattr(rho, "mat") else np.asarray(rho, dtype=complex)
    b = sigma.mat if hasattr(sigma, "mat") else np.asarray(sigma, dtype=complex)
    if a.shape != b.shape:
        raise DimensionMismatch(f"state shapes differ: {a.shape} vs {b.shape}")
    return a, b


def hs_distance(rho, sigma) -> float:
    """Squared Hilbert-Schmidt distance ``Tr[(rho - sigma)^2]`` (no square root)."""
    a, b = _pair_mats(rho, sigma)
    return linalg.schatten_q(a - b, 2.0)


def schatten_q_distance(rho, sigma, q: float) -> float:
    """``Tr|rho - sigma|^q`` for q >= 1."""
    a, b = _pair_mats(rho, sigma)
    return linalg.schatten_q(a - b, q)
