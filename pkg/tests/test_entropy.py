import numpy as np
import pytest
from mpmath import mp, mpf, power

from firmsa import (
    QUADRATIC,
    VON_NEUMANN,
    DensityMatrix,
    EntropyKind,
    entropy,
    entropy_from_spectrum,
    hs_distance,
    maximally_mixed,
    pure_state,
    renyi,
    schatten_q_distance,
    tsallis,
)
from firmsa.errors import DimensionMismatch, InvalidExponent
from firmsa.states import make_rng, random_density, random_unitary

ALL_KINDS = (VON_NEUMANN, QUADRATIC, tsallis(0.5), tsallis(1.5), tsallis(2.5), renyi(0.5))


# ----------------------------------------------------------------------
# EntropyKind validation
# ----------------------------------------------------------------------

def test_kind_validation():
    with pytest.raises(InvalidExponent):
        renyi(1.7)  # outside the concave range without the override
    assert renyi(1.7, allow_nonconcave=True).q == 1.7
    with pytest.raises(InvalidExponent):
        tsallis(0.0)
    with pytest.raises(InvalidExponent):
        tsallis(-1.0)
    with pytest.raises(InvalidExponent):
        EntropyKind("tsallis")  # missing q
    with pytest.raises(InvalidExponent):
        EntropyKind("von_neumann", q=2.0)
    assert not renyi(1.7, allow_nonconcave=True).is_concave
    assert tsallis(3.0).is_concave


# ----------------------------------------------------------------------
# Golden values
# ----------------------------------------------------------------------

def test_pure_state_entropy_is_zero():
    phi = pure_state(np.array([1, 1j, 0]) / np.sqrt(2))
    for kind in ALL_KINDS:
        assert abs(entropy(kind, phi)) < 1e-12


def test_maximally_mixed_golden_values():
    mm = maximally_mixed(2)
    assert abs(entropy(VON_NEUMANN, mm) - np.log(2)) < 1e-12
    assert abs(entropy(QUADRATIC, mm) - 0.5) < 1e-12


def test_tsallis_two_on_diag():
    rho = DensityMatrix(np.diag([0.75, 0.25]).astype(complex))
    assert abs(entropy(tsallis(2.0), rho) - 0.375) < 1e-12


def test_tsallis_near_one_matches_high_precision_oracle():
    spec = [0.4, 0.35, 0.15, 0.1]
    mp.dps = 50
    for dq in (1e-9, -1e-9):
        q = 1.0 + dq
        exact = float((sum(power(mpf(l), mpf(q)) for l in spec) - 1) / (1 - mpf(q)))
        ours = entropy_from_spectrum(tsallis(q), spec)
        assert abs(ours - exact) < 1e-6
        exact_renyi = float(mp.log(sum(power(mpf(l), mpf(q)) for l in spec)) / (1 - mpf(q)))
        assert abs(entropy_from_spectrum(EntropyKind("renyi", q, True), spec) - exact_renyi) < 1e-6


def test_tsallis_near_one_matches_von_neumann_on_random_states():
    rng = make_rng(21)
    for _ in range(20):
        rho = random_density(4, int(rng.integers(1, 5)), rng)
        vn = entropy(VON_NEUMANN, rho)
        assert abs(entropy(tsallis(1.0 + 1e-9), rho) - vn) < 1e-6
        assert abs(entropy(tsallis(1.0 - 1e-9), rho) - vn) < 1e-6


# ----------------------------------------------------------------------
# Structural properties
# ----------------------------------------------------------------------

def test_unitary_invariance():
    rng = make_rng(2)
    rho = random_density(4, 3, rng)
    u = random_unitary(4, rng)
    rotated = DensityMatrix(u @ rho.mat @ u.conj().T, validate=False)
    for kind in ALL_KINDS:
        assert abs(entropy(kind, rotated) - entropy(kind, rho)) < 1e-10


def test_spectrum_only_dependence_zero_padding():
    rng = make_rng(3)
    rho = random_density(3, 3, rng)
    padded = np.zeros((5, 5), dtype=complex)
    padded[:3, :3] = rho.mat
    padded_rho = DensityMatrix(padded, validate=False)
    for kind in ALL_KINDS:
        assert abs(entropy(kind, padded_rho) - entropy(kind, rho)) < 1e-10


def test_concavity_sample():
    rng = make_rng(4)
    for _ in range(100):
        d = int(rng.integers(2, 5))
        p = float(rng.uniform(0.05, 0.95))
        r1 = random_density(d, int(rng.integers(1, d + 1)), rng)
        r2 = random_density(d, int(rng.integers(1, d + 1)), rng)
        mix = DensityMatrix(p * r1.mat + (1 - p) * r2.mat, validate=False)
        for kind in ALL_KINDS:
            gap = entropy(kind, mix) - p * entropy(kind, r1) - (1 - p) * entropy(kind, r2)
            assert gap >= -1e-9


def test_entropy_nonnegative():
    rng = make_rng(5)
    for _ in range(50):
        rho = random_density(3, int(rng.integers(1, 4)), rng)
        for kind in ALL_KINDS:
            assert entropy(kind, rho) >= -1e-10


# ----------------------------------------------------------------------
# Distances
# ----------------------------------------------------------------------

def test_hs_distance_golden():
    z0 = pure_state(np.array([1.0, 0.0]))
    z1 = pure_state(np.array([0.0, 1.0]))
    assert hs_distance(z0, z0) == 0.0
    assert abs(hs_distance(z0, z1) - 2.0) < 1e-12
    assert abs(hs_distance(z0, maximally_mixed(2)) - 0.5) < 1e-12


def test_schatten_distance_reduces_to_hs_at_two():
    rng = make_rng(6)
    a = random_density(3, 2, rng)
    b = random_density(3, 3, rng)
    assert abs(schatten_q_distance(a, b, 2.0) - hs_distance(a, b)) < 1e-14


def test_schatten_distance_orthogonal_pure_any_q():
    z0 = pure_state(np.array([1.0, 0.0]))
    z1 = pure_state(np.array([0.0, 1.0]))
    for q in (1.0, 1.5, 2.0, 2.5, 3.0):
        assert abs(schatten_q_distance(z0, z1, q) - 2.0) < 1e-12


def test_schatten_distance_overlap_formula():
    # pure states with overlap c: Tr|rho-sigma|^q = 2 (1-c)^(q/2);
    # frozen value at c=0.3, q=1.7 computed at 50-digit precision
    rng = make_rng(7)
    for c in (0.0, 0.3, 0.7, 0.95):
        u = random_unitary(2, rng)
        v0 = u[:, 0]
        v1 = np.sqrt(c) * v0 + np.sqrt(1 - c) * u[:, 1]
        r0, r1 = pure_state(v0), pure_state(v1)
        for q in (1.0, 1.7, 2.0, 3.0):
            expect = 2.0 * (1.0 - c) ** (q / 2.0)
            assert abs(schatten_q_distance(r0, r1, q) - expect) < 1e-10
    u = random_unitary(2, rng)
    v1 = np.sqrt(0.3) * u[:, 0] + np.sqrt(0.7) * u[:, 1]
    got = schatten_q_distance(pure_state(u[:, 0]), pure_state(v1), 1.7)
    assert abs(got - 1.4769416222306342) < 1e-12


def test_distance_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        hs_distance(maximally_mixed(2), maximally_mixed(3))
