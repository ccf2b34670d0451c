import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from firmsa import linalg
from firmsa.errors import (
    BadPartition,
    BadRank,
    DimensionMismatch,
    InvariantViolation,
)
from firmsa.states import (
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
    povm_from_basis,
    pure_state,
    purify,
    random_basis_povm,
    random_channel,
    random_density,
    random_povm,
)


# ----------------------------------------------------------------------
# Type invariants
# ----------------------------------------------------------------------

def test_generated_objects_satisfy_invariants_bulk():
    # constructors validate; the loop fails loudly if any seed produces a
    # Hermiticity/PSD/trace/completeness violation
    for seed in range(1000):
        rng = make_rng(seed)
        d = 2 + seed % 3
        rho = random_density(d, 1 + seed % d, rng)
        assert abs(np.trace(rho.mat).real - 1.0) < 1e-10
        povm = random_povm(d, 2 + seed % 3, rng, rank1=(seed % 2 == 0 and 2 + seed % 3 >= d))
        assert linalg.max_abs_diff(sum(povm.elements), np.eye(d)) < 1e-9
        ch = random_channel(d, 2, 1 + (seed % 3) * d, rng) if (1 + (seed % 3) * d) * 2 >= d else None
        if ch is not None:
            total = sum(k.conj().T @ k for k in ch.kraus)
            assert linalg.max_abs_diff(total, np.eye(d)) < 1e-9


def test_density_matrix_rejects_bad_inputs():
    with pytest.raises(InvariantViolation):
        DensityMatrix(np.diag([0.9, 0.2]).astype(complex))  # trace 1.1
    with pytest.raises(InvariantViolation):
        DensityMatrix(np.diag([1.5, -0.5]).astype(complex))  # negative eigenvalue
    with pytest.raises(InvariantViolation):
        DensityMatrix(np.array([[0.5, 0.5], [0.0, 0.5]]))  # not Hermitian
    with pytest.raises(DimensionMismatch):
        DensityMatrix(np.eye(4) / 4, dims=(2, 3))


def test_random_density_rank_and_determinism():
    rng = make_rng(42)
    pure = random_density(2, 1, rng)
    assert abs(pure.purity() - 1.0) < 1e-10
    full = random_density(4, 4, make_rng(0))
    assert full.rank() == 4
    a = random_density(2, 2, make_rng(42)).mat
    b = random_density(2, 2, make_rng(42)).mat
    assert np.array_equal(a, b)
    with pytest.raises(BadRank):
        random_density(2, 3, rng)


# ----------------------------------------------------------------------
# POVMs
# ----------------------------------------------------------------------

def test_random_basis_povm_is_projective():
    povm = random_basis_povm(2, make_rng(1))
    p0, p1 = povm.elements
    assert linalg.max_abs_diff(p0 @ p0, p0) < 1e-12
    assert linalg.max_abs_diff(p0 @ p1, np.zeros((2, 2))) < 1e-12


def test_random_povm_rank1_four_outcomes():
    povm = random_povm(2, 4, make_rng(3), rank1=True)
    assert povm.n_outcomes == 4
    assert povm.is_rank1()
    assert linalg.max_abs_diff(sum(povm.elements), np.eye(2)) < 1e-12


def test_trine_povm_sums_to_identity(trine_povm):
    # direct summation of the three projectors is the oracle
    total = sum(trine_povm.elements)
    assert linalg.max_abs_diff(total, np.eye(2)) < 1e-12
    assert trine_povm.is_rank1()


def test_povm_validation():
    with pytest.raises(InvariantViolation):
        Povm([np.diag([0.5, 0.5]).astype(complex)], 2)  # does not sum to identity
    with pytest.raises(InvariantViolation):
        Povm([np.diag([1.5, 1.0]).astype(complex), np.diag([-0.5, 0.0]).astype(complex)], 2)


# ----------------------------------------------------------------------
# Purification
# ----------------------------------------------------------------------

def test_purify_maximally_mixed():
    psi = purify(maximally_mixed(2))
    assert psi.dims == (2, 2)
    assert psi.is_pure(1e-12)
    assert linalg.max_abs_diff(psi.ptrace([0]).mat, np.eye(2) / 2) < 1e-10


def test_purify_pure_input_gets_trivial_ancilla():
    phi = pure_state(np.array([1, 1j]) / np.sqrt(2))
    psi = purify(phi)
    assert psi.dims == (2, 1)
    assert linalg.max_abs_diff(psi.ptrace([0]).mat, phi.mat) < 1e-12


def test_purify_roundtrip_rank3():
    rho = random_density(4, 3, make_rng(9))
    psi = purify(rho)
    assert psi.dims == (4, 3)
    assert linalg.max_abs_diff(psi.ptrace([0]).mat, rho.mat) < 1e-10


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_purify_roundtrip_property(seed):
    rng = make_rng(seed)
    d = int(rng.integers(2, 9))
    rank = int(rng.integers(1, d + 1))
    rho = random_density(d, rank, rng)
    psi = purify(rho)
    assert psi.is_pure(1e-10)
    assert linalg.max_abs_diff(psi.ptrace([0]).mat, rho.mat) < 1e-10


# ----------------------------------------------------------------------
# Measurement
# ----------------------------------------------------------------------

def test_measure_classical_state_z_and_x(classical, z_povm, x_povm):
    ens = measure_ensemble(classical, z_povm)
    assert np.allclose(ens.probs, [0.5, 0.5])
    assert linalg.max_abs_diff(ens.states[0].mat, np.diag([1, 0])) < 1e-12
    assert linalg.max_abs_diff(ens.states[1].mat, np.diag([0, 1])) < 1e-12

    ens_x = measure_ensemble(classical, x_povm)
    assert np.allclose(ens_x.probs, [0.5, 0.5])
    for st_ in ens_x.states:
        assert linalg.max_abs_diff(st_.mat, np.eye(2) / 2) < 1e-12


def test_measure_product_state_conditionals_equal_marginal():
    rng = make_rng(12)
    rho_a = random_density(2, 2, rng)
    rho_b = random_density(3, 2, rng)
    joint = rho_a.tensor(rho_b)
    povm = random_povm(2, 3, rng)
    ens = measure_ensemble(joint, povm)
    for st_ in ens.states:
        assert linalg.max_abs_diff(st_.mat, rho_b.mat) < 1e-10


@pytest.mark.parametrize("d_a", [2, 3, 4])
@pytest.mark.parametrize("d_b", [2, 3, 4])
def test_measure_ensemble_average_recovers_marginal(d_a, d_b):
    rng = make_rng(d_a * 10 + d_b)
    rho = random_density(d_a * d_b, d_a * d_b // 2 + 1, rng, dims=(d_a, d_b))
    povm = random_povm(d_a, d_a + 1, rng)
    ens = measure_ensemble(rho, povm)
    avg = sum(p * st_.mat for p, st_ in zip(ens.probs, ens.states))
    assert linalg.max_abs_diff(avg, rho.ptrace([1]).mat) < 1e-10


def test_measure_joint_classical(classical, z_povm):
    ens = measure_joint(classical, z_povm)
    assert linalg.max_abs_diff(ens.states[0].mat, np.diag([1, 0, 0, 0])) < 1e-12
    assert linalg.max_abs_diff(ens.states[1].mat, np.diag([0, 0, 0, 1])) < 1e-12


def test_measure_joint_pure_state_rank1_povm_gives_pure_outcomes(bell):
    povm = random_povm(2, 3, make_rng(5), rank1=True)
    ens = measure_joint(bell, povm)
    for st_ in ens.states:
        assert st_.is_pure(1e-10)


def test_measure_joint_marginals_match_measure_ensemble():
    rng = make_rng(8)
    rho = random_density(6, 4, rng, dims=(2, 3))
    povm = random_povm(2, 3, rng)
    joint = measure_joint(rho, povm)
    cond = measure_ensemble(rho, povm)
    assert np.allclose(joint.probs, cond.probs, atol=1e-12)
    for jst, cst in zip(joint.states, cond.states):
        assert linalg.max_abs_diff(jst.ptrace([1]).mat, cst.mat) < 1e-10


def test_measure_dimension_mismatch(bell):
    with pytest.raises(DimensionMismatch):
        measure_ensemble(bell, random_povm(3, 3, make_rng(0)))


# ----------------------------------------------------------------------
# Channels
# ----------------------------------------------------------------------

def test_identity_and_depolarizing_channels():
    rho = pure_state(np.array([1.0, 0.0]))
    ident = KrausChannel([np.eye(2, dtype=complex)])
    assert linalg.max_abs_diff(apply_channel(ident, rho).mat, rho.mat) < 1e-14

    paulis = [
        np.eye(2, dtype=complex),
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    ]
    depol = KrausChannel([p / 2 for p in paulis])
    assert linalg.max_abs_diff(apply_channel(depol, rho).mat, np.eye(2) / 2) < 1e-12


def test_trace_out_channel_matches_partial_trace():
    from firmsa.checks import _trace_out_second_channel

    rng = make_rng(2)
    rho_bc = random_density(6, 5, rng, dims=(2, 3))
    ch = _trace_out_second_channel(2, 3)
    out = apply_channel(ch, DensityMatrix(rho_bc.mat, validate=False))
    assert linalg.max_abs_diff(out.mat, rho_bc.ptrace([0]).mat) < 1e-12


def test_random_channel_unitary_case_and_determinism():
    ch = random_channel(3, 3, 1, make_rng(6))
    k = ch.kraus[0]
    assert linalg.max_abs_diff(k.conj().T @ k, np.eye(3)) < 1e-9
    again = random_channel(3, 3, 1, make_rng(6))
    assert np.array_equal(ch.kraus[0], again.kraus[0])


# ----------------------------------------------------------------------
# Naimark extension
# ----------------------------------------------------------------------

def test_naimark_projective_input_preserves_probabilities(z_povm):
    v, proj = naimark_extend(z_povm)
    rho = random_density(2, 2, make_rng(4))
    for p_el, pi in zip(z_povm.elements, proj.elements):
        p1 = np.trace(p_el @ rho.mat).real
        p2 = np.trace(pi @ (v @ rho.mat @ v.conj().T)).real
        assert abs(p1 - p2) < 1e-12


def test_naimark_trine_uniform_on_maximally_mixed(trine_povm):
    v, proj = naimark_extend(trine_povm)
    mm = maximally_mixed(2)
    lifted = v @ mm.mat @ v.conj().T
    for pi in proj.elements:
        assert abs(np.trace(pi @ lifted).real - 1.0 / 3.0) < 1e-12


def test_naimark_random_povm_50_states():
    rng = make_rng(10)
    povm = random_povm(3, 5, rng, rank1=True)
    v, proj = naimark_extend(povm)
    assert linalg.max_abs_diff(v.conj().T @ v, np.eye(3)) < 1e-9
    worst = 0.0
    for _ in range(50):
        rho = random_density(3, int(rng.integers(1, 4)), rng)
        lifted = v @ rho.mat @ v.conj().T
        for p_el, pi in zip(povm.elements, proj.elements):
            worst = max(worst, abs(np.trace(p_el @ rho.mat).real - np.trace(pi @ lifted).real))
    assert worst < 1e-9


# ----------------------------------------------------------------------
# Coarse-graining, ensembles
# ----------------------------------------------------------------------

def test_coarse_grain_identity_and_full_merge():
    povm = random_povm(2, 4, make_rng(3), rank1=True)
    same = coarse_grain(povm, [[0], [1], [2], [3]])
    for a, b in zip(same.elements, povm.elements):
        assert linalg.max_abs_diff(a, b) == 0.0
    merged = coarse_grain(povm, [[0, 1, 2, 3]])
    assert linalg.max_abs_diff(merged.elements[0], np.eye(2)) < 1e-12


def test_coarse_grain_bad_partition():
    povm = random_povm(2, 3, make_rng(3))
    with pytest.raises(BadPartition):
        coarse_grain(povm, [[0, 1]])  # misses outcome 2
    with pytest.raises(BadPartition):
        coarse_grain(povm, [[0, 1], [1, 2]])  # duplicates outcome 1


def test_ensemble_drops_zero_probability_members():
    rng = make_rng(0)
    states = [random_density(2, 1, rng) for _ in range(3)]
    ens = Ensemble([0.5, 0.0, 0.5], states)
    assert ens.size == 2
    with pytest.raises(InvariantViolation):
        Ensemble([0.6, 0.6], states[:2])


def test_povm_from_basis_rejects_nothing_but_is_projective(x_povm):
    assert x_povm.is_rank1()
    assert linalg.max_abs_diff(sum(x_povm.elements), np.eye(2)) < 1e-12
