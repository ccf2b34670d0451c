import numpy as np
import pytest

from firmsa import DensityMatrix, Povm, povm_from_basis, pure_state


@pytest.fixture
def bell() -> DensityMatrix:
    return pure_state(np.array([1, 0, 0, 1]) / np.sqrt(2), dims=(2, 2))


@pytest.fixture
def classical() -> DensityMatrix:
    """(|00><00| + |11><11|) / 2."""
    return DensityMatrix(np.diag([0.5, 0, 0, 0.5]).astype(complex), dims=(2, 2))


@pytest.fixture
def ghz() -> DensityMatrix:
    v = np.zeros(8)
    v[0] = v[7] = 1 / np.sqrt(2)
    return pure_state(v, dims=(2, 2, 2))


@pytest.fixture
def z_povm() -> Povm:
    return povm_from_basis(np.eye(2))


@pytest.fixture
def x_povm() -> Povm:
    return povm_from_basis(np.array([[1, 1], [1, -1]]) / np.sqrt(2))


@pytest.fixture
def trine_povm() -> Povm:
    """{(2/3)|v_j><v_j|} with the v_j at 120 degrees in the x-z plane."""
    els = []
    for k in range(3):
        th = 2 * np.pi * k / 3
        v = np.array([np.cos(th / 2), np.sin(th / 2)], dtype=complex)
        els.append(2.0 / 3.0 * np.outer(v, v.conj()))
    return Povm(els, 2)
