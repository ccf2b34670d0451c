"""Tour of the four entropy families and the distance functionals.

Run: python demos/01_entropy_families.py
"""

import numpy as np

from firmsa import (
    QUADRATIC,
    VON_NEUMANN,
    DensityMatrix,
    entropy,
    hs_distance,
    maximally_mixed,
    pure_state,
    renyi,
    schatten_q_distance,
    tsallis,
)

states = {
    "pure |0>": pure_state(np.array([1.0, 0.0])),
    "I/2": maximally_mixed(2),
    "diag(3/4, 1/4)": DensityMatrix(np.diag([0.75, 0.25]).astype(complex)),
    "I/3": maximally_mixed(3),
}

kinds = [VON_NEUMANN, renyi(0.5), tsallis(0.5), tsallis(2.0), QUADRATIC]

print(f"{'state':16s}" + "".join(f"{k.label():>16s}" for k in kinds))
for name, rho in states.items():
    row = "".join(f"{entropy(k, rho):16.6f}" for k in kinds)
    print(f"{name:16s}{row}")

print("\nTsallis interpolates between von Neumann (q->1) and quadratic (q=2):")
rho = DensityMatrix(np.diag([0.6, 0.3, 0.1]).astype(complex))
for q in (1.0 + 1e-9, 1.25, 1.5, 1.75, 2.0):
    print(f"  S_T(q={q:.9g})  = {entropy(tsallis(q), rho):.6f}")
print(f"  von Neumann     = {entropy(VON_NEUMANN, rho):.6f}")
print(f"  quadratic       = {entropy(QUADRATIC, rho):.6f}")

print("\nDistances between |0><0| and I/2:")
z0 = pure_state(np.array([1.0, 0.0]))
mm = maximally_mixed(2)
print(f"  squared Hilbert-Schmidt distance: {hs_distance(z0, mm):.6f}")
for q in (1.0, 1.5, 2.0, 3.0):
    print(f"  Tr|rho-sigma|^{q:<3g}: {schatten_q_distance(z0, mm, q):.6f}")
