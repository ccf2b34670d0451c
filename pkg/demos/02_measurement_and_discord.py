"""Measured Holevo quantities and generalized discord on canonical states.

The classically-correlated two-qubit state stores its z-type information
in b perfectly while its x-type information is absent; the Bell state
has discord ln 2 in every basis; a Werner state sits in between.

Run: python demos/02_measurement_and_discord.py
"""

import numpy as np

from firmsa import (
    QUADRATIC,
    VON_NEUMANN,
    DensityMatrix,
    conditional_entropy,
    discord,
    holevo_measured,
    measure_ensemble,
    mutual_information,
    povm_from_basis,
    pure_state,
    tsallis,
)

classical = DensityMatrix(np.diag([0.5, 0, 0, 0.5]).astype(complex), dims=(2, 2))
bell = pure_state(np.array([1, 0, 0, 1]) / np.sqrt(2), dims=(2, 2))
werner = DensityMatrix(0.5 * bell.mat + 0.5 * np.eye(4) / 4, dims=(2, 2))

z = povm_from_basis(np.eye(2))
x = povm_from_basis(np.array([[1, 1], [1, -1]]) / np.sqrt(2))

print("classically-correlated state (|00><00| + |11><11|)/2:")
ens = measure_ensemble(classical, z)
print(f"  Z outcomes: p = {np.round(ens.probs, 6)}, conditionals pure -> chi(Z) = "
      f"{holevo_measured(VON_NEUMANN, classical, z):.6f} (= ln 2)")
print(f"  X measurement leaves b untouched   -> chi(X) = "
      f"{holevo_measured(VON_NEUMANN, classical, x):.2e}")
print(f"  discord in its own basis: {discord(VON_NEUMANN, classical, z):.2e}")

print("\nBell state:")
print(f"  S(a:b) = {mutual_information(VON_NEUMANN, bell):.6f} (= 2 ln 2)")
print(f"  chi(Z) = {holevo_measured(VON_NEUMANN, bell, z):.6f} (= ln 2)")
print(f"  discord = {discord(VON_NEUMANN, bell, z):.6f} (= ln 2)")
print(f"  measured conditional mutual information: "
      f"{conditional_entropy(VON_NEUMANN, bell, z, target='joint'):.2e}")

print("\nWerner state p=1/2, Z basis:")
for kind in (VON_NEUMANN, QUADRATIC, tsallis(1.5), tsallis(2.5)):
    print(f"  {kind.label():>14s}: S(a:b) = {mutual_information(kind, werner):.6f}, "
          f"chi = {holevo_measured(kind, werner, z):.6f}, "
          f"discord = {discord(kind, werner, z):.6f}")
