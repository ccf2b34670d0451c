"""Exhibit Tsallis discord going negative for exponents between 2 and 3.

Searches for a violating (state, POVM) pair at q = 2.5, sweeps its
discord over q in [1, 4], and writes two CSVs: the violating curve and
a Bell-state curve for contrast.  Render them with the plotfig package:

    plotfig fig1_solid.csv fig1_dashed.csv --out fig1.svg

Run: python demos/04_negative_discord_window.py   (about a minute)
"""

import numpy as np

from firmsa import pure_state, serialize, tsallis
from firmsa.search import SearchConfig, run_search, sweep_q
from firmsa.states import make_rng, random_basis_povm

cfg = SearchConfig(objective="fsa", kind=tsallis(2.5), dims=(2, 2),
                   povm_outcomes=2, restarts=12, local_steps=1200, seed=1)
print(f"searching (restarts={cfg.restarts}, steps={cfg.local_steps}, seed={cfg.seed})...")
outcome = run_search(cfg)
cert = outcome.certificate
if cert is None:
    raise SystemExit(f"no violation found at this budget (best {outcome.best_value:.3e})")
print(f"found: discord {cert.discord_value:.6e} at q = {cert.q} in {outcome.wall_time:.1f}s")

grid = np.linspace(1.0, 4.0, 301)
solid = sweep_q(cert.rho_ab, cert.povm, grid)
v = solid.discord_values
neg = grid[v < -1e-6]
print(f"negative window of the found instance: [{neg.min():.3f}, {neg.max():.3f}], "
      f"depth {v.min():.3e}")

bell = pure_state(np.array([1, 0, 0, 1]) / np.sqrt(2), dims=(2, 2))
dashed = sweep_q(bell, random_basis_povm(2, make_rng(3)), grid)

serialize.atomic_write_text("fig1_solid.csv", solid.to_csv())
serialize.atomic_write_text("fig1_dashed.csv", dashed.to_csv())
print("wrote fig1_solid.csv (dips below zero) and fig1_dashed.csv (stays positive)")
