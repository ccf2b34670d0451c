"""Randomized verification of the subadditivity-family inequalities.

Same machinery as ``firmsa check``, at a demo-sized trial count: the
four equivalent firm-subadditivity conditions for the von Neumann and
quadratic entropies, the strengthened von Neumann conditions plus the
strong-subadditivity gap, Schatten-q contraction on pure-state
differences, the purification identity, and the pairwise form of the
quadratic Holevo quantity.

Run: python demos/03_property_suites.py
"""

from firmsa.checks import run_suites

report = run_suites(("thm2", "thm3", "lemma4", "eq10", "eq25", "eq27", "sa", "concavity"),
                    trials=100, seed=0)
for suite in report["suites"]:
    print(f"suite {suite['suite']} (trials={suite['trials']}):")
    for c in suite["checks"]:
        mark = "ok " if c["pass"] else "BAD"
        rel = ">=" if c["mode"] == "ineq" else "<="
        bound = -c["tolerance"] if c["mode"] == "ineq" else c["tolerance"]
        print(f"  [{mark}] {c['label']:42s} worst gap {c['worst_gap']:+.3e} {rel} {bound:+.1e}")
print("all pass" if report["pass"] else "FAILURES above")
