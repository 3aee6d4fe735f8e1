#!/usr/bin/env python3
"""Sweep every connected graph of order up to 5 and check all bounds.

Proven bounds (psi <= diameter bound, psi <= lambda, ratio >= 3 at
diameter <= 2, subversion bound) are hard checks; the two conjectures
(ratio >= 3 everywhere, the diameter-3 subversion bound) are reported as
findings when violated.  On this corpus everything holds.
"""

from dcpebble import connected_graph6_lines
from dcpebble.harness import run_sweep, sweep_exit_code

lines = [ln for n in range(2, 6) for ln in connected_graph6_lines(n)]
records, summary = run_sweep(lines, omegas=(1,), cross_check_lambda=True)

print(f"{'graph':>8} {'n':>2} {'diam':>4} {'psi':>4} {'lambda':>6}"
      f" {'ratio':>6} {'Omega_1':>7}")
for rec in records:
    print(f"{rec.graph_id:>8} {rec.n:>2} {rec.diameter:>4} {rec.psi:>4}"
          f" {rec.lam:>6} {rec.ratio:>6} {rec.omega_values[1]:>7}")

print()
print("graphs analyzed:  ", summary["graphs"])
print("minimum ratio:    ", summary["min_ratio"])
print("bound violations: ", summary["violations"] or "none")
print("conjecture findings:", summary["findings"] or "none")
print("exit code would be:", sweep_exit_code(summary))
