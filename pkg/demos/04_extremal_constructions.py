#!/usr/bin/env python3
"""The extremal families: graphs that push the bounds to their limits.

The tail clique drives psi close to the diameter-d upper bound while its
lambda/psi ratio sits right at 3; the linked-leaf star makes the
subversion bound sharp; the apex construction shows the conjectured
diameter-3 subversion bound could not be lowered.
"""

from fractions import Fraction

from dcpebble import (
    DOMINATION,
    apex_pendant_clique,
    apex_pendant_clique_witness,
    is_solvable,
    lambda_stacking,
    pebbling_value,
    psi_upper_bound,
    star_with_leaf_path,
    star_with_leaf_path_witness,
    subversion,
    subversion_bounds,
    tail_clique,
    tail_clique_psi_lower_bound,
    tail_clique_witness,
)

print("Tail clique: high domination cost at every diameter.")
for m in (1, 2, 3):
    g = tail_clique(m, 3)
    lam = lambda_stacking(g).value
    psi = pebbling_value(g, DOMINATION).value
    lower = tail_clique_psi_lower_bound(m, 3)
    upper = psi_upper_bound(g.n, 3)
    witness = tail_clique_witness(m, 3)
    unsolvable = is_solvable(g, witness, DOMINATION).solvable is False
    print(f"  m={m}: order {g.n}, psi = {psi} in [{lower}, {upper}],"
          f" witness unsolvable: {unsolvable},"
          f" lambda = {lam}, ratio = {Fraction(lam, psi)}")

print("\nLinked-leaf stars: the diameter-2 subversion bound is sharp.")
for n in (6, 7, 8):
    h = star_with_leaf_path(n, 1)
    value = pebbling_value(h, subversion(1)).value
    bound = subversion_bounds(n, 1)[0]
    witness = star_with_leaf_path_witness(n, 1)
    stuck = is_solvable(h, witness, subversion(1)).solvable is False
    print(f"  order {n}: Omega_1 = {value} = bound {bound},"
          f" size-{sum(witness)} witness unsolvable: {stuck}")

print("\nApex construction: the conjectured diameter-3 bound, if true,")
print("is the best possible.")
for n, omega in ((7, 1), (8, 1), (7, 2)):
    g = apex_pendant_clique(n, omega)
    witness = apex_pendant_clique_witness(n, omega)
    floor_bound = (3 * (n - 2 - omega)) // 2
    conjectured = subversion_bounds(n, omega)[1]
    value = pebbling_value(g, subversion(omega)).value
    print(f"  n={n} omega={omega}: witness of size {sum(witness)} is"
          f" unsolvable: {is_solvable(g, witness, subversion(omega)).solvable is False},"
          f" exact Omega = {value}, conjectured cap {conjectured}")
