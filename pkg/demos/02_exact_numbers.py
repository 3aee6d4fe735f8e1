#!/usr/bin/env python3
"""Exact pebbling values by exhaustive search.

psi: least k making every k-pebble configuration dominate after moves.
lambda: least k making every k-pebble configuration coverable (one pebble
on every vertex); equals the max over target vertices of sum 2^distance.
Omega_omega: subversion variant; undominated components of more than
omega vertices must be eliminable.  Omega_0 coincides with psi.
"""

from dcpebble import (
    DOMINATION,
    FULL_COVER,
    complete,
    format_configuration,
    lambda_stacking,
    pebbling_value,
    star,
    subversion,
    wheel,
)

print("Stars are the sharp case of the diameter-2 bound psi <= n-1:")
for k in range(2, 7):
    g = star(k + 1)
    rep = pebbling_value(g, DOMINATION)
    print(f"  psi(star order {k+1}) = {rep.value}"
          f"  witness {format_configuration(rep.witness)}")

print("\nCover pebbling by stacking rule vs brute force:")
for g, name in ((complete(2), "K2"), (star(5), "star_5"), (wheel(5), "wheel")):
    stack = lambda_stacking(g)
    brute = pebbling_value(g, FULL_COVER)
    print(f"  {name}: stacking {stack.value}, brute force {brute.value},"
          f" worst stack at vertex {stack.witness.index(max(stack.witness))}")

print("\nWheels (hub + n-cycle) have Omega_omega = n-2-omega:")
for n in (5, 6, 7):
    for omega in (1, 2):
        rep = pebbling_value(wheel(n), subversion(omega))
        print(f"  Omega_{omega}(wheel rim={n}) = {rep.value}"
              f"  witness {format_configuration(rep.witness)}")

print("\nOmega_0 is the same number as psi:")
g = wheel(6)
print("  wheel rim=6: psi =", pebbling_value(g, DOMINATION).value,
      " Omega_0 =", pebbling_value(g, subversion(0)).value)
