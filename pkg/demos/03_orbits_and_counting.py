"""Gyrogroup actions on finite sets and the counting theorems.

The conjugation action of S3 on itself recovers the familiar class
equation; Burnside's double counting gives the orbit count as an exact
rational; and the faithful quotient collapses a kernel away.
"""

import numpy as np

from gyrokit import (build_representation, burnside_count,
                     check_orbit_stabilizer, classify,
                     faithful_quotient_action, orbit_decomposition_equation,
                     orbits_and_stabilizers, validate_action,
                     validate_gyrogroup)
from gyrokit.catalog import cyclic, symmetric

print("=" * 70)
print("1. S3 acting on itself by conjugation  a . x = (a + x) - a")
print("=" * 70)

s3 = validate_gyrogroup(symmetric(3))
conj = np.array([[s3.oplus(s3.oplus(a, x), s3.oinv(a)) for x in range(6)]
                 for a in range(6)])
gset = validate_action(s3, conj)
dec = orbits_and_stabilizers(gset)
print(f"  orbits (= conjugacy classes): {[set(o) for o in dec.orbits]}")
print(f"  fixed points (= the center): {set(dec.fixed_points)}")
print(f"  stabilizers (= centralizers), orders: "
      f"{[len(s) for s in dec.stabilizers]}")

report = check_orbit_stabilizer(gset, dec)
print(f"\n  |G| = |orb(x)| |stab(x)| at every point: {report.passed}")

ode = orbit_decomposition_equation(gset, dec)
print(f"  class equation: {ode.detail['equation']}")

count = burnside_count(gset, dec)
fix_sizes = [len(f) for f in dec.fixed_by]
print(f"\n  Burnside count: ({' + '.join(map(str, fix_sizes))}) / 6 "
      f"= {count} orbits (exact rational)\n")

print("=" * 70)
print("2. Classifying actions")
print("=" * 70)

z3 = validate_gyrogroup(cyclic(3))
regular = validate_action(z3, cyclic(3))
print(f"  Z3 on itself by left addition: {classify(regular)}")
print(f"  S3 conjugation:                {classify(gset)}\n")

print("=" * 70)
print("3. The faithful quotient")
print("=" * 70)

z6 = validate_gyrogroup(cyclic(6))
reduction = validate_action(
    z6, np.array([[(a + x) % 3 for x in range(3)] for a in range(6)]))
kernel = build_representation(reduction).kernel
print(f"  Z6 acts on 3 points by reduction; kernel = {set(kernel)}")
quotient = faithful_quotient_action(reduction)
print(f"  quotient carrier order: {quotient.carrier.order}")
print(f"  quotient action is faithful: {classify(quotient).faithful}")
print(f"  quotient action table:\n{quotient.table}")
