"""The Mobius and Einstein gyrogroups on the open unit ball.

Shows the two additions, the Lorentz factor, gyrations extracted as
rotation matrices, and the sampled law suite with its residuals.
"""

import numpy as np

from gyrokit import (BallGyrogroup, ball_gyration_matrix, check_ball_laws,
                     coaddition, gyration, lorentz_gamma)

print("=" * 70)
print("1. Collinear velocity addition")
print("=" * 70)

u = np.array([0.5, 0.0])
for variant in ("mobius", "einstein"):
    ball = BallGyrogroup(dim=2, variant=variant)
    print(f"  {variant:9s} (0.5,0) + (0.5,0) = {ball.oplus(u, u)}")
print(f"  lorentz gamma at speed 0.8   = {lorentz_gamma(np.array([0.8, 0.0]))}")
print("  (collinear speeds compose like relativistic velocities)\n")

print("=" * 70)
print("2. Gyrations are rotations")
print("=" * 70)

ball = BallGyrogroup(dim=2, variant="mobius")
a = np.array([0.3, 0.0])
b = np.array([0.0, 0.4])
c = np.array([0.1, 0.0])
print(f"  gyr[a,b]c for a={a}, b={b}, c={c}:")
print(f"    {gyration(ball, a, b, c)}")

m = ball_gyration_matrix(ball, a, b, samples=32, seed=7)
print("\n  extracted matrix (probe columns):")
print(np.array2string(m.matrix, precision=12))
angle = np.degrees(np.arctan2(m.matrix[1, 0], m.matrix[0, 0]))
print(f"  rotation by {angle:.6f} degrees")
print(f"  linearity residual     {m.linearity_residual:.2e}")
print(f"  orthogonality residual {m.orthogonality_residual:.2e}")
print("  (linearity and orthogonality are measured, never assumed)\n")

collinear = ball_gyration_matrix(ball, np.array([0.3, 0.0]),
                                 np.array([0.6, 0.0]), samples=8, seed=7)
print("  collinear a, b give the identity gyration:")
print(np.array2string(collinear.matrix, precision=12, suppress_small=True))

print()
print("=" * 70)
print("3. Coaddition, the dual operation")
print("=" * 70)

x = np.array([0.5, 0.0])
y = np.array([0.0, 0.5])
print(f"  a [+] b for a={x}, b={y}: {coaddition(ball, x, y)}")
print("  (exact value (0.4, 0.4), a neat rational point)\n")

print("=" * 70)
print("4. Sampled law suite, 1000 random triples, norms <= 0.99")
print("=" * 70)

for variant in ("mobius", "einstein"):
    out = check_ball_laws(BallGyrogroup(dim=2, variant=variant), 1000, seed=42)
    print(f"\n  {variant} worst residuals:")
    for law in ("gyroassociativity", "left_loop", "left_cancellation",
                "right_cancellation_1", "right_cancellation_2",
                "automorphism"):
        print(f"    {law:22s} {out[law]:.2e}")
    print(f"    closure (all sums inside the ball): {out['closure']}")
