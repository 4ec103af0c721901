"""The two coefficient families and how far their series can be trusted.

The carrying-capacity series is driven by the alpha-Euler numbers E_k
(odd-indexed, sigmoid Taylor data at alpha = 1); the zero-capacity series
by the A-coefficients (alternating, 1/(t+2) Taylor data at alpha = 1).
The root test applied to a finite table estimates the true convergence
radius, which comfortably dominates the guaranteed lower bounds.
"""

import math

from fracsis import (
    a_coeffs,
    empirical_radius,
    euler_alpha,
    radius_carrying_capacity,
    radius_zero_capacity,
)

print("alpha-Euler numbers (first 10), three orders:")
print(f"{'k':>3} {'alpha=0.5':>14} {'alpha=0.8':>14} {'alpha=1.0':>14}")
tables = {a: euler_alpha(a, 9) for a in (0.5, 0.8, 1.0)}
for k in range(10):
    row = " ".join(f"{tables[a].values[k]:14.8f}" for a in (0.5, 0.8, 1.0))
    print(f"{k:>3} {row}")
print("note the exactly vanishing even entries and the sigmoid pattern")
print("1/2, 1/4, -1/8, 1/4, -17/16, 31/4 at alpha = 1\n")

print("A-coefficients at alpha = 1 against (-1)^k k!/2^(k+1):")
a1 = a_coeffs(1.0, 6)
for k, v in enumerate(a1.values):
    closed = (-1) ** k * math.factorial(k) / 2 ** (k + 1)
    print(f"  A_{k} = {v:12.6f}   closed form {closed:12.6f}")

# Root-test radius estimates versus the guaranteed bounds.  b = 0.53 is
# the endemic preset's logistic scale; at alpha = 1 the true singularity
# of the sigmoid sits at pi/b.
print("\ncarrying-capacity series (b = 0.53):")
for alpha in (0.3, 0.7, 1.0):
    est = empirical_radius(euler_alpha(alpha, 60), 0.53)
    print(
        f"  alpha={alpha}: guaranteed {radius_carrying_capacity(alpha, 0.53):7.3f}"
        f"   root-test {est.empirical:7.3f}"
    )
print(f"  (alpha=1 reference: pi/0.53 = {math.pi / 0.53:.3f})")

print("\nzero-capacity series:")
for alpha in (0.3, 0.5, 0.7, 0.99):
    est = empirical_radius(a_coeffs(alpha, 60), 1.0)
    print(
        f"  alpha={alpha}: guaranteed {radius_zero_capacity(alpha):7.3f}"
        f"   root-test {est.empirical:7.3f}"
    )
print("\nat alpha = 0.5 the radius sits inside [0, 1]: the series must blow")
print("up before T = 1 there, which demo 04 shows happening.")
