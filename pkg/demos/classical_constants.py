#!/usr/bin/env python3
"""Exact squeezing values of the classical matrix domains.

Each of the four classical domain types carries a constant squeezing value
with a closed form; products combine by adding inverse squares.  This script
prints a small table, checks a membership predicate along a ray, and runs
the ball / domain / scaled-ball sandwich for a type I domain.
"""

import numpy as np

from squeezing import (
    ClassicalDomain,
    contains,
    kubota_constant,
    product_constant,
    punctured_ball_squeezing,
    sandwich_check_type_i,
)

domains = [
    ClassicalDomain.type_i(1, 1),
    ClassicalDomain.type_i(2, 3),
    ClassicalDomain.type_ii(4),
    ClassicalDomain.type_iii(5),
    ClassicalDomain.type_iv(6),
]

print("constant squeezing values")
for domain in domains:
    certificate = kubota_constant(domain)
    print(f"  {domain.describe():<10} dim {domain.complex_dimension:>2}   s = {certificate.value:.12f}")

pair = [ClassicalDomain.type_iv(3), ClassicalDomain.type_iv(7)]
print("\nproduct of two type IV domains:", product_constant(pair).value)

print("\nmembership along a ray in D_I(2,2)")
direction = np.array([[0.9, 0.3], [0.1, 0.8]], dtype=complex)
for t in (0.2, 0.6, 1.0, 1.4):
    z = t * direction
    largest_singular = np.linalg.svd(z, compute_uv=False)[0]
    print(f"  t = {t:.1f}  sigma_max = {largest_singular:.3f}  inside = {contains(ClassicalDomain.type_i(2, 2), z)}")

print("\nsandwich B_6 in D_I(2,3) in sqrt(2) B_6:", sandwich_check_type_i(2, 3, samples=500, seed=0))

z = np.array([0.3, 0.4j])
print("\npunctured-ball value at ||z|| = 0.5:", punctured_ball_squeezing(z).value)
