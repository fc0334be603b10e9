#!/usr/bin/env python3
"""Certified lower bounds on an annulus and their boundary behaviour.

Sweeps the closed-form lower bound over the fundamental radial range,
shows the reflection symmetry, the minimum at sqrt(r), the blow-up of the
Caratheodory-norm estimate near the boundary, and the metric-completeness
criterion.
"""

import math

import numpy as np

from squeezing import (
    Annulus,
    annulus_conjectured_value,
    annulus_lower_bound,
    annulus_minimum_value,
    boundary_distance,
    caratheodory_lower_estimate,
    completeness_criterion,
)

annulus = Annulus(0.25)
root = math.sqrt(annulus.r)

print(f"annulus r = {annulus.r}; fundamental range starts at sqrt(r) = {root}")
print(f"minimum value at sqrt(r): {annulus_minimum_value(annulus):.12f}\n")

print("rho      lower bound     branch")
for rho in (0.3, 0.4, 0.5, 0.7, 0.9, 0.99):
    certificate = annulus_lower_bound(annulus, rho)
    print(f"{rho:.2f}   {certificate.value: .12f}   {certificate.witness['branch']}")

print("\nreflection symmetry: bound(rho) == bound(r/rho)")
for rho in (0.3, 0.35, 0.45):
    mirrored = annulus.r / rho
    a = annulus_lower_bound(annulus, rho).value
    b = annulus_lower_bound(annulus, mirrored).value
    print(f"  rho = {rho:.2f} vs {mirrored:.4f}: {a:.12f} vs {b:.12f}")

print("\nconjectured closed form on [sqrt(r), 1) is the same expression:")
for rho in (0.5, 0.7, 0.9):
    print(f"  rho = {rho:.2f}: {annulus_conjectured_value(annulus, rho).value:.12f}")

print("\nCaratheodory-norm estimate s/(4 delta) blows up at the boundary:")
for k in range(1, 6):
    rho = 1.0 - 10.0 ** -k
    lower = annulus_lower_bound(annulus, rho).value
    print(f"  1 - 1e-{k}: {caratheodory_lower_estimate(rho, lower, annulus):.4e}")

rng = np.random.default_rng(0)
points = annulus.r + (1.0 - annulus.r) * rng.random(500)
report = completeness_criterion(
    lambda z: annulus_lower_bound(annulus, z).value,
    lambda z: boundary_distance(z, annulus),
    0.1,
    points,
)
print(f"\ncompleteness criterion with C = 0.1 over 500 samples: {bool(report)}"
      f" (worst margin {report.worst_margin:.4f})")
