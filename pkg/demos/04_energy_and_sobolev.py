#!/usr/bin/env python3
"""Integral-inequality side of the machinery.

First the energy (Caccioppoli-type) inequality, tested with psi = f^b eta^2
for a smoothstep cutoff eta and a ladder of admissible exponents b; then
the ball Sobolev inequality, whose dimensional constant is measured (never
asserted) across several test functions and curvatures.
"""

import numpy as np

import plaplab as pl

print("=== energy inequality with psi = f^b eta^2 ===")
instances = [
    (2.0, 1.0, 1.0, 0.0, 4.0, 2.0),
    (2.0, 1.0, 2.5, 0.0, 8.0, 3.0),
    (3.0, 1.0, 2.0, 1.0, 6.0, 2.5),
]
for p, a, sigma, K, r_max, R in instances:
    params = pl.EquationParams(n=3, p=p, a=a, sigma=sigma)
    space = pl.ModelSpace(n=3, K=K)
    sol = pl.solve_radial(params, space, pl.ShootingConfig(u0=1.0, r_max=r_max))
    ls = pl.to_log_solution(sol)
    b_min = pl.caccioppoli_b_min(3, p, sigma, a)
    print(f"p={p}, sigma={sigma}, K={K}: beta={pl.beta(3, p, sigma, a):.4f}, b_min={b_min:.3f}")
    for mult in (1.1, 2.0, 4.0):
        rep = pl.check_caccioppoli(
            ls, config=pl.CaccioppoliConfig(b=mult * b_min), R=R
        )
        print(
            f"   b = {rep.b:7.3f}: lhs = {rep.lhs:+.4e}, rhs = {rep.rhs:+.4e}, "
            f"slack/scale = {rep.slack / rep.scale:.3f}"
        )

print("\n=== cutoff used as eta ===")
eta = pl.cutoff_eta(2.0)
for r in (0.0, 1.0, 1.5, 1.75, 2.0):
    print(f"   eta({r}) = {eta(r):.3f}")
print(f"   max |eta'| = {eta.lipschitz_bound} (= 6/R)")

print("\n=== measured Sobolev constants (no asserted value) ===")
for K in (0.0, 1.0):
    space = pl.ModelSpace(n=3, K=K)
    shapes = {
        "smoothstep cutoff": pl.cutoff_eta(1.0),
        "cosine bump": lambda r: np.cos(np.pi * np.minimum(r, 1.0) / 2),
        "parabola": lambda r: 1 - np.minimum(r, 1.0) ** 2,
    }
    for name, g in shapes.items():
        rep = pl.measure_sobolev_ratio(g, space, 1.0)
        print(f"   K={K}: {name:18s} empirical constant = {rep.empirical_constant:.5f}")
print("   (stability across shapes is the point; only existence of a")
print("    dimensional constant is claimed)")
