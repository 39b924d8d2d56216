#!/usr/bin/env python3
"""Map the empirical existence region over sigma and compare with theory.

For a > 0 in flat 3-space at p = 2, every positive radial profile with
sigma below the nonexistence threshold must die at finite radius; above the
critical exponent 5 = (n+2)/(n-2) entire positive solutions exist.  The
sweep classifies each cell by shooting and counts contradictions against
the regime flags.
"""

import numpy as np

import plaplab as pl

grid = pl.SweepGrid(
    n=3, a_sign=1.0, K=0.0,
    p_min=2.0, p_max=2.0, p_step=1.0,
    sigma_min=0.5, sigma_max=2.75, sigma_step=0.25,
    config=pl.ShootingConfig(u0=1.0, r_max=50.0),
)
table = pl.sweep(grid)

print("=== sweep: n=3, p=2, a=+1, K=0, r_max=50 ===")
print(f"{'sigma':>6} {'classification':>15} {'r*':>8} {'flag1':>6} {'flag2':>6}")
for c in table:
    r_star = "-" if c.r_star is None else f"{c.r_star:.3f}"
    print(f"{c.sigma:6.2f} {c.classification:>15} {r_star:>8} {str(c.theory_thm1):>6} {str(c.theory_thm2):>6}")

comp = pl.compare_with_theory(table)
print(f"\ncontradictions: {comp.contradiction_count}   numerical failures: {comp.n_failures}")
print(f"caveat: {comp.caveat}")

print("\n=== above the critical exponent: sigma = 5 ===")
params = pl.EquationParams(n=3, p=2.0, a=1.0, sigma=5.0)
space = pl.ModelSpace(n=3, K=0.0)
cls, _ = pl.classify_existence(params, space, pl.ShootingConfig(u0=1.0, r_max=50.0))
sol = pl.solve_radial(params, space, pl.ShootingConfig(u0=1.0, r_max=50.0))
bubble = (1 + sol.r**2 / 3) ** (-0.5)
print(f"classification: {cls}")
print(f"profile matches the entire critical-exponent solution (1 + r^2/3)^(-1/2)")
print(f"to {np.max(np.abs(sol.u - bubble)):.2e} over [0, 50]")

print("\nNote: the zero radius r*(sigma) grows monotonically toward the")
print("nonexistence threshold; persistence at finite r_max is evidence, not proof.")
