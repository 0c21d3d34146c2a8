"""
A tour of Omega(s, n)
=====================

Omega(s, n) is an antisymmetrized sum of four polygammas at half-arguments.
It has four independent evaluations, poles at the integers, the symmetry
s -> 1 - s, and is periodic-antiperiodic under unit shifts.  This script
walks through each property numerically.
"""
import math

from zetaomega import (dirichlet_beta, golden_quartet, omega, omega_all,
                       omega_beta_relation, omega_closed_form, omega_functional_checks,
                       omega_imaginary_series)

# Four routes to the same number.
for s in (0.3, 0.5 + 1j):
    r = omega_all(s, 1)
    print(f"Omega({s}, 1)")
    for name, v in zip(("polygamma", "alternating", "trig-derivative", "hurwitz"), r.values):
        print(f"  {name:<16} {v:.15g}")
    print(f"  spread {r.spread:.1e} (relative {r.rel_spread:.1e})")

# n = 0 collapses to an elementary function.
print(f"\nOmega(0.3, 0) = {omega(0.3, 0):.15g},  -2 pi / sin(0.3 pi) = "
      f"{omega_closed_form(0.3, 0):.15g}")

# Functional equations: reflection, unit shifts and a family of shifted relations.
rep = omega_functional_checks(0.37 + 0.2j, 2)
print("\nfunctional relations at s = 0.37+0.2i, n = 2")
for rel in rep.basic:
    print(f"  {rel.name:<16} residual {rel.residual:.1e}")
print(f"  plus {len(rep.family)} shifted relations, worst {max(r.residual for r in rep.family):.1e}")

# phi, 1 - phi, 1 + 1/phi and -1/phi all give the same value.
print("\ngolden-ratio quartet, n = 1")
for label, v in golden_quartet(1).items():
    print(f"  {label:<8} {v.real:.15g}")

# At s = 1/2 Omega is a multiple of beta(2n+1); only one constant fits.
print("\nOmega(1/2, n) against beta(2n+1)")
for n in (1, 2, 3):
    b = omega_beta_relation(n)
    print(f"  n={n}  Omega {b.omega_at_half.real:.12g}  with (2n)! factor: rel {b.derived_residual:.1e}"
          f"  without: rel {b.printed_residual:.2f}")
print(f"  n=1 check: -8 pi^3 = {-8 * math.pi**3:.12g},  beta(3) = {dirichlet_beta(3).real:.15f}")

# At s = i the trig-derivative form equals a rapidly convergent real series.
r = omega_imaginary_series(1)
print(f"\nseries at s = i: {r.series_value.real:.15f}  trig form {r.rhs_value.real:.15f}")
