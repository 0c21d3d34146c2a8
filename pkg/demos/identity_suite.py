"""
Running the identity catalog
============================

The catalog holds 22 zeta/gamma/polygamma identities.  Each is checked on
a grid of points; a point too close to a pole or a trivial zero of any
factor is skipped rather than reported as a failure.
"""
from zetaomega import (DEFAULT_COMPLEX_GRID, DEFAULT_REAL_GRID, check_identity,
                       list_identities, verify_grid)
from zetaomega.report import from_verify, to_json

for spec in list_identities():
    print(f"{spec.id:>4}  {spec.primary_mode:<10} {spec.title}")

# One identity at one point, with both sides visible.
r = check_identity("I14", 0.3)
print(f"\nI14 at s=0.3: lhs {r.lhs:.12g}  rhs {r.rhs:.12g}  residual {r.abs_residual:.1e}")

# The full catalog on the default real grid, for n = 1, 2, 3.
report = verify_grid(None, DEFAULT_REAL_GRID, (1, 2, 3))
s = report.summary
print(f"\nreal grid: {s.passed}/{s.total} passed, max residual {s.max_residual:.2e}")

# The default complex grid covers non-real branches of every factor.
report = verify_grid(None, DEFAULT_COMPLEX_GRID, (1, 2))
s = report.summary
print(f"complex grid: {s.passed}/{s.total} passed, max residual {s.max_residual:.2e}")

# The same report as JSON, the format the CLI writes with --format json.
text = to_json(from_verify(verify_grid(["I21"], DEFAULT_REAL_GRID)))
print("\n" + "\n".join(text.splitlines()[:12]) + "\n  ...")
