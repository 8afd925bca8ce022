"""A non-Segal 2-Segal object, and what subdivision does to it.

The monoid here has one generator whose square is undefined, so a pair
of composable cells need not have a composite: the Segal comparison at
(2, 1) misses the pair (a, a).  Every polygon comparison is still a
bijection, and after subdivision the Segal condition holds at every
level.  The three reports below tell that story end to end.
"""

from edgewise.cat import bar, truncated_free_monoid
from edgewise.checks import segal_check, theorem_verify, two_segal_check
from edgewise.sset import edgewise

M = truncated_free_monoid(1)
print(f"monoid {M.name}: elements {list(M.elements)}, "
      f"defined products {sorted(M.product)}")

X = bar(M, 7)
print(f"\nbar construction, truncation 7, "
      f"level sizes {list(X.level_sizes())}")

own = segal_check(X)
entry = own.entry("segal", (2, 1))
failing = [e.indices for e in own.entries if e.verdict == "fail"]
print(f"\nplain Segal check: {own.summary['overall']}")
print(f"  at (2,1): {entry.verdict}, witness {entry.witness}")
print(f"  failing indices: {failing}")

ts = two_segal_check(X)
print(f"\npolygon (2-Segal) check: {ts.summary['overall']}, "
      f"certified levels {ts.summary['certified_levels']}")

esd = segal_check(edgewise(X))
print(f"Segal check after subdivision: {esd.summary['overall']}, "
      f"certified levels {esd.summary['certified_levels']}")

report = theorem_verify(X)
print(f"\ncombined verdict matching: overall {report.summary['overall']}, "
      f"matched_agree {report.summary['matched_agree']}, "
      f"retract_failures {report.summary['retract_failures']}")
