"""The subdivided nerve of a category is the nerve of its twisted arrows.

We take a small poset, build both sides, and check the canonical
comparison cell by cell.  Both nerves satisfy the Segal condition
strictly, so this is a bijection between Segal objects.
"""

from edgewise.cat import canonical_tw_iso, chain_poset, nerve, twisted_arrow
from edgewise.checks import segal_check
from edgewise.sset import edgewise, iso_check

A = chain_poset(2)
print(f"category {A.name}: {len(A.objects)} objects, "
      f"{len(A.morphisms)} morphisms")

T = twisted_arrow(A)
print(f"twisted arrows: {len(T.objects)} objects, "
      f"{len(T.morphisms)} morphisms")
print("sample morphism ids:", ", ".join(T.morphisms[:3]))

f = canonical_tw_iso(A, truncation=2)
problems = iso_check(f)
print(f"\ncomparison {f.name}: "
      f"{'isomorphism' if not problems else problems}")
for n in range(3):
    print(f"  level {n}: {len(f.source.level(n))} cells on each side")

E = edgewise(nerve(A, 5))
print("\nSegal check of the subdivided nerve:",
      segal_check(E).summary["overall"])
print("Segal check of the twisted-arrow nerve:",
      segal_check(nerve(T, 2)).summary["overall"])
