"""Polygon checks valued in groupoids instead of sets.

The simplicial groupoid built from arrays of pointed-set injections
with compatible quotients is the motivating example where comparisons
are equivalences rather than bijections.  At cardinality bound 3 the
groupoids carry genuine symmetries; the plain Segal condition fails,
the polygon condition holds, and the subdivision is Segal again.
"""

from edgewise.groupoid import (esd_gpd, s_construction, sgpd_segal_check,
                               sgpd_segal_map, sgpd_two_segal_check)

Y = s_construction(3, 3)
for n in range(4):
    G = Y.levels[n]
    print(f"level {n}: {len(G.objects)} objects, "
          f"{len(G.morphisms)} morphisms")

segal = sgpd_segal_check(Y)
entry = segal.entry("segal", (2, 1))
print(f"\nplain Segal check: {segal.summary['overall']}")
print(f"  at (2,1): {entry.verdict}, witness kind "
      f"{entry.witness[0] if entry.witness else None}")

two = sgpd_two_segal_check(Y)
print(f"polygon check: {two.summary['overall']}, "
      f"certified levels {two.summary['certified_levels']}")

E = esd_gpd(Y)
esd_segal = sgpd_segal_check(E)
print(f"Segal check after subdivision: {esd_segal.summary['overall']}")

comp = sgpd_segal_map(E, 1, 1)
print(f"\nsubdivided level-1 comparison: {comp.domain_size} objects "
      f"against {comp.codomain_size} in the iso-comma groupoid "
      f"({comp.verdict}: an equivalence need not be a bijection)")
