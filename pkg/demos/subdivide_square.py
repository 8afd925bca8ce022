"""Subdivide the standard 2-simplex and draw what comes out.

The subdivision of the k-simplex keeps one vertex per edge of the
original (including the degenerate edges at its vertices) and doubles
the count of top cells with every dimension.
"""

from edgewise.draw import emit_diagram, subdivided_simplex
from edgewise.sset import nondegenerate_cells

for k in (1, 2, 3, 4):
    X = subdivided_simplex(k)
    print(f"k={k}: {len(X.level(0))} vertices, "
          f"{len(nondegenerate_cells(X, 1))} nondegenerate edges, "
          f"{len(nondegenerate_cells(X, k))} nondegenerate top cells")

print()
print(emit_diagram(2))
