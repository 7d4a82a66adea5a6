"""The degenerating family of hyperbolas ab = d, counted over small fields.

The n = 1 local-model fiber is the affine plane with coordinates (a, b) and
the map d = a*b.  Its fibers over d != 0 are hyperbolas with q - 1 points;
the fiber over d = 0 is the reducible node (two axes, 2q - 1 points), which
splits into two punctured axes of defect 0 and the origin of defect 1.
"""

from vinbun.cli import field_from_q
from vinbun.localmodel import build_system, count_points, strata_counts

system = build_system([1])
print("equations:", system.equations_text() or "(none; d = a[-1]*b[0])")
print()

for q in (2, 3, 4, 5, 7, 8, 9):
    field = field_from_q(q)
    node = count_points(system, field, "zero")
    fibers = {c: count_points(system, field, c) for c in range(1, q)}
    assert node == 2 * q - 1
    assert set(fibers.values()) == {q - 1}
    print(f"q = {q}:  node has {node} = 2q-1 points, "
          f"every smooth fiber has {q - 1} = q-1")

print()
print("defect stratification of the node (2(q-1) axis points + the origin):")
for q in (3, 5, 9):
    field = field_from_q(q)
    print(f"  q = {q}: {strata_counts(1, field)}")
