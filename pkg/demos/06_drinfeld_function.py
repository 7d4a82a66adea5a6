"""Drinfeld's function on pairs of split SL2-bundles over P^1.

For a pair (O(a1) + O(-a1), O(a2) + O(-a2)) the value is the number of
determinant-1 isomorphisms minus, over every nonzero non-isomorphism phi,
the product of (1 - q^d) over the residue degrees d of the distinct points
of the defect divisor of phi (the divisor of the gcd of its matrix entries,
including the point at infinity).

On the diagonal (a, a) the value collapses to 1 - q^2 for every a the
enumeration can reach; off the diagonal there are no isomorphisms and the
boundary sum carries everything.
"""

from vinbun.cli import field_from_q
from vinbun.drinfeld import drinfeld_value, hom_space_dims, isom_count

print("Hom-space entry dimensions (rows: target summand, cols: source):")
for pair in ((0, 0), (1, 1), (1, 0), (2, 1)):
    print(f"  (a1, a2) = {pair}: {hom_space_dims(*pair)}")

print()
for q in (2, 3, 4, 5):
    field = field_from_q(q)
    res = drinfeld_value(0, 0, field)
    print(f"q = {q}:  isom = {res.isom} (= q^3 - q),  boundary sum = "
          f"{res.boundary_sum},  value = {res.value} (= 1 - q^2)")
    assert res.isom == isom_count(0, 0, field) == q**3 - q
    assert res.value == 1 - q * q

print()
field = field_from_q(2)
res = drinfeld_value(1, 0, field, histogram=True)
print("off-diagonal pair (1, 0) over F_2:")
print(f"  value = {res.value}, boundary sum = {res.boundary_sum}")
print("  maps per defect-divisor profile ((degree, multiplicity), ...):")
for profile, count in res.histogram:
    print(f"    {profile or '(empty divisor)'}: {count}")

print()
res3 = drinfeld_value(1, 1, field_from_q(2), histogram=True)
print("diagonal pair (1, 1) over F_2:")
print(f"  isom = {res3.isom} (= (q-1) q^3), value = {res3.value}")
print(f"  nonunit-determinant isomorphisms = {res3.nonunit_isoms}; counting "
      f"them into the sum would give {res3.value_including_nonunit_isos}")
