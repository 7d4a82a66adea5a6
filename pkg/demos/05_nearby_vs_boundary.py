"""The headline identity: nearby-cycles traces against boundary stalks.

The weight-graded nearby-cycles class over a degree-n divisor is a sum over
strata triples (n1, k, n2) of twisted oscillator traces.  Up to the
normalization c(n) = q^(-n), calibrated once at n = 1 from the hyperbola
family and then frozen, it reproduces the boundary-stalk product
(1 - q) prod over distinct points (1 - q^(deg x)).

The identity also pins the Frobenius sign of the deep exterior-power stalks:
flipping the sign at points of degree >= 2 taken with multiplicity >= 2
breaks the identity on the divisor 2 * (degree-2 point), as shown below.
"""

from vinbun.arith import enumerate_divisors, format_divisor
from vinbun.cli import field_from_q
from vinbun.kcalc import (
    NormLedger,
    boundary_stalk_trace,
    nearby_vs_boundary_check,
    trace_gr_psi,
)
from vinbun.arith import Laurent

ledger = NormLedger.calibrated()
print(f"calibrated at n = 1: c(1) = {ledger.c(1)!r}, frozen c(n) = c(1)^n")
print()

one_minus_q = Laurent.one() - Laurent.monomial(2)
total = 0
for q in (2, 3, 4):
    field = field_from_q(q)
    for n in (1, 2, 3):
        divisors = [
            d for d in enumerate_divisors(field, n)
            if all(pt.degree <= 2 for pt, _ in d)
        ]
        for d in divisors:
            assert nearby_vs_boundary_check(n, d, ledger=ledger)
        total += len(divisors)
    print(f"q = {q}: identity holds on all divisors with residue degrees <= 2")
print(f"({total} divisors checked in total)")

print()
field = field_from_q(2)
example = [d for d in enumerate_divisors(field, 2)
           if len(d.parts) == 1 and d.parts[0][0].degree == 2][0]
lhs = one_minus_q * trace_gr_psi(2, example)
rhs = ledger.c(2) * boundary_stalk_trace(example)
print(f"sample, D = {format_divisor(field, example)} over F_2:")
print(f"  (1-q) * grPsi trace  = {lhs!r}")
print(f"  c(2) * boundary stalk = {rhs!r}")

print()
deep = [d for d in enumerate_divisors(field, 4)
        if len(d.parts) == 1 and d.parts[0][0].degree == 2][0]
print(f"sign convention experiment on D = {format_divisor(field, deep)}:")
print("  calibrated sign rule :",
      nearby_vs_boundary_check(4, deep, ledger=ledger))
print("  flipped deep stalks  :",
      nearby_vs_boundary_check(4, deep, ledger=ledger, sign_rule="flip-deep"))
