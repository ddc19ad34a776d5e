#!/usr/bin/env python3
"""Tour of the five number families.

Walks through derangement, harmonic, hyperharmonic, and the deformed
(polynomial-valued) families, showing exact values and how the deformed
families collapse onto the plain ones.
"""

from fractions import Fraction

from harmonum import (
    degenerate_harmonics,
    degenerate_hyperharmonic_table,
    derangements,
    harmonics,
    hyperharmonic_table,
    format_value,
)

N = 10

print("derangement numbers d(n): permutations with no fixed point")
print(" ", list(derangements(N)))
print()

print("harmonic numbers h(n) = 1 + 1/2 + ... + 1/n, exactly")
print(" ", [format_value(v) for v in harmonics(N)])
print()

print("hyperharmonic numbers: iterated partial sums of 0, 1, 1/2, 1/3, ...")
for r in range(4):
    row = [format_value(v) for v in hyperharmonic_table(6, r)]
    print(f"  order {r}: {row}")
print("  (order 1 is the harmonic sequence)")
print()

print("deformed harmonic numbers: polynomials in the deformation symbol L")
for n, poly in enumerate(degenerate_harmonics(5)):
    print(f"  n={n}:  {poly}")
print()

print("their constant terms are the plain harmonic numbers:")
dh = degenerate_harmonics(8)
h = harmonics(8)
for n in (3, 5, 8):
    assert dh[n].constant_term == h[n]
    print(f"  n={n}: constant term {format_value(dh[n].constant_term)} == h({n})")
print()

print("evaluating the polynomials interpolates between deformations:")
poly = degenerate_harmonics(6)[6]
for lam in (Fraction(0), Fraction(1, 2), Fraction(1)):
    print(f"  h_L(6) at L={format_value(lam)}: {format_value(poly.evaluate(lam))}")
print()

print("deformed hyperharmonic numbers follow the same partial-sum tower:")
t = degenerate_hyperharmonic_table(4, 2)
for n, poly in enumerate(t):
    print(f"  order 2, n={n}:  {poly}")
