#!/usr/bin/env python3
"""Generating functions as truncated formal power series.

Builds each closed-form series factor, multiplies exactly, and compares
the coefficients against the sequence tables -- first in one variable,
then for the two-variable series whose diagonal coefficients encode the
recurrences.
"""

import math

from harmonum import (
    derangements,
    exp_neg_t,
    format_value,
    geometric,
    gf_deg_harmonic_check,
    gf_deg_hyperharmonic_check,
    gf_derangement_check,
    gf_harmonic_check,
    gf_hyperharmonic_check,
    bivariate_deg_harmonic_check,
    bivariate_derangement_check,
    bivariate_harmonic_check,
    harmonics,
    log_inv_one_minus_t,
)

N = 12

print("exp(-t)/(1-t) is the exponential generating function of the")
print("derangement numbers; coefficient n times n! must be d(n):")
product = geometric(N) * exp_neg_t(N)
d = derangements(N)
for n in (0, 2, 5, 9):
    value = product.coefficient(n) * math.factorial(n)
    print(f"  n={n}: {format_value(value)}  vs  d({n}) = {d[n]}")
print()

print("log(1/(1-t))/(1-t) generates the harmonic numbers:")
product = geometric(N) * log_inv_one_minus_t(N)
h = harmonics(N)
for n in (1, 4, 10):
    print(
        f"  n={n}: {format_value(product.coefficient(n))}"
        f"  vs  h({n}) = {format_value(h[n])}"
    )
print()

print("the full checks compare every coefficient up to the order:")
for report in [
    gf_derangement_check(40),
    gf_harmonic_check(80),
    gf_hyperharmonic_check(60, 3),
    gf_deg_harmonic_check(25),
    gf_deg_hyperharmonic_check(20, 2),
]:
    print(f"  {report.identity:22s} {report.params_text:18s} passed={report.passed}")
print()

print("two-variable series: the same families, expanded in x and y,")
print("match their closed forms coefficient-by-coefficient:")
for report in [
    bivariate_derangement_check(14),
    bivariate_harmonic_check(14),
    bivariate_deg_harmonic_check(10),
]:
    print(f"  {report.identity:24s} {report.params_text:10s} passed={report.passed}")
