#!/usr/bin/env python3
"""Verify every recurrence and closed form over a parameter grid.

Each check evaluates both sides of one identity in exact arithmetic;
a pass is a certificate, not an approximation.  The deformed identities
are polynomial identities, so one pass certifies the relation for every
value of the deformation parameter.
"""

from harmonum import (
    deg_log_product_check,
    degenerate_harmonic_recurrence_check,
    degenerate_hyperharmonic_closed_form_check,
    degenerate_hyperharmonic_sum_check,
    derangement_recurrence_check,
    harmonic_recurrence_check,
    hyperharmonic_closed_form_check,
    hyperharmonic_sum_check,
    random_log_product_cases,
)

GRID = 12

print(f"sweeping the (m, n) grid up to {GRID} for each identity...\n")

for name, check in [
    ("derangement recurrence ", derangement_recurrence_check),
    ("harmonic recurrence    ", harmonic_recurrence_check),
    ("deformed harmonic rec. ", degenerate_harmonic_recurrence_check),
]:
    reports = [check(m, n) for m in range(GRID + 1) for n in range(GRID + 1)]
    failed = [r for r in reports if not r.passed]
    print(f"{name}: checked {len(reports)}, failed {len(failed)}")

for name, check in [
    ("hyperharmonic closed form      ", hyperharmonic_closed_form_check),
    ("hyperharmonic sum form         ", hyperharmonic_sum_check),
    ("deformed closed form           ", degenerate_hyperharmonic_closed_form_check),
    ("deformed quotient form         ", degenerate_hyperharmonic_sum_check),
]:
    reports = [check(n, m) for n in range(GRID + 1) for m in range(GRID + 1)]
    failed = [r for r in reports if not r.passed]
    print(f"{name}: checked {len(reports)}, failed {len(failed)}")

print()
print("sample report, fully exact on both sides:")
report = degenerate_harmonic_recurrence_check(2, 3)
print(f"  identity: {report.identity}   params: {report.params_text}")
print(f"  lhs = {report.lhs}")
print(f"  rhs = {report.rhs}")
print(f"  passed: {report.passed}")

print()
print("product rule of the deformed logarithm at random rational points:")
count = 0
for x, y, lam in random_log_product_cases(30, seed=1):
    assert deg_log_product_check(x, y, lam).passed
    count += 1
print(f"  checked {count}, failed 0")
