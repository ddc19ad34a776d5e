"""Exact verification of the recurrences and closed forms satisfied by
derangement, harmonic, hyperharmonic, and deformed harmonic numbers.

Every check evaluates both sides of one identity in exact arithmetic and
reports structural equality.  The ``*_sides`` functions expose the two
exact values; the ``*_check`` functions wrap them in a ``CheckReport``.
Nothing here is probabilistic: a passing report certifies the identity
at those parameters, and for polynomial identities it certifies them for
every value of the deformation parameter at once.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import sequences
from .exact import (
    LAM,
    LamPoly,
    NonDivisibleError,
    deg_log_rational,
    format_value,
    int_binomial,
    lpoly_binomial,
    lpoly_exact_div,
)

DERANGEMENT_RECURRENCE = "derangement-recurrence"
HARMONIC_RECURRENCE = "harmonic-recurrence"
DEG_HARMONIC_RECURRENCE = "deg-harmonic-recurrence"
HYPERHARMONIC_CLOSED_FORM = "hyperharmonic-closed-form"
HYPERHARMONIC_SUM = "hyperharmonic-sum"
DEG_HYPERHARMONIC_CLOSED_FORM = "deg-hyperharmonic-closed-form"
DEG_HYPERHARMONIC_SUM = "deg-hyperharmonic-sum"
DEG_LOG_PRODUCT = "deg-log-product"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one exact identity check.

    ``passed`` is true iff the rendered lhs and rhs are structurally
    equal exact values.  For polynomial mismatches ``first_diff`` is the
    lowest power of L (or of the series variable) whose coefficients
    disagree.
    """

    identity: str
    params: tuple[tuple[str, object], ...]
    lhs: str
    rhs: str
    passed: bool
    first_diff: int | None = None

    @property
    def params_text(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.params)

    def line(self) -> str:
        """One-line rendering, stable across runs."""
        head = f"{'pass' if self.passed else 'FAIL'} {self.identity}"
        if self.params:
            head += f" {self.params_text}"
        if self.passed:
            return head
        tail = f": lhs={self.lhs} rhs={self.rhs}"
        if self.first_diff is not None:
            tail += f" (first differing coefficient index {self.first_diff})"
        return head + tail


def _first_diff_index(lhs, rhs) -> int | None:
    if isinstance(lhs, LamPoly) and isinstance(rhs, LamPoly):
        for i in range(max(lhs.degree, rhs.degree) + 1):
            if lhs.coefficient(i) != rhs.coefficient(i):
                return i
    return None


def _report(identity: str, params, lhs, rhs) -> CheckReport:
    passed = lhs == rhs
    first = None if passed else _first_diff_index(lhs, rhs)
    return CheckReport(
        identity, tuple(params), format_value(lhs), format_value(rhs), passed, first
    )


# -- scaled harmonic table ---------------------------------------------------
#
# The harmonic-number sweeps touch tens of thousands of (m, n) pairs; doing
# every partial sum in Fraction arithmetic would spend most of its time in
# gcd.  Instead the harmonic table is put over a single common denominator
# once, so each check is pure integer arithmetic and still exact.

_scaled: tuple[int, list[int]] | None = None


def _scaled_harmonics(n_max: int) -> tuple[int, list[int]]:
    global _scaled
    cached = _scaled
    if cached is not None and len(cached[1]) > n_max:
        return cached
    grow = max(n_max, 2 * (len(cached[1]) - 1) if cached else 0, 16)
    table = sequences.harmonics(grow)
    den = math.lcm(*(v.denominator for v in table))
    nums = [v.numerator * (den // v.denominator) for v in table]
    _scaled = (den, nums)
    return _scaled


def _harmonic_window_sum(nums: list[int], m: int, n: int) -> int:
    """sum_{k=0}^{n} nums[k] * binom(m+n-k-1, n-k), scaled integers.

    The j-th weight (j = n-k) is binom(m+j-1, j), built incrementally;
    the j = 0 weight is 1 even at m = 0 (empty product), which is the
    geometric-series convention the identities need.
    """
    acc = nums[n]
    weight = 1
    for j in range(1, n + 1):
        weight = weight * (m + j - 1) // j
        if not weight:
            break
        acc += nums[n - j] * weight
    return acc


# -- derangement recurrence ---------------------------------------------------


def derangement_recurrence_sides(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the derangement double-sum recurrence:

    d(m+n)/n!  ==  sum_{l<=n} sum_{k<=m}
        binom(k+n-l-1, n-l) * binom(m, k) * (-1)^(m-k) * k!/l! * d(l)
    """
    d = sequences.derangements(m + n)
    fact = [1]
    for i in range(1, max(m, n) + 1):
        fact.append(fact[-1] * i)
    lhs = Fraction(d[m + n], fact[n])
    rhs = Fraction(0)
    for l in range(n + 1):
        inner = 0
        for k in range(m + 1):
            w = int_binomial(k + n - l - 1, n - l) * int_binomial(m, k) * fact[k]
            inner += w if (m - k) % 2 == 0 else -w
        if inner:
            rhs += Fraction(inner * d[l], fact[l])
    return lhs, rhs


def derangement_recurrence_check(m: int, n: int) -> CheckReport:
    lhs, rhs = derangement_recurrence_sides(m, n)
    return _report(DERANGEMENT_RECURRENCE, (("m", m), ("n", n)), lhs, rhs)


# -- harmonic recurrence -------------------------------------------------------


def harmonic_recurrence_sides(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the harmonic recurrence:

    binom(m+n, n) * h(m+n)  ==
        sum_{k<=n} h(k) * binom(m+n-k-1, n-k) + h(m) * binom(m+n, n)
    """
    den, nums = _scaled_harmonics(m + n)
    c = int_binomial(m + n, n)
    lhs = c * nums[m + n]
    rhs = _harmonic_window_sum(nums, m, n) + nums[m] * c
    return Fraction(lhs, den), Fraction(rhs, den)


def harmonic_recurrence_check(m: int, n: int) -> CheckReport:
    lhs, rhs = harmonic_recurrence_sides(m, n)
    return _report(HARMONIC_RECURRENCE, (("m", m), ("n", n)), lhs, rhs)


# -- deformed harmonic recurrence ---------------------------------------------


def degenerate_harmonic_recurrence_sides(m: int, n: int) -> tuple[LamPoly, LamPoly]:
    """Both sides of the deformed harmonic recurrence, as polynomials:

    binom(m+n, n) * h_L(m+n)  ==
        sum_{l<=n} h_L(l) * binom(m+n-l-1, n-l) + h_L(m) * binom(m+n-L, n)
    """
    dh = sequences.degenerate_harmonics(m + n)
    lhs = dh[m + n] * int_binomial(m + n, n)
    rhs = LamPoly()
    for l in range(n + 1):
        w = int_binomial(m + n - l - 1, n - l)
        if w:
            rhs = rhs + dh[l] * w
    rhs = rhs + dh[m] * lpoly_binomial(LamPoly((m + n, -1)), n)
    return lhs, rhs


def degenerate_harmonic_recurrence_check(m: int, n: int) -> CheckReport:
    lhs, rhs = degenerate_harmonic_recurrence_sides(m, n)
    return _report(DEG_HARMONIC_RECURRENCE, (("m", m), ("n", n)), lhs, rhs)


# -- hyperharmonic closed form and sum form ------------------------------------


def hyperharmonic_closed_form_sides(n: int, m: int) -> tuple[Fraction, Fraction]:
    """h_{m+1}(n) against its binomial closed form
    binom(n+m, m) * (h(n+m) - h(m))."""
    lhs = sequences.hyperharmonic(n, m + 1)
    h = sequences.harmonics(n + m)
    rhs = int_binomial(n + m, m) * (h[n + m] - h[m])
    return lhs, rhs


def hyperharmonic_closed_form_check(n: int, m: int) -> CheckReport:
    lhs, rhs = hyperharmonic_closed_form_sides(n, m)
    return _report(HYPERHARMONIC_CLOSED_FORM, (("n", n), ("m", m)), lhs, rhs)


def hyperharmonic_sum_sides(n: int, m: int) -> tuple[Fraction, Fraction]:
    """h_{m+1}(n) against the weighted harmonic sum
    sum_{k<=n} h(k) * binom(m+n-k-1, n-k)."""
    lhs = sequences.hyperharmonic(n, m + 1)
    den, nums = _scaled_harmonics(n + m)
    rhs = Fraction(_harmonic_window_sum(nums, m, n), den)
    return lhs, rhs


def hyperharmonic_sum_check(n: int, m: int) -> CheckReport:
    lhs, rhs = hyperharmonic_sum_sides(n, m)
    return _report(HYPERHARMONIC_SUM, (("n", n), ("m", m)), lhs, rhs)


# -- deformed hyperharmonic closed form and quotient form -----------------------


def degenerate_hyperharmonic_closed_form_sides(
    n: int, m: int
) -> tuple[LamPoly, LamPoly]:
    """Both sides of the deformed closed form:

    (-1)^m * binom(L-1, m) * h_{L,m+1}(n)
        ==  binom(n+m, m) * (h_L(n+m) - h_L(m))
    """
    lhs = lpoly_binomial(LAM - 1, m) * sequences.degenerate_hyperharmonic(n, m + 1)
    if m % 2:
        lhs = -lhs
    dh = sequences.degenerate_harmonics(n + m)
    rhs = (dh[n + m] - dh[m]) * int_binomial(n + m, m)
    return lhs, rhs


def degenerate_hyperharmonic_closed_form_check(n: int, m: int) -> CheckReport:
    lhs, rhs = degenerate_hyperharmonic_closed_form_sides(n, m)
    return _report(DEG_HYPERHARMONIC_CLOSED_FORM, (("n", n), ("m", m)), lhs, rhs)


def degenerate_hyperharmonic_sum_sides(n: int, m: int) -> tuple[LamPoly, LamPoly]:
    """Quotient form of the deformed hyperharmonic numbers.

    Builds the bracket

        B = sum_{l<=n} h_L(l) * binom(m+n-l-1, n-l)
            + binom(m+n-L, n) * h_L(m) - binom(n+m, n) * h_L(m),

    asserts that binom(L-1, m) divides B exactly in the polynomial ring
    (raising NonDivisibleError otherwise -- a verification failure), and
    compares (-1)^m * B / binom(L-1, m) with h_{L,m+1}(n).

    Divisibility is checked before the quotient comparison; they are two
    distinct claims.
    """
    dh = sequences.degenerate_harmonics(n + m)
    bracket = LamPoly()
    for l in range(n + 1):
        w = int_binomial(m + n - l - 1, n - l)
        if w:
            bracket = bracket + dh[l] * w
    bracket = bracket + lpoly_binomial(LamPoly((m + n, -1)), n) * dh[m]
    bracket = bracket - dh[m] * int_binomial(n + m, n)
    quotient = lpoly_exact_div(bracket, lpoly_binomial(LAM - 1, m))
    if m % 2:
        quotient = -quotient
    return quotient, sequences.degenerate_hyperharmonic(n, m + 1)


def degenerate_hyperharmonic_sum_check(n: int, m: int) -> CheckReport:
    lhs, rhs = degenerate_hyperharmonic_sum_sides(n, m)
    return _report(DEG_HYPERHARMONIC_SUM, (("n", n), ("m", m)), lhs, rhs)


# -- deformed logarithm product rule --------------------------------------------


def deg_log_product_check(x, y, lam: int) -> CheckReport:
    """Product rule of the deformed logarithm at exact rationals:

    log_lam(x*y) == log_lam(x) + x^lam * log_lam(y)
                 == log_lam(y) + y^lam * log_lam(x)
    """
    x = Fraction(x)
    y = Fraction(y)
    lhs = deg_log_rational(x * y, lam)
    rhs_xy = deg_log_rational(x, lam) + x**lam * deg_log_rational(y, lam)
    rhs_yx = deg_log_rational(y, lam) + y**lam * deg_log_rational(x, lam)
    params = (
        ("x", format_value(x)),
        ("y", format_value(y)),
        ("lam", lam),
    )
    passed = lhs == rhs_xy == rhs_yx
    if rhs_xy == rhs_yx:
        rhs_text = format_value(rhs_xy)
    else:
        rhs_text = f"{format_value(rhs_xy)} | {format_value(rhs_yx)}"
    return CheckReport(
        DEG_LOG_PRODUCT, params, format_value(lhs), rhs_text, passed, None
    )


def random_log_product_cases(
    count: int, seed: int, max_value: int = 10, max_order: int = 5
):
    """Deterministic pseudo-random (x, y, lam) triples for the product
    rule: x, y rational in (0, max_value], lam a nonzero integer with
    |lam| <= max_order."""
    rng = random.Random(seed)
    orders = [k for k in range(-max_order, max_order + 1) if k]
    for _ in range(count):
        xd = rng.randint(1, 20)
        yd = rng.randint(1, 20)
        x = Fraction(rng.randint(1, max_value * xd), xd)
        y = Fraction(rng.randint(1, max_value * yd), yd)
        yield x, y, rng.choice(orders)
