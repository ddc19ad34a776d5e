"""Truncated formal power series over exact coefficient rings, and the
generating-function checks built on them.

``Series`` is univariate (coefficients of t^0..t^N); ``Series2`` is
bivariate, truncated by total degree.  Coefficients are Fractions or
LamPolys; the two mix freely in products, so a rational series times a
polynomial-valued series works without lifting.  Multiplication is the
naive Cauchy convolution, which is plenty at the truncation orders used
here.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import sequences
from .exact import LAM, LamPoly, format_value, int_binomial, lpoly_binomial, lpoly_exact_div
from .identities import CheckReport

GF_DERANGEMENT = "gf-derangement"
GF_HARMONIC = "gf-harmonic"
GF_HYPERHARMONIC = "gf-hyperharmonic"
GF_DEG_HARMONIC = "gf-deg-harmonic"
GF_DEG_HYPERHARMONIC = "gf-deg-hyperharmonic"
BIVARIATE_DERANGEMENT = "bivariate-derangement"
BIVARIATE_HARMONIC = "bivariate-harmonic"
BIVARIATE_DEG_HARMONIC = "bivariate-deg-harmonic"

# Default truncation orders: high enough to be convincing, small enough
# that every check runs in seconds.
DEFAULT_ORDER_RAT = 60
DEFAULT_ORDER_POLY = 40
DEFAULT_ORDER_RAT_XY = 20
DEFAULT_ORDER_POLY_XY = 12


def _coef_text(value) -> str:
    text = format_value(value)
    return f"({text})" if " " in text else text


class Series:
    """Univariate power series truncated at a fixed order.

    Holds exactly order+1 coefficients; arithmetic is exact modulo
    t^(order+1) and requires both operands to share the order.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = cs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coefficient(self, n: int):
        return self._coeffs[n]

    def __getitem__(self, n):
        return self._coeffs[n]

    def truncate(self, order: int) -> "Series":
        """Drop coefficients above the given (not larger) order."""
        if order < 0 or order > self.order:
            raise ValueError("can only truncate to a smaller order")
        return Series(self._coeffs[: order + 1])

    def _require_same_order(self, other: "Series"):
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_order(other)
        return Series(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_order(other)
        return Series(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __neg__(self):
        return Series(-c for c in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, Series):
            self._require_same_order(other)
            a, b = self._coeffs, other._coeffs
            out = []
            for n in range(len(a)):
                acc = a[0] * b[n]
                for i in range(1, n + 1):
                    acc = acc + a[i] * b[n - i]
                out.append(acc)
            return Series(out)
        return Series(c * other for c in self._coeffs)

    def __rmul__(self, other):
        return Series(other * c for c in self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    def __hash__(self):
        return hash(self._coeffs)

    def __str__(self):
        parts = [_coef_text(self._coeffs[0])]
        for i, c in enumerate(self._coeffs[1:], start=1):
            mono = "t" if i == 1 else f"t^{i}"
            parts.append(f"{_coef_text(c)}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Series(order={self.order}, '{self}')"


class Series2:
    """Bivariate power series truncated by total degree.

    Row i holds the coefficients of x^i y^j for j = 0..order-i, so the
    coefficient array is triangular.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rs = tuple(tuple(row) for row in rows)
        if not rs:
            raise ValueError("a series needs at least the constant coefficient")
        order = len(rs) - 1
        for i, row in enumerate(rs):
            if len(row) != order + 1 - i:
                raise ValueError("rows must form a triangle of total degree <= order")
        self._rows = rs

    @classmethod
    def build(cls, order: int, entry) -> "Series2":
        """Construct from a coefficient function entry(i, j)."""
        return cls(
            tuple(entry(i, j) for j in range(order + 1 - i)) for i in range(order + 1)
        )

    @property
    def order(self) -> int:
        return len(self._rows) - 1

    def coefficient(self, i: int, j: int):
        return self._rows[i][j]

    def truncate(self, order: int) -> "Series2":
        if order < 0 or order > self.order:
            raise ValueError("can only truncate to a smaller order")
        return Series2(row[: order + 1 - i] for i, row in enumerate(self._rows[: order + 1]))

    def _require_same_order(self, other: "Series2"):
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, Series2):
            return NotImplemented
        self._require_same_order(other)
        return Series2(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other):
        if not isinstance(other, Series2):
            return NotImplemented
        self._require_same_order(other)
        return Series2(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self._rows, other._rows)
        )

    def __mul__(self, other):
        if isinstance(other, Series2):
            self._require_same_order(other)
            a, b = self._rows, other._rows
            order = self.order
            rows = []
            for i in range(order + 1):
                row = []
                for j in range(order + 1 - i):
                    acc = None
                    for p in range(i + 1):
                        ap = a[p]
                        bp = b[i - p]
                        for q in range(j + 1):
                            term = ap[q] * bp[j - q]
                            acc = term if acc is None else acc + term
                    row.append(acc)
                rows.append(tuple(row))
            return Series2(rows)
        return Series2(tuple(c * other for c in row) for row in self._rows)

    def __rmul__(self, other):
        return Series2(tuple(other * c for c in row) for row in self._rows)

    def __eq__(self, other):
        if not isinstance(other, Series2):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(
            a == b for ra, rb in zip(self._rows, other._rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash(self._rows)

    def __str__(self):
        parts = []
        for d in range(self.order + 1):
            for i in range(d + 1):
                j = d - i
                parts.append(f"{_coef_text(self._rows[i][j])}*x^{i}*y^{j}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Series2(order={self.order})"


# -- univariate constructors ---------------------------------------------------


def geometric(order: int) -> Series:
    """1/(1-t): every coefficient is 1."""
    return Series([Fraction(1)] * (order + 1))


def pow_inv_one_minus_t(r: int, order: int) -> Series:
    """(1/(1-t))^r: coefficient n is binom(n+r-1, n)."""
    if r < 0:
        raise ValueError("exponent must be nonnegative")
    return Series(Fraction(int_binomial(n + r - 1, n)) for n in range(order + 1))


def log_inv_one_minus_t(order: int) -> Series:
    """log(1/(1-t)): coefficient n is 1/n, constant term 0."""
    return Series(
        [Fraction(0)] + [Fraction(1, n) for n in range(1, order + 1)]
    )


def exp_neg_t(order: int) -> Series:
    """exp(-t): coefficient n is (-1)^n / n!."""
    return Series(Fraction((-1) ** n, math.factorial(n)) for n in range(order + 1))


def one_minus_t_pow_lambda(order: int) -> Series:
    """(1-t)^L as a series with LamPoly coefficients:
    coefficient n is binom(L, n) * (-1)^n."""
    out = []
    for n in range(order + 1):
        c = lpoly_binomial(LAM, n)
        out.append(-c if n % 2 else c)
    return Series(out)


def deg_log_series(order: int) -> Series:
    """Deformed logarithm of 1/(1-t): the series (1 - (1-t)^L) / L.

    Coefficient n (n >= 1) is (-1)^(n-1) * binom(L, n) / L, obtained by
    exact polynomial division (binom(L, n) has zero constant term, so
    the division by L never leaves a remainder).  The constant L-term of
    coefficient n is 1/n, the plain logarithm coefficient.
    """
    pw = one_minus_t_pow_lambda(order)
    out = [LamPoly()]
    for n in range(1, order + 1):
        out.append(lpoly_exact_div(-pw.coefficient(n), LAM))
    return Series(out)


# -- bivariate constructors ------------------------------------------------------


def geometric_xy(order: int) -> Series2:
    """1/(1-x-y): coefficient of x^i y^j is binom(i+j, i)."""
    return Series2.build(order, lambda i, j: Fraction(int_binomial(i + j, i)))


def exp_neg_xy(order: int) -> Series2:
    """exp(-(x+y)): coefficient of x^i y^j is (-1)^(i+j) / (i! j!)."""
    return Series2.build(
        order,
        lambda i, j: Fraction((-1) ** (i + j), math.factorial(i) * math.factorial(j)),
    )


def log_inv_one_minus_xy(order: int) -> Series2:
    """log(1/(1-x-y)): coefficient of x^i y^j is binom(i+j, i)/(i+j)."""
    return Series2.build(
        order,
        lambda i, j: Fraction(int_binomial(i + j, i), i + j) if i + j else Fraction(0),
    )


def one_minus_xy_pow_lambda(order: int) -> Series2:
    """(1-x-y)^L: coefficient of x^i y^j is
    binom(L, i+j) * (-1)^(i+j) * binom(i+j, i)."""

    def entry(i, j):
        c = lpoly_binomial(LAM, i + j) * int_binomial(i + j, i)
        return -c if (i + j) % 2 else c

    return Series2.build(order, entry)


def deg_log_xy(order: int) -> Series2:
    """Deformed logarithm of 1/(1-x-y): (1 - (1-x-y)^L) / L."""
    pw = one_minus_xy_pow_lambda(order)

    def entry(i, j):
        base = LamPoly((1,)) if i == 0 and j == 0 else LamPoly()
        return lpoly_exact_div(base - pw.coefficient(i, j), LAM)

    return Series2.build(order, entry)


# -- generating-function checks ---------------------------------------------------


def _series_report(identity: str, params, produced: Series, expected: Series) -> CheckReport:
    passed = produced == expected
    first = None
    if not passed:
        for n in range(produced.order + 1):
            if produced.coefficient(n) != expected.coefficient(n):
                first = n
                break
    return CheckReport(
        identity, tuple(params), str(produced), str(expected), passed, first
    )


def _series2_report(identity: str, params, produced: Series2, expected: Series2) -> CheckReport:
    if produced == expected:
        return CheckReport(
            identity, tuple(params), str(produced), str(expected), True, None
        )
    for d in range(produced.order + 1):
        for i in range(d + 1):
            a = produced.coefficient(i, d - i)
            b = expected.coefficient(i, d - i)
            if a != b:
                where = f"coefficient of x^{i}*y^{d - i}"
                return CheckReport(
                    identity,
                    tuple(params),
                    f"{where}: {format_value(a)}",
                    f"{where}: {format_value(b)}",
                    False,
                    None,
                )
    raise AssertionError("unreachable: series compared unequal without a mismatch")


def gf_derangement_check(order: int = DEFAULT_ORDER_RAT) -> CheckReport:
    """exp(-t)/(1-t) against the exponential generating function of the
    derangement numbers: coefficient n must be d(n)/n!."""
    produced = geometric(order) * exp_neg_t(order)
    d = sequences.derangements(order)
    expected = Series(
        Fraction(d[n], math.factorial(n)) for n in range(order + 1)
    )
    return _series_report(GF_DERANGEMENT, (("order", order),), produced, expected)


def gf_harmonic_check(order: int = DEFAULT_ORDER_RAT) -> CheckReport:
    """log(1/(1-t))/(1-t) against the ordinary generating function of
    the harmonic numbers."""
    produced = geometric(order) * log_inv_one_minus_t(order)
    expected = Series(sequences.harmonics(order).values)
    return _series_report(GF_HARMONIC, (("order", order),), produced, expected)


def gf_hyperharmonic_check(order: int = DEFAULT_ORDER_RAT, r: int = 1) -> CheckReport:
    """log(1/(1-t))/(1-t)^r against the order-r hyperharmonic numbers."""
    produced = pow_inv_one_minus_t(r, order) * log_inv_one_minus_t(order)
    expected = Series(sequences.hyperharmonic_table(order, r).values)
    return _series_report(
        GF_HYPERHARMONIC, (("order", order), ("r", r)), produced, expected
    )


def gf_deg_harmonic_check(order: int = DEFAULT_ORDER_POLY) -> CheckReport:
    """Deformed-log series over (1-t) against the deformed harmonic
    polynomials."""
    produced = geometric(order) * deg_log_series(order)
    expected = Series(sequences.degenerate_harmonics(order).values)
    return _series_report(GF_DEG_HARMONIC, (("order", order),), produced, expected)


def gf_deg_hyperharmonic_check(order: int = DEFAULT_ORDER_POLY, r: int = 1) -> CheckReport:
    """Deformed-log series over (1-t)^r against the order-r deformed
    hyperharmonic polynomials."""
    produced = pow_inv_one_minus_t(r, order) * deg_log_series(order)
    expected = Series(sequences.degenerate_hyperharmonic_table(order, r).values)
    return _series_report(
        GF_DEG_HYPERHARMONIC, (("order", order), ("r", r)), produced, expected
    )


# -- bivariate checks ---------------------------------------------------------------


def bivariate_derangement_sides(order: int = DEFAULT_ORDER_RAT_XY) -> tuple[Series2, Series2]:
    """The double exponential generating function of d(n+m) against its
    closed form exp(-(x+y))/(1-x-y)."""
    d = sequences.derangements(order)
    lhs = Series2.build(
        order,
        lambda i, j: Fraction(d[i + j], math.factorial(i) * math.factorial(j)),
    )
    rhs = geometric_xy(order) * exp_neg_xy(order)
    return lhs, rhs


def bivariate_derangement_check(order: int = DEFAULT_ORDER_RAT_XY) -> CheckReport:
    lhs, rhs = bivariate_derangement_sides(order)
    return _series2_report(BIVARIATE_DERANGEMENT, (("order", order),), lhs, rhs)


def bivariate_harmonic_sides(order: int = DEFAULT_ORDER_RAT_XY) -> tuple[Series2, Series2]:
    """sum binom(i+j, i) h(i+j) x^i y^j against
    log(1/(1-x-y)) / (1-x-y)."""
    h = sequences.harmonics(order)
    lhs = Series2.build(
        order, lambda i, j: int_binomial(i + j, i) * h[i + j]
    )
    rhs = geometric_xy(order) * log_inv_one_minus_xy(order)
    return lhs, rhs


def bivariate_harmonic_check(order: int = DEFAULT_ORDER_RAT_XY) -> CheckReport:
    lhs, rhs = bivariate_harmonic_sides(order)
    return _series2_report(BIVARIATE_HARMONIC, (("order", order),), lhs, rhs)


def bivariate_deg_harmonic_sides(order: int = DEFAULT_ORDER_POLY_XY) -> tuple[Series2, Series2]:
    """sum binom(i+j, i) h_L(i+j) x^i y^j against the deformed log of
    1/(1-x-y) divided by (1-x-y)."""
    dh = sequences.degenerate_harmonics(order)
    lhs = Series2.build(order, lambda i, j: dh[i + j] * int_binomial(i + j, i))
    rhs = geometric_xy(order) * deg_log_xy(order)
    return lhs, rhs


def bivariate_deg_harmonic_check(order: int = DEFAULT_ORDER_POLY_XY) -> CheckReport:
    lhs, rhs = bivariate_deg_harmonic_sides(order)
    return _series2_report(BIVARIATE_DEG_HARMONIC, (("order", order),), lhs, rhs)
