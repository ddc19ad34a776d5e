"""Exact scalar arithmetic: generalized binomials, polynomials in the
deformation symbol L, and the deformed logarithm.

Everything in this module (and everything built on top of it) stays in
exact arithmetic: Python integers, ``fractions.Fraction``, and dense
polynomials over ``Fraction``.  Floats are rejected on input so that no
rounding can sneak into a verification result.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational


class NonDivisibleError(ArithmeticError):
    """Polynomial division left a nonzero remainder.

    When raised by an identity check this is a verification failure (the
    divisibility the identity asserts does not hold), not a usage error.
    """


def _as_fraction(value) -> Fraction:
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"exact rational required, got {type(value).__name__}")


class LamPoly:
    """Dense univariate polynomial in the formal symbol L with Fraction
    coefficients.

    ``coeffs[i]`` is the coefficient of L^i; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable.  Scalars (int, Fraction) mix freely with
    polynomials in arithmetic and comparisons.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def const(cls, value) -> "LamPoly":
        return cls((value,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def constant_term(self) -> Fraction:
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of L^i (zero beyond the degree)."""
        if i < 0:
            raise IndexError("negative power")
        return self._coeffs[i] if i < len(self._coeffs) else Fraction(0)

    def evaluate(self, value) -> Fraction:
        """Evaluate at an exact rational value of L (Horner scheme)."""
        x = _as_fraction(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations -------------------------------------------------

    def _coerce(self, other) -> "LamPoly | None":
        if isinstance(other, LamPoly):
            return other
        if isinstance(other, Rational):
            return LamPoly((other,))
        return None

    def __add__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        a, b = self._coeffs, p._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LamPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LamPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self + (-p)

    def __rsub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return p + (-self)

    def __mul__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        a, b = self._coeffs, p._coeffs
        if not a or not b:
            return LamPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return LamPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LamPoly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self._coeffs == p._coeffs

    def __hash__(self):
        if len(self._coeffs) <= 1:
            return hash(self.constant_term)
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    # -- text ------------------------------------------------------------

    def __str__(self):
        """Canonical text: ``c0 + c1*L + c2*L^2`` with exact rational ci."""
        if not self._coeffs:
            return "0"
        parts = [format_rational(self._coeffs[0])]
        for i, c in enumerate(self._coeffs[1:], start=1):
            mono = "L" if i == 1 else f"L^{i}"
            parts.append(f"{format_rational(c)}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LamPoly('{self}')"


#: The polynomial L itself.
LAM = LamPoly((0, 1))


def int_binomial(a: int, b: int) -> int:
    """Generalized integer binomial coefficient by the product formula
    a(a-1)...(a-b+1) / b!.

    The upper argument may be negative; in particular int_binomial(-1, 0)
    is 1 (empty product) and int_binomial(a, b) is 0 for 0 <= a < b.
    These are the coefficient semantics of the geometric-series expansion
    of 1/(1-t)^k, which is what every sum in this package relies on.
    """
    if not isinstance(a, int) or not isinstance(b, int):
        raise TypeError("integer arguments required")
    if b < 0:
        raise ValueError("lower argument must be nonnegative")
    if a >= 0:
        return math.comb(a, b)
    # (a)(a-1)...(a-b+1)/b! == (-1)^b * C(b-a-1, b) for a < 0
    return (-1) ** b * math.comb(b - a - 1, b)


def lpoly_binomial(p, n: int) -> LamPoly:
    """Generalized binomial coefficient of a polynomial upper argument:
    p(p-1)...(p-n+1) / n! as an exact LamPoly.

    In practice p is affine in L (L itself, L-1, or m+n-L); the result
    then has degree at most n.
    """
    if n < 0:
        raise ValueError("lower argument must be nonnegative")
    if not isinstance(p, LamPoly):
        p = LamPoly((p,))
    prod = LamPoly((1,))
    for i in range(n):
        prod = prod * (p - i)
    return prod * Fraction(1, math.factorial(n))


def falling_factorial(x, n: int, lam) -> Fraction:
    """Deformed falling factorial x(x-lam)(x-2*lam)...(x-(n-1)*lam).

    The empty product (n = 0) is 1.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    x = _as_fraction(x)
    lam = _as_fraction(lam)
    prod = Fraction(1)
    for i in range(n):
        prod *= x - i * lam
    return prod


def lpoly_exact_div(p: LamPoly, q: LamPoly) -> LamPoly:
    """Divide p by q in the polynomial ring, requiring a zero remainder.

    Raises NonDivisibleError when q does not divide p exactly, and
    ZeroDivisionError when q is the zero polynomial.
    """
    if not isinstance(p, LamPoly):
        p = LamPoly((p,))
    if not isinstance(q, LamPoly):
        q = LamPoly((q,))
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    qc = q.coeffs
    out = [Fraction(0)] * max(len(rem) - len(qc) + 1, 0)
    lead = qc[-1]
    while len(rem) >= len(qc):
        while rem and not rem[-1]:
            rem.pop()
        if len(rem) < len(qc):
            break
        shift = len(rem) - len(qc)
        factor = rem[-1] / lead
        out[shift] = factor
        for i, c in enumerate(qc):
            rem[shift + i] -= factor * c
    remainder = LamPoly(rem)
    if not remainder.is_zero():
        raise NonDivisibleError(f"remainder {remainder} dividing by {q}")
    return LamPoly(out)


def deg_log_rational(t, lam: int) -> Fraction:
    """Deformed logarithm (t**lam - 1)/lam at an exact rational t > 0.

    lam must be a nonzero integer so that t**lam stays rational.
    """
    t = _as_fraction(t)
    if isinstance(lam, Rational) and not isinstance(lam, int):
        if Fraction(lam).denominator != 1:
            raise ValueError("deformation order must be a nonzero integer")
        lam = int(lam)
    if not isinstance(lam, int):
        raise TypeError("deformation order must be an integer")
    if lam == 0:
        raise ValueError("deformation order must be nonzero")
    if t <= 0:
        raise ValueError("argument must be positive")
    return (t**lam - 1) / lam


# -- canonical value text ----------------------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_POLY_TERM_RE = re.compile(r"^(?P<coef>[+-]?\d+(?:/\d+)?)(?:\*L(?:\^(?P<pow>\d+))?)?$")


def format_rational(value) -> str:
    """Render an exact rational as ``p`` or ``p/q`` (always reduced)."""
    value = _as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_value(value) -> str:
    """Canonical text for any exact value handled by this package."""
    if isinstance(value, LamPoly):
        return str(value)
    return format_rational(value)


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` into a Fraction; reject anything else."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def parse_lambda_poly(text: str) -> LamPoly:
    """Parse canonical polynomial text (``c0 + c1*L + c2*L^2``) back into
    a LamPoly.  A bare rational parses as a constant polynomial.
    """
    total: dict[int, Fraction] = {}
    for raw in text.strip().split(" + "):
        m = _POLY_TERM_RE.match(raw.strip())
        if m is None:
            raise ValueError(f"malformed polynomial term: {raw!r}")
        coef = Fraction(m.group("coef"))
        if "*L" not in raw:
            power = 0
        elif m.group("pow") is None:
            power = 1
        else:
            power = int(m.group("pow"))
        total[power] = total.get(power, Fraction(0)) + coef
    if not total:
        raise ValueError("empty polynomial text")
    coeffs = [Fraction(0)] * (max(total) + 1)
    for power, coef in total.items():
        coeffs[power] = coef
    return LamPoly(coeffs)
