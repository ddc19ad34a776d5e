"""Memoized generators for the five number families.

Each family is computed from its defining formula:

* derangement numbers   d(n) = n! * sum_{k<=n} (-1)^k / k!
* harmonic numbers      h(n) = 1 + 1/2 + ... + 1/n, h(0) = 0
* hyperharmonic h_r(n)  h_0(n) = 1/n, h_r(n) = sum_{k<=n} h_{r-1}(k)
* deformed harmonic     prefix sums of (-1)^(k-1) * binom(L, k) / L
* deformed hyperharmonic: same prefix-sum tower over the deformed base

The deformed families are polynomials in the formal symbol L; their
constant terms recover the plain families.  Tables grow append-only and
are cached per (kind, r); requesting entry n forces entries 0..n.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .exact import LAM, LamPoly, lpoly_binomial, lpoly_exact_div


class Kind(str, Enum):
    """Sequence families exposed by this package."""

    DERANGEMENT = "derangement"
    HARMONIC = "harmonic"
    HYPERHARMONIC = "hyperharmonic"
    DEG_HARMONIC = "deg-harmonic"
    DEG_HYPERHARMONIC = "deg-hyperharmonic"

    @property
    def takes_order(self) -> bool:
        """Whether the family is indexed by an extra iteration order r."""
        return self in (Kind.HYPERHARMONIC, Kind.DEG_HYPERHARMONIC)

    @property
    def symbolic(self) -> bool:
        """Whether entries are polynomials in L rather than rationals."""
        return self in (Kind.DEG_HARMONIC, Kind.DEG_HYPERHARMONIC)


@dataclass(frozen=True)
class SequenceTable:
    """Immutable snapshot of entries 0..n_max of one family."""

    kind: Kind
    values: tuple
    r: int | None = field(default=None)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)


_lock = threading.Lock()
_derangements: list[int] = [1]
_factorials: list[int] = [1]
_harmonics: list[Fraction] = [Fraction(0)]
_hyper_rows: dict[int, list[Fraction]] = {}
_deg_harmonics: list[LamPoly] = [LamPoly()]
_deg_base: list[LamPoly] = [LamPoly()]  # (-1)^(n-1) binom(L, n) / L
_deg_hyper_rows: dict[int, list[LamPoly]] = {}


def _factorial(n: int) -> int:
    while len(_factorials) <= n:
        _factorials.append(_factorials[-1] * len(_factorials))
    return _factorials[n]


def _check_index(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"{name} must be a nonnegative integer")


def derangements(n_max: int) -> SequenceTable:
    """Derangement numbers d(0)..d(n_max).

    Each entry is computed independently as the alternating sum
    sum_{k=0}^{n} (-1)^k * n!/k!, which is always an integer.
    """
    _check_index(n_max)
    with _lock:
        while len(_derangements) <= n_max:
            n = len(_derangements)
            term = _factorial(n)  # n!/k! at k = 0
            total = term
            for k in range(1, n + 1):
                term //= k
                total += term if k % 2 == 0 else -term
            _derangements.append(total)
        values = tuple(_derangements[: n_max + 1])
    return SequenceTable(Kind.DERANGEMENT, values)


def harmonics(n_max: int) -> SequenceTable:
    """Harmonic numbers h(0)..h(n_max) as exact rationals."""
    _check_index(n_max)
    with _lock:
        while len(_harmonics) <= n_max:
            n = len(_harmonics)
            _harmonics.append(_harmonics[-1] + Fraction(1, n))
        values = tuple(_harmonics[: n_max + 1])
    return SequenceTable(Kind.HARMONIC, values)


def _hyper_row(r: int, n_max: int) -> list[Fraction]:
    # caller holds _lock
    row = _hyper_rows.setdefault(r, [Fraction(0)])
    if len(row) > n_max:
        return row
    if r == 0:
        while len(row) <= n_max:
            row.append(Fraction(1, len(row)))
        return row
    prev = _hyper_row(r - 1, n_max)
    while len(row) <= n_max:
        row.append(row[-1] + prev[len(row)])
    return row


def hyperharmonic_table(n_max: int, r: int) -> SequenceTable:
    """Order-r hyperharmonic numbers for n = 0..n_max.

    Order 0 is the sequence 0, 1, 1/2, 1/3, ...; each following order is
    the sequence of partial sums of the previous one, so order 1 is the
    harmonic numbers.
    """
    _check_index(n_max)
    _check_index(r, "r")
    with _lock:
        values = tuple(_hyper_row(r, n_max)[: n_max + 1])
    return SequenceTable(Kind.HYPERHARMONIC, values, r=r)


def hyperharmonic(n: int, r: int) -> Fraction:
    """Single order-r hyperharmonic number (forces entries 0..n)."""
    return hyperharmonic_table(n, r)[n]


def _deg_base_entry(n: int) -> LamPoly:
    # caller holds _lock
    while len(_deg_base) <= n:
        k = len(_deg_base)
        term = lpoly_exact_div(lpoly_binomial(LAM, k), LAM)
        if k % 2 == 0:
            term = -term
        _deg_base.append(term)
    return _deg_base[n]


def degenerate_harmonics(n_max: int) -> SequenceTable:
    """Deformed harmonic numbers as polynomials in L.

    Entry n is sum_{k=1}^{n} (-1)^(k-1) binom(L, k) / L, a polynomial of
    degree n-1 whose constant term is the harmonic number h(n).
    """
    _check_index(n_max)
    with _lock:
        while len(_deg_harmonics) <= n_max:
            n = len(_deg_harmonics)
            _deg_harmonics.append(_deg_harmonics[-1] + _deg_base_entry(n))
        values = tuple(_deg_harmonics[: n_max + 1])
    return SequenceTable(Kind.DEG_HARMONIC, values)


def _deg_hyper_row(r: int, n_max: int) -> list[LamPoly]:
    # caller holds _lock
    row = _deg_hyper_rows.setdefault(r, [LamPoly()])
    if len(row) > n_max:
        return row
    if r == 0:
        while len(row) <= n_max:
            row.append(_deg_base_entry(len(row)))
        return row
    prev = _deg_hyper_row(r - 1, n_max)
    while len(row) <= n_max:
        row.append(row[-1] + prev[len(row)])
    return row


def degenerate_hyperharmonic_table(n_max: int, r: int) -> SequenceTable:
    """Order-r deformed hyperharmonic numbers for n = 0..n_max.

    Order 0 is the deformed base sequence (-1)^(n-1) binom(L, n) / L
    (exact polynomial division; binom(L, n) has zero constant term), and
    each following order is its sequence of partial sums.  Order 1
    coincides with the deformed harmonic numbers, and constant terms
    recover the plain hyperharmonic numbers.
    """
    _check_index(n_max)
    _check_index(r, "r")
    with _lock:
        values = tuple(_deg_hyper_row(r, n_max)[: n_max + 1])
    return SequenceTable(Kind.DEG_HYPERHARMONIC, values, r=r)


def degenerate_hyperharmonic(n: int, r: int) -> LamPoly:
    """Single order-r deformed hyperharmonic polynomial."""
    return degenerate_hyperharmonic_table(n, r)[n]


def table(kind: Kind, n_max: int, r: int | None = None) -> SequenceTable:
    """Build the table for any kind; r is required exactly for the
    hyperharmonic kinds."""
    kind = Kind(kind)
    if kind.takes_order:
        if r is None:
            raise ValueError(f"kind {kind.value} requires an order r")
    elif r is not None:
        raise ValueError(f"kind {kind.value} does not take an order r")
    if kind is Kind.DERANGEMENT:
        return derangements(n_max)
    if kind is Kind.HARMONIC:
        return harmonics(n_max)
    if kind is Kind.HYPERHARMONIC:
        return hyperharmonic_table(n_max, r)
    if kind is Kind.DEG_HARMONIC:
        return degenerate_harmonics(n_max)
    return degenerate_hyperharmonic_table(n_max, r)


def factorial(n: int) -> int:
    """Cached factorial (shared with the derangement construction)."""
    _check_index(n)
    with _lock:
        return _factorial(n)
