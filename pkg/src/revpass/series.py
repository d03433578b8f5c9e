"""
Exact truncated power series and the rev-tier generating functions.

Coefficients are ``fractions.Fraction`` throughout; there is no floating
point anywhere.  Division tolerates denominators with zero constant term by
cancelling the common power of x, so each division shortens the reliable
order by the denominator's valuation; the public constructors compute with
extra working order and truncate at the end.  Every assembled counting
series has integer coefficients, which callers can assert via
``integer_coefficients``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

__all__ = [
    "TruncatedSeries",
    "catalan_series",
    "catalan_compositions",
    "mu_u_series",
    "tier_series",
    "wilf_series",
]

DEFAULT_ORDER_CAP = 30
_WORK_MARGIN = 6  # extra orders to absorb valuation loss in divisions


@dataclass(frozen=True)
class TruncatedSeries:
    """A formal power series known up to x**order, with exact coefficients."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least the x^0 term")

    # --- constructors ---

    @staticmethod
    def from_coefficients(values: Iterable, order: int | None = None) -> "TruncatedSeries":
        coeffs = [Fraction(v) for v in values]
        if order is not None:
            coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
            coeffs = coeffs[: order + 1]
        return TruncatedSeries(tuple(coeffs))

    @staticmethod
    def zero(order: int) -> "TruncatedSeries":
        return TruncatedSeries((Fraction(0),) * (order + 1))

    @staticmethod
    def one(order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coefficients([1], order)

    @staticmethod
    def x(order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coefficients([0, 1], order)

    # --- basics ---

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coefficients[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(
                f"cannot extend truncation order {self.order} to {order}"
            )
        return TruncatedSeries(self.coefficients[: order + 1])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all zero."""
        for i, c in enumerate(self.coefficients):
            if c:
                return i
        return None

    def integer_coefficients(self) -> tuple[int, ...]:
        out = []
        for i, c in enumerate(self.coefficients):
            if c.denominator != 1:
                raise ValueError(f"coefficient of x^{i} is non-integer: {c}")
            out.append(int(c))
        return tuple(out)

    # --- arithmetic (results truncated to the smaller operand order) ---

    def _zip_order(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            coeffs = list(self.coefficients)
            coeffs[0] += other
            return TruncatedSeries(tuple(coeffs))
        order = self._zip_order(other)
        return TruncatedSeries(
            tuple(
                self.coefficients[i] + other.coefficients[i]
                for i in range(order + 1)
            )
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c * other for c in self.coefficients))
        order = self._zip_order(other)
        a = self.coefficients
        b = other.coefficients
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(order + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not supported; use division")
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reciprocal(self) -> "TruncatedSeries":
        a = self.coefficients
        if not a[0]:
            raise ValueError("reciprocal requires a nonzero constant term")
        order = self.order
        inv0 = 1 / a[0]
        out = [inv0] + [Fraction(0)] * order
        for k in range(1, order + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if a[i]:
                    acc += a[i] * out[k - i]
            out[k] = -acc * inv0
        return TruncatedSeries(tuple(out))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        v = other.valuation()
        if v is None:
            raise ZeroDivisionError("division by a zero series")
        if v == 0:
            return self * other.reciprocal()
        if any(self.coefficients[:v]):
            raise ValueError(
                f"numerator has valuation below the denominator's ({v}); "
                "the quotient is not a power series"
            )
        num = TruncatedSeries(self.coefficients[v:])
        den = TruncatedSeries(other.coefficients[v:])
        return num * den.reciprocal()

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` (zero constant term) for x, by Horner."""
        if inner.coefficients[0]:
            raise ValueError("composition requires inner constant term zero")
        order = self._zip_order(inner)
        result = TruncatedSeries.from_coefficients(
            [self.coefficients[min(self.order, order)]], order
        )
        for k in range(min(self.order, order) - 1, -1, -1):
            result = result * inner.truncate(order) + self.coefficients[k]
        return result

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}*x^{i}" if i else str(c))
        return " + ".join(terms) if terms else "0"


def catalan_series(order: int) -> TruncatedSeries:
    """
    Catalan numbers 1, 1, 2, 5, 14, ... via the convolution recurrence
    C(n+1) = sum_i C(i) C(n-i); no square roots, all integers.

    >>> catalan_series(5).integer_coefficients()
    (1, 1, 2, 5, 14, 42)
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    cats = [1]
    for n in range(order):
        cats.append(sum(cats[i] * cats[n - i] for i in range(n + 1)))
    return TruncatedSeries.from_coefficients(cats)


def catalan_compositions(order: int) -> tuple[TruncatedSeries, ...]:
    """
    The composition tower (t0, t1, t2) = (C(x), C(xC), C(xC*C(xC))) used by
    the closed-form tier series.
    """
    t0 = catalan_series(order)
    x = TruncatedSeries.x(order)
    t1 = t0.compose(x * t0)
    t2 = t0.compose(x * t0 * t1)
    return t0, t1, t2


def _check_order(order: int, cap: int) -> None:
    if order < 0:
        raise ValueError("order must be non-negative")
    if order > cap:
        raise ValueError(f"order {order} exceeds the cap {cap}")


def _h_polynomials(
    t0: TruncatedSeries, t1: TruncatedSeries
) -> tuple[TruncatedSeries, ...]:
    """The five fixed polynomials in t0, t1 entering the tier-2 numerator."""
    h0 = (2 - t0) * (t0**2 + 2 * t0 * t1 - 2 * t0 - t1 + 1)
    h1 = (
        -2 * t0**4 * t1**2
        + 3 * t0**4 * t1
        + 6 * t0**3 * t1**2
        + 3 * t0**4
        - 5 * t0**2 * t1**2
        - 12 * t0**3
        - 9 * t0**2 * t1
        + 2 * t0 * t1**2
        + 11 * t0**2
        - 7 * t0 * t1
        + 3 * t0
        + 4 * t1
        - 4
    )
    h2 = (
        2 * t0**5 * t1**2
        - 6 * t0**5 * t1
        - 2 * t0**4 * t1**2
        - 3 * t0**5
        - 7 * t0**3 * t1**2
        + 12 * t0**4
        + 14 * t0**3 * t1
        + 7 * t0**2 * t1**2
        - 3 * t0**3
        + 18 * t0**2 * t1
        - 4 * t0 * t1**2
        - 18 * t0**2
        + 3 * t0 * t1
        + 5 * t0
        - 2 * t1
        + 2
    )
    h3 = t0 * (
        3 * t0**5 * t1
        - 2 * t0**4 * t1**2
        + t0**5
        + 6 * t0**4 * t1
        + 3 * t0**3 * t1**2
        - 4 * t0**4
        - 14 * t0**3 * t1
        + 4 * t0**2 * t1**2
        - 6 * t0**3
        - 15 * t0**2 * t1
        - 3 * t0 * t1**2
        + 15 * t0**2
        - 12 * t0 * t1
        + 2 * t1**2
        + 6 * t0
        - 4
    )
    h4 = -(t0**2) * (
        4 * t0**4 * t1
        - 3 * t0**3 * t1
        - 3 * t0**3
        - 10 * t0**2 * t1
        + 2 * t0**2
        - t0 * t1
        + 7 * t0
        - 2 * t1
        - 2
    )
    return h0, h1, h2, h3, h4


def mu_u_series(j: int, order: int, cap: int = DEFAULT_ORDER_CAP) -> TruncatedSeries:
    """
    Closed-form series for the up-oriented class, sliced by rev-tier.

    The x^n coefficient equals j! times the number of up-oriented
    permutations of length n with rev-tier exactly j; only j = 0, 1, 2 have
    closed forms here.

    >>> mu_u_series(0, 7).integer_coefficients()
    (0, 0, 0, 1, 6, 26, 100, 365)
    >>> mu_u_series(1, 7).integer_coefficients()[4:]
    (2, 21, 148, 884)
    """
    if j not in (0, 1, 2):
        raise ValueError(f"closed forms exist for j in 0..2, not {j}")
    _check_order(order, cap)
    work = order + _WORK_MARGIN
    x = TruncatedSeries.x(work)
    one = TruncatedSeries.one(work)
    t0, t1, t2 = catalan_compositions(work)

    if j == 0:
        result = t0 - (one - x) / (one - 2 * x)
    elif j == 1:
        first = (x * t0 * ((one - x * t0) / (one - 2 * x * t0) - t1)) / (
            one - x - t0
        )
        second = (x**4 * t0**6 * (one - x + x * (2 * x - 3) * t0)) / (
            (one - 2 * x) * (one - x - t0) * (one - 2 * x * t0)
        )
        result = first + second
    else:
        h0, h1, h2, h3, h4 = _h_polynomials(t0, t1)
        bulk = (
            t1
            * t0**2
            * (2 * x - 1)
            * (t0 - 2)
            * (x * t0 + x - one) ** 2
            * (x * t0 * t1 + x * t0 - one)
            * t2
        )
        numerator = 2 * x**2 * (
            bulk + h0 + h1 * x + h2 * x**2 + h3 * x**3 + h4 * x**4
        )
        denominator = (
            (x * t0 * t1 + x * t0 - one)
            * (x * t0 + t1 - one)
            * (t0**2 + x * t0 - 3 * t0 - 2 * x + 2)
            * (x * t0 + x - one) ** 2
            * (2 * x - 1)
        )
        result = numerator / denominator
    return result.truncate(order)


def tier_series(t: int, order: int, cap: int = DEFAULT_ORDER_CAP) -> TruncatedSeries:
    """
    Series whose x^n coefficient counts the permutations of length n with
    rev-tier exactly t, for t = 0, 1, 2.

    Tier 0 is the Catalan series without its constant term; for t >= 1 the
    count is mu_u_series(t)/t! + mu_u_series(t-1)/(t-1)!.

    >>> tier_series(2, 7).integer_coefficients()
    (0, 0, 0, 0, 2, 26, 228, 1702)
    """
    if t not in (0, 1, 2):
        raise ValueError(f"closed forms exist for t in 0..2, not {t}")
    _check_order(order, cap)
    if t == 0:
        return (catalan_series(order) - 1).truncate(order)
    current = mu_u_series(t, order, cap) * Fraction(1, factorial(t))
    below = mu_u_series(t - 1, order, cap) * Fraction(1, factorial(t - 1))
    return current + below


def wilf_series(order: int, cap: int = DEFAULT_ORDER_CAP) -> TruncatedSeries:
    """
    Generating function 1 / (1 - x*C(xC(x))) counting the permutations of
    rev-tier at most 1 (equivalently the class avoiding 4321 and 4213).

    >>> wilf_series(6).integer_coefficients()
    (1, 1, 2, 6, 22, 89, 380)
    """
    _check_order(order, cap)
    work = order + _WORK_MARGIN
    x = TruncatedSeries.x(work)
    _, t1, _ = catalan_compositions(work)
    return (TruncatedSeries.one(work) - x * t1).reciprocal().truncate(order)
