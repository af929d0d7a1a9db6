"""Truncated formal power series in q with exact rational coefficients.

A QSeries stores the coefficients of q^n for leading_exponent <= n < precision
and promises nothing about q^n for n >= precision. Negative leading exponents
(finite principal parts) are allowed. Coefficients are exact: Python ints, or
Fractions when a denominator is genuinely present; integral Fractions
normalize to int so that products of integral series run in plain integer
arithmetic.

Precision bookkeeping follows the usual rules for truncated series:

    add:    precision = min(Pa, Pb)
    mul:    precision = min(Pa + Lb, Pb + La),  leading = La + Lb
    invert: precision = P - 2L,                 leading = -L

where L is the leading exponent and P the precision of an operand.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, InsufficientPrecisionError, NonUnitLeadingCoefficientError


def _exact(value):
    """Validate/normalize one coefficient: int stays, integral Fraction -> int."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"coefficients must be exact (int or Fraction), got {type(value).__name__}")


class QSeries:
    """A truncated series sum c_n q^n, exact and immutable."""

    __slots__ = ("_leading", "_coeffs", "_precision")

    def __init__(self, coefficients=(), leading: int = 0, precision: int | None = None):
        coeffs = [_exact(c) for c in coefficients]
        if precision is None:
            precision = leading + len(coeffs)
        elif precision - leading != len(coeffs):
            raise DomainError("precision - leading must equal the number of coefficients")
        drop = 0
        while drop < len(coeffs) and coeffs[drop] == 0:
            drop += 1
        self._leading = leading + drop
        self._coeffs = tuple(coeffs[drop:])
        self._precision = precision

    # -- inspection ---------------------------------------------------------

    @property
    def leading_exponent(self) -> int:
        """Exponent of the first stored (nonzero) coefficient; equals the
        precision for a series that is zero as far as it is known."""
        return self._leading

    @property
    def precision(self) -> int:
        return self._precision

    @property
    def coefficients(self) -> tuple:
        """Stored coefficients, indexed from the leading exponent."""
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, n: int):
        """Exact coefficient of q^n; zero below the leading exponent."""
        if n >= self._precision:
            raise InsufficientPrecisionError(
                f"coefficient of q^{n} requested but precision is {self._precision}")
        if n < self._leading:
            return 0
        return self._coeffs[n - self._leading]

    __getitem__ = coefficient

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        precision = min(self._precision, other._precision)
        lead = min(self._leading, other._leading)
        if precision <= lead:
            return QSeries((), leading=precision, precision=precision)
        out = [0] * (precision - lead)
        for src in (self, other):
            base = src._leading - lead
            for idx, c in enumerate(src._coeffs):
                pos = base + idx
                if pos < len(out):
                    out[pos] += c
        return QSeries(out, leading=lead, precision=precision)

    def __neg__(self):
        return QSeries([-c for c in self._coeffs], leading=self._leading,
                       precision=self._precision)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        lead = self._leading + other._leading
        precision = min(self._precision + other._leading,
                        other._precision + self._leading)
        size = precision - lead
        if size <= 0 or not self._coeffs or not other._coeffs:
            return QSeries((), leading=precision, precision=precision)
        a, b = self._coeffs, other._coeffs
        if len(a) > len(b):  # short outer loop, long cached inner row
            a, b = b, a
        out = [0] * size
        for ia in range(min(len(a), size)):
            ca = a[ia]
            if ca:
                top = min(len(b), size - ia)
                for ib in range(top):
                    cb = b[ib]
                    if cb:
                        out[ia + ib] += ca * cb
        return QSeries(out, leading=lead, precision=precision)

    __rmul__ = __mul__

    def _scaled(self, scalar):
        scalar = _exact(scalar)
        if scalar == 0:
            return QSeries((), leading=self._precision, precision=self._precision)
        return QSeries([scalar * c for c in self._coeffs], leading=self._leading,
                       precision=self._precision)

    def invert(self):
        """Multiplicative inverse, so that self * self.invert() == 1 up to the
        contractual precision. Requires a known nonzero leading coefficient."""
        if not self._coeffs:
            raise NonUnitLeadingCoefficientError(
                "cannot invert a series with no known nonzero coefficient")
        a = self._coeffs
        a0 = a[0]
        if a0 == 1:
            inv0 = 1
        elif a0 == -1:
            inv0 = -1
        else:
            inv0 = _exact(Fraction(1) / a0)
        out = [inv0]
        for m in range(1, len(a)):
            acc = 0
            for i in range(1, m + 1):
                ai = a[i]
                if ai:
                    acc += ai * out[m - i]
            out.append((-acc) * inv0 if inv0 != 1 else -acc)
        return QSeries(out, leading=-self._leading,
                       precision=self._precision - 2 * self._leading)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("series exponent must be an integer")
        if exponent == 0:
            return one(self._precision)
        base = self if exponent > 0 else self.invert()
        e = abs(exponent)
        result = None
        while True:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if not e:
                return result
            base = base * base

    # -- reshaping ----------------------------------------------------------

    def shift(self, offset: int):
        """Multiply by q**offset (shifts both leading exponent and precision)."""
        return QSeries(self._coeffs, leading=self._leading + offset,
                       precision=self._precision + offset)

    def truncate(self, precision: int):
        """Forget coefficients at q^n for n >= precision (never raises precision)."""
        if precision > self._precision:
            raise InsufficientPrecisionError(
                f"cannot extend precision {self._precision} to {precision}")
        if precision <= self._leading:
            return QSeries((), leading=precision, precision=precision)
        return QSeries(self._coeffs[: precision - self._leading],
                       leading=self._leading, precision=precision)

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self._leading == other._leading
                and self._precision == other._precision
                and self._coeffs == other._coeffs)

    def __repr__(self):
        shown = []
        for idx, c in enumerate(self._coeffs):
            if c:
                n = self._leading + idx
                term = str(c) if n == 0 else (f"{c}*q" if n == 1 else f"{c}*q^{n}")
                shown.append(term)
            if len(shown) == 8:
                shown.append("...")
                break
        body = " + ".join(shown) if shown else "0"
        return f"QSeries({body} + O(q^{self._precision}))"


def zero(precision: int = 0) -> QSeries:
    """The zero series, known to the given precision."""
    return QSeries((), leading=precision, precision=precision)


def one(precision: int) -> QSeries:
    """The constant series 1, known to the given precision (>= 1)."""
    if precision < 1:
        raise DomainError("the constant 1 needs precision >= 1")
    return QSeries([1] + [0] * (precision - 1))


def monomial(coefficient, exponent: int, precision: int) -> QSeries:
    """coefficient * q**exponent, known to the given precision."""
    if precision <= exponent:
        raise DomainError("monomial precision must exceed its exponent")
    return QSeries([coefficient] + [0] * (precision - exponent - 1), leading=exponent)
