"""Eta quotients: exact q-expansions, orders at cusps, Ligozat modularity test.

An eta quotient is a finite product prod_{delta | N} eta(delta z)^{r_delta}
built from the Dedekind eta function eta(z) = q^{1/24} prod_{n>=1} (1 - q^n).
The q^{delta/24} prefactors combine into one overall power
q^{(sum delta r_delta)/24}, which is kept symbolic; the series part of every
factor lives in integer powers of q and is handled by QSeries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import divisors, factorize
from .errors import CuspNotOnLevelError, DomainError, FractionalLeadingPowerError
from .qseries import QSeries, one, zero


@dataclass(frozen=True)
class Cusp:
    """A cusp a/c of Gamma_0(N) in lowest terms; c = N is the cusp at infinity."""

    a: int
    c: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.c, int) or self.c < 1:
            raise DomainError("cusp a/c needs integer a and positive integer c")
        if math.gcd(self.a, self.c) != 1:
            raise DomainError(f"cusp {self.a}/{self.c} is not in lowest terms")

    def __str__(self):
        return str(self.a) if self.c == 1 else f"{self.a}/{self.c}"


@dataclass(frozen=True)
class LigozatReport:
    """Outcome of the Ligozat modularity test for one eta quotient.

    The four arithmetic conditions are:

        L1: sum delta * r_delta     = 0 (mod 24)
        L2: sum (N/delta) * r_delta = 0 (mod 24)
        L4: prod delta^{r_delta} is the square of a rational
        L5: the weight (half the exponent sum) is an even integer

    L3 is the sign condition on the orders at the cusps 1/d, one per divisor
    d of the level: all >= 0 gives a holomorphic modular form (together with
    L1, L2, L4, L5), all > 0 a cusp form.
    """

    weight: Fraction
    l1_ok: bool
    l2_ok: bool
    l4_ok: bool
    l5_ok: bool
    cusp_orders: dict
    is_modular: bool
    is_cusp_form: bool

    @property
    def l3_ok(self) -> bool:
        return all(v >= 0 for v in self.cusp_orders.values())

    @property
    def l3_strict(self) -> bool:
        return all(v > 0 for v in self.cusp_orders.values())


@lru_cache(maxsize=None)
def eta_unit_series(delta: int, precision: int) -> QSeries:
    """The unit part prod_{n>=1} (1 - q^{delta n}) of eta(delta z), truncated.

    This is eta(delta z) * q^{-delta/24}: the fractional prefactor is excluded
    by contract. Filled sparsely via the generalized pentagonal numbers
    j(3j -+ 1)/2, whose terms carry sign (-1)^j.
    """
    if not isinstance(delta, int) or delta < 1:
        raise DomainError(f"delta must be a positive integer, got {delta!r}")
    if precision < 1:
        raise DomainError("precision must be at least 1")
    coeffs = [0] * precision
    coeffs[0] = 1
    j = 1
    while True:
        low = delta * (j * (3 * j - 1) // 2)
        if low >= precision:
            break
        sign = -1 if j & 1 else 1
        coeffs[low] = sign
        high = delta * (j * (3 * j + 1) // 2)
        if high < precision:
            coeffs[high] = sign
        j += 1
    return QSeries(coeffs)


class EtaQuotient:
    """A formal product prod eta(delta z)^{r_delta} over divisors delta of level."""

    __slots__ = ("_level", "_exponents")

    def __init__(self, level: int, exponents=None):
        if not isinstance(level, int) or level < 1:
            raise DomainError(f"level must be a positive integer, got {level!r}")
        cleaned = {}
        for delta, r in (exponents or {}).items():
            if not isinstance(delta, int) or not isinstance(r, int):
                raise DomainError("eta exponent map must be int -> int")
            if delta < 1 or level % delta != 0:
                raise DomainError(f"delta {delta} does not divide the level {level}")
            if r:
                cleaned[delta] = r
        self._level = level
        self._exponents = dict(sorted(cleaned.items()))

    @classmethod
    def parse(cls, text: str, level: int) -> "EtaQuotient":
        """Parse the CLI grammar ``delta:exponent(,delta:exponent)*``.

        Integers are decimal, exponents may carry a sign, and the empty
        string denotes the empty quotient (the constant 1).
        """
        exponents: dict[int, int] = {}
        if text:
            for part in text.split(","):
                head, sep, tail = part.partition(":")
                if not sep:
                    raise DomainError(f"bad eta term {part!r}: expected delta:exponent")
                try:
                    delta, r = int(head), int(tail)
                except ValueError:
                    raise DomainError(f"bad eta term {part!r}: expected integers") from None
                if delta in exponents:
                    raise DomainError(f"duplicate delta {delta} in eta spec")
                exponents[delta] = r
        return cls(level, exponents)

    # -- inspection ---------------------------------------------------------

    @property
    def level(self) -> int:
        return self._level

    @property
    def exponents(self) -> dict[int, int]:
        """Copy of the nonzero exponent map delta -> r_delta."""
        return dict(self._exponents)

    def exponent(self, delta: int) -> int:
        return self._exponents.get(delta, 0)

    @property
    def weight(self) -> Fraction:
        """Half the exponent sum: the modular weight when the quotient is modular."""
        return Fraction(sum(self._exponents.values()), 2)

    def __eq__(self, other):
        if not isinstance(other, EtaQuotient):
            return NotImplemented
        return self._level == other._level and self._exponents == other._exponents

    def __mul__(self, other):
        if not isinstance(other, EtaQuotient):
            return NotImplemented
        if self._level != other._level:
            raise DomainError("can only merge eta quotients of the same level")
        merged = dict(self._exponents)
        for delta, r in other._exponents.items():
            merged[delta] = merged.get(delta, 0) + r
        return EtaQuotient(self._level, merged)

    def __str__(self):
        return ",".join(f"{d}:{r}" for d, r in self._exponents.items())

    def __repr__(self):
        return f"EtaQuotient(level={self._level}, {{{str(self)}}})"

    # -- expansion ----------------------------------------------------------

    def fractional_order(self) -> Fraction:
        """The exact leading q-power (sum delta r_delta) / 24, integral or not."""
        return Fraction(sum(d * r for d, r in self._exponents.items()), 24)

    def expand(self, precision: int) -> QSeries:
        """The q-expansion to the given precision.

        Only quotients whose prefactor exponent sum(delta r_delta) is a
        multiple of 24 expand in integer powers of q; anything else raises
        FractionalLeadingPowerError (see fractional_order for the exact
        leading power in that case).
        """
        prefactor = sum(d * r for d, r in self._exponents.items())
        if prefactor % 24:
            raise FractionalLeadingPowerError(
                f"sum(delta*r_delta) = {prefactor} is not divisible by 24; "
                f"leading power would be {Fraction(prefactor, 24)}")
        lead = prefactor // 24
        unit_precision = precision - lead
        if unit_precision <= 0:
            return zero(precision)
        result = one(unit_precision)
        for delta, r in sorted(self._exponents.items(), key=lambda item: (abs(item[1]), item[0])):
            result = result * (eta_unit_series(delta, unit_precision) ** r)
        return result.shift(lead)

    # -- behaviour at cusps -------------------------------------------------

    def cusp_order(self, cusp: Cusp) -> Fraction:
        """Exact vanishing order at the cusp a/c, for c dividing the level:

            N / (24 gcd(c^2, N)) * sum_{delta | N} gcd(delta, c)^2 r_delta / delta
        """
        if self._level % cusp.c:
            raise CuspNotOnLevelError(
                f"cusp denominator {cusp.c} does not divide level {self._level}")
        total = Fraction(0)
        for delta, r in self._exponents.items():
            total += Fraction(math.gcd(delta, cusp.c) ** 2 * r, delta)
        return Fraction(self._level, 24 * math.gcd(cusp.c ** 2, self._level)) * total

    def ligozat_report(self) -> LigozatReport:
        """Evaluate all Ligozat conditions exactly; a report, never a gate.

        L4 is decided by the prime factorization of prod delta^{r_delta}
        (every prime exponent must be even for the square root to be
        rational). Orders are reported for one cusp 1/d per divisor d of the
        level, which is exactly the L3 family of sign conditions.
        """
        level = self._level
        items = self._exponents.items()
        l1 = sum(d * r for d, r in items) % 24 == 0
        l2 = sum((level // d) * r for d, r in items) % 24 == 0
        weight = self.weight
        l5 = weight.denominator == 1 and weight.numerator % 2 == 0
        prime_exponents: dict[int, int] = {}
        for d, r in items:
            for p, e in factorize(d).items():
                prime_exponents[p] = prime_exponents.get(p, 0) + e * r
        l4 = all(e % 2 == 0 for e in prime_exponents.values())
        orders = {}
        for d in divisors(level):
            cusp = Cusp(1, d)
            orders[cusp] = self.cusp_order(cusp)
        is_modular = l1 and l2 and l4 and l5 and all(v >= 0 for v in orders.values())
        is_cusp_form = is_modular and all(v > 0 for v in orders.values())
        return LigozatReport(weight=weight, l1_ok=l1, l2_ok=l2, l4_ok=l4, l5_ok=l5,
                             cusp_orders=orders, is_modular=is_modular,
                             is_cusp_form=is_cusp_form)


def phi_quotient(dilation: int = 1) -> EtaQuotient:
    """The theta series sum_{x in Z} q^{dilation x^2} as an eta quotient.

    phi(dz) = eta^5(2dz) / (eta^2(dz) eta^2(4dz)), naturally of level 4d.
    """
    if not isinstance(dilation, int) or dilation < 1:
        raise DomainError("dilation must be a positive integer")
    d = dilation
    return EtaQuotient(4 * d, {d: -2, 2 * d: 5, 4 * d: -2})


def phi_power_quotient(k: int, i: int) -> EtaQuotient:
    """phi(z)^{4k-2i} phi(3z)^{2i} as a level-12 eta quotient.

    Requires k >= 2 and 0 <= i <= 2k (at k = 1 the cusp space downstream is
    trivial and the basis machinery does not apply).
    """
    if not isinstance(k, int) or not isinstance(i, int) or k < 2 or not 0 <= i <= 2 * k:
        raise DomainError(f"need integers k >= 2 and 0 <= i <= 2k, got k={k!r}, i={i!r}")
    return EtaQuotient(12, {
        1: -(8 * k - 4 * i),
        2: 20 * k - 10 * i,
        3: -4 * i,
        4: -(8 * k - 4 * i),
        6: 10 * i,
        12: -4 * i,
    })
