"""Exact polynomial and truncated power-series arithmetic over the integers.

Both types store dense coefficient vectors of Python ints (arbitrary precision),
lowest degree first.  ExactPolynomial is normalized: trailing zero coefficients
are stripped, the zero polynomial is the empty tuple and has degree None.
TruncatedSeries keeps exactly ``truncation_order + 1`` coefficients, trailing
zeros included, and represents a power series modulo t^(truncation_order + 1).

Series equality is prefix agreement: two series compare equal when their
coefficients agree up to the smaller of the two truncation orders.  That is the
only meaningful comparison between truncations of the same underlying series,
and it is deliberately not transitive; series are unhashable for that reason.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union


class InexactDivisionError(ValueError):
    """Polynomial division left a remainder where exactness was required."""


def _trimmed(coefficients: Iterable[int]) -> tuple[int, ...]:
    coeffs = tuple(int(c) for c in coefficients)
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


@dataclass(frozen=True)
class ExactPolynomial:
    """Univariate polynomial in t with exact integer coefficients."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trimmed(self.coefficients))

    @classmethod
    def zero(cls) -> "ExactPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "ExactPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "ExactPolynomial":
        if exponent < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "ExactPolynomial":
        """Build a polynomial from an {exponent: coefficient} mapping."""
        if not terms:
            return cls.zero()
        coeffs = [0] * (max(terms) + 1)
        for exponent, coefficient in terms.items():
            if exponent < 0:
                raise ValueError("exponents must be nonnegative")
            coeffs[exponent] += coefficient
        return cls(tuple(coeffs))

    @property
    def degree(self) -> Union[int, None]:
        """Degree of the polynomial; None for the zero polynomial."""
        if not self.coefficients:
            return None
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, exponent: int) -> int:
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        if exponent >= len(self.coefficients):
            return 0
        return self.coefficients[exponent]

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ExactPolynomial(tuple(out))

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["ExactPolynomial", int]):
        if isinstance(other, int):
            return ExactPolynomial(tuple(c * other for c in self.coefficients))
        if isinstance(other, TruncatedSeries):
            return NotImplemented
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return ExactPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return ExactPolynomial(tuple(out))

    def __rmul__(self, other: int):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "ExactPolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers require a nonnegative integer exponent")
        result = ExactPolynomial.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divide_exact(self, divisor: "ExactPolynomial") -> "ExactPolynomial":
        """Exact quotient self / divisor over the integers.

        Raises InexactDivisionError when any long-division step fails to divide
        or a nonzero remainder is left; such a failure signals an internal
        inconsistency in callers that expect exactness.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ExactPolynomial.zero()
        num_deg, den_deg = len(self.coefficients) - 1, len(divisor.coefficients) - 1
        if num_deg < den_deg:
            raise InexactDivisionError(
                f"degree {num_deg} numerator is not divisible by degree {den_deg} divisor"
            )
        rem = list(self.coefficients)
        den = divisor.coefficients
        lead = den[-1]
        quot = [0] * (num_deg - den_deg + 1)
        for k in range(num_deg - den_deg, -1, -1):
            head = rem[k + den_deg]
            if head % lead != 0:
                raise InexactDivisionError(
                    f"leading coefficient {head} not divisible by {lead} at step {k}"
                )
            c = head // lead
            quot[k] = c
            if c:
                for j, d in enumerate(den):
                    rem[k + j] -= c * d
        if any(rem):
            raise InexactDivisionError(f"nonzero remainder {_trimmed(rem)}")
        return ExactPolynomial(tuple(quot))

    def is_palindromic(self) -> bool:
        """Whether coefficients read the same from both ends (Poincare duality shape)."""
        if self.is_zero():
            raise ValueError("palindromicity is undefined for the zero polynomial")
        cs = self.coefficients
        return all(cs[i] == cs[-1 - i] for i in range(len(cs) // 2 + 1))

    def as_series(self, order: int) -> "TruncatedSeries":
        """This polynomial reduced modulo t^(order+1)."""
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = self.coefficients[: order + 1]
        return TruncatedSeries(coeffs + (0,) * (order + 1 - len(coeffs)), order)

    def inverse_series(self, order: int) -> "TruncatedSeries":
        """Multiplicative inverse as a power series modulo t^(order+1).

        The constant term must be a unit of the integers (+1 or -1); anything
        else cannot be inverted without leaving the integer coefficient ring.
        """
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        unit = self.coefficient(0)
        if unit not in (1, -1):
            raise ValueError(f"constant term {unit} is not invertible over the integers")
        p = self.coefficients
        out = [0] * (order + 1)
        out[0] = unit
        for n in range(1, order + 1):
            acc = 0
            for k in range(1, min(n, len(p) - 1) + 1):
                if p[k]:
                    acc += p[k] * out[n - k]
            out[n] = -unit * acc
        return TruncatedSeries(tuple(out), order)


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Integer power series known modulo t^(truncation_order + 1)."""

    coefficients: tuple[int, ...]
    truncation_order: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if self.truncation_order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(self.coefficients) != self.truncation_order + 1:
            raise ValueError(
                f"expected {self.truncation_order + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * order, order)

    @classmethod
    def from_polynomial(cls, poly: ExactPolynomial, order: int) -> "TruncatedSeries":
        return poly.as_series(order)

    def coefficient(self, exponent: int) -> int:
        if not 0 <= exponent <= self.truncation_order:
            raise ValueError(
                f"coefficient {exponent} is outside the known range 0..{self.truncation_order}"
            )
        return self.coefficients[exponent]

    def truncate(self, order: int) -> "TruncatedSeries":
        """Forget coefficients above the given (not larger) order."""
        if order > self.truncation_order:
            raise ValueError(
                f"cannot extend truncation order {self.truncation_order} to {order}"
            )
        if order == self.truncation_order:
            return self
        return TruncatedSeries(self.coefficients[: order + 1], order)

    def times_t_power(self, exponent: int) -> "TruncatedSeries":
        """Multiply by t^exponent; the known order grows by the same amount."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return TruncatedSeries(
            (0,) * exponent + self.coefficients, self.truncation_order + exponent
        )

    def polynomial_prefix(self, max_degree: int) -> ExactPolynomial:
        """The polynomial formed by coefficients 0..max_degree."""
        if max_degree > self.truncation_order:
            raise ValueError(
                f"prefix degree {max_degree} exceeds truncation order {self.truncation_order}"
            )
        return ExactPolynomial(self.coefficients[: max_degree + 1])

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        """Coefficientwise agreement up to the smaller truncation order."""
        order = min(self.truncation_order, other.truncation_order)
        return self.coefficients[: order + 1] == other.coefficients[: order + 1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.agrees_with(other)
        return NotImplemented

    __hash__ = None  # prefix equality is not hash-compatible

    def _binary(self, other: "TruncatedSeries", sign: int) -> "TruncatedSeries":
        order = min(self.truncation_order, other.truncation_order)
        a, b = self.coefficients, other.coefficients
        return TruncatedSeries(
            tuple(a[i] + sign * b[i] for i in range(order + 1)), order
        )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._binary(other, 1)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._binary(other, -1)

    def __mul__(self, other: Union["TruncatedSeries", ExactPolynomial, int]):
        if isinstance(other, int):
            return TruncatedSeries(
                tuple(c * other for c in self.coefficients), self.truncation_order
            )
        if isinstance(other, ExactPolynomial):
            # A polynomial is exact, so the product stays known to the same order.
            order = self.truncation_order
            out = [0] * (order + 1)
            for i, ca in enumerate(other.coefficients):
                if ca == 0 or i > order:
                    continue
                for j in range(order - i + 1):
                    out[i + j] += ca * self.coefficients[j]
            return TruncatedSeries(tuple(out), order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.truncation_order, other.truncation_order)
        out = [0] * (order + 1)
        for i in range(order + 1):
            ca = self.coefficients[i]
            if ca == 0:
                continue
            for j in range(order - i + 1):
                out[i + j] += ca * other.coefficients[j]
        return TruncatedSeries(tuple(out), order)

    def __rmul__(self, other: Union[ExactPolynomial, int]):
        if isinstance(other, (int, ExactPolynomial)):
            return self * other
        return NotImplemented
