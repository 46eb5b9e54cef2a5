"""Integer Laurent polynomials in one variable, stored as a lowest exponent plus a numpy
coefficient vector."""

from collections.abc import Mapping

import numpy as np


class LaurentPoly:
    """Normalized: no leading or trailing zero coefficients; the zero polynomial is empty."""

    __slots__ = ("low", "coeffs")

    def __init__(self, low: int = 0, coeffs=()):
        array = np.asarray(coeffs, dtype=np.int64)
        nonzero = np.flatnonzero(array)
        if nonzero.size == 0:
            self.low = 0
            self.coeffs = np.zeros(0, dtype=np.int64)
        else:
            self.low = int(low) + int(nonzero[0])
            self.coeffs = array[nonzero[0] : nonzero[-1] + 1].copy()

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls(exponent, [coefficient])

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.monomial(0)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "LaurentPoly":
        if not terms:
            return cls()
        low, high = min(terms), max(terms)
        coeffs = np.zeros(high - low + 1, dtype=np.int64)
        for exponent, coefficient in terms.items():
            coeffs[exponent - low] += coefficient
        return cls(low, coeffs)

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def high(self) -> int:
        return self.low + self.coeffs.size - 1

    def terms(self) -> dict[int, int]:
        return {
            self.low + i: int(c) for i, c in enumerate(self.coeffs) if c != 0
        }

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        coeffs = np.zeros(high - low + 1, dtype=np.int64)
        coeffs[self.low - low : self.high - low + 1] += self.coeffs
        coeffs[other.low - low : other.high - low + 1] += other.coeffs
        return LaurentPoly(low, coeffs)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.low, -self.coeffs)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.low, self.coeffs * other)
        if self.is_zero or other.is_zero:
            return LaurentPoly()
        return LaurentPoly(self.low + other.low, np.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise ValueError("negative powers are only defined for monomials; use shift")
        result = LaurentPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly(self.low + k, self.coeffs)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute x -> x^-1."""
        return LaurentPoly(-self.high, self.coeffs[::-1])

    def rescale(self, factor: int) -> "LaurentPoly":
        """
        Substitute x -> x^(1/factor); every exponent must be divisible by `factor`.

        Raises:
            ValueError: If some exponent is not divisible
        """
        terms = self.terms()
        if any(exponent % factor for exponent in terms):
            raise ValueError(f"exponents of {self} are not multiples of {factor}")
        return LaurentPoly.from_terms({exponent // factor: c for exponent, c in terms.items()})

    def evaluate(self, x: float) -> float:
        return float(sum(c * x**e for e, c in self.terms().items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.low, tuple(self.coeffs.tolist())))

    def to_dict(self) -> dict[str, int]:
        return {str(exponent): c for exponent, c in self.terms().items()}

    def __repr__(self) -> str:
        return f"LaurentPoly({self.low}, {self.coeffs.tolist()})"

    def format(self, variable: str = "t") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exponent, c in sorted(self.terms().items(), reverse=True):
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = variable if exponent == 1 else f"{variable}^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()
