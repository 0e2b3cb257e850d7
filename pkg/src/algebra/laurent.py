"""Exact Laurent polynomials in q, quantum integers and rational functions.

Coefficients are Python integers, so values never overflow and no floating
point enters a computation. ``RationalFn`` uses sympy's polynomial gcd to keep
numerator and denominator in lowest terms.
"""

from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

import sympy

from ..errors import NonDivisible, OutOfRange

_Q = sympy.Symbol("q")

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """An integer Laurent polynomial in q, stored as exponent -> coefficient."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        self._coeffs: Dict[int, int] = {}
        if coeffs:
            for exponent, coefficient in coeffs.items():
                if coefficient:
                    self._coeffs[int(exponent)] = int(coefficient)

    # Constructors

    @classmethod
    def q(cls, exponent: int = 1) -> "LaurentPoly":
        return cls({exponent: 1})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def promote(cls, item: Scalar) -> "LaurentPoly":
        if isinstance(item, LaurentPoly):
            return item
        if isinstance(item, int):
            return cls.constant(item)
        raise TypeError(f"Cannot promote {type(item).__name__} to LaurentPoly")

    # Inspection

    def items(self) -> List[Tuple[int, int]]:
        """Terms sorted by descending exponent."""
        return sorted(self._coeffs.items(), reverse=True)

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def exponents(self) -> List[int]:
        return sorted(self._coeffs, reverse=True)

    def max_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("The zero polynomial has no degree")
        return max(self._coeffs)

    def min_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("The zero polynomial has no degree")
        return min(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def evaluate_at_one(self) -> int:
        return sum(self._coeffs.values())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    # Arithmetic

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = LaurentPoly.promote(other)
        result = dict(self._coeffs)
        for exponent, coefficient in other._coeffs.items():
            result[exponent] = result.get(exponent, 0) + coefficient
        return LaurentPoly(result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        return self + (-LaurentPoly.promote(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.promote(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        other = LaurentPoly.promote(other)
        result: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            if len(self._coeffs) == 1:
                ((e, c),) = self._coeffs.items()
                if c in (1, -1):
                    return LaurentPoly({-e * -power: c ** (-power)})
            raise ValueError("Only monomial units have negative powers")
        result = LaurentPoly.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def bar(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    # Serialization

    def to_text(self) -> str:
        """Render as e.g. ``q^2 + 1 + q^-2``; exponents descending."""
        if not self._coeffs:
            return "0"
        parts: List[str] = []
        for index, (exponent, coefficient) in enumerate(self.items()):
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                qpart = "q" if exponent == 1 else f"q^{exponent}"
                body = qpart if magnitude == 1 else f"{magnitude}*{qpart}"
            if index == 0:
                parts.append(body if coefficient > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the format produced by :meth:`to_text`."""
        compact = text.replace(" ", "")
        if compact in ("", "0"):
            return cls()
        terms: List[str] = []
        current = ""
        for position, char in enumerate(compact):
            if char in "+-" and position > 0 and compact[position - 1] != "^":
                terms.append(current)
                current = char
            else:
                current += char
        terms.append(current)

        coeffs: Dict[int, int] = {}
        for term in terms:
            sign = -1 if term.startswith("-") else 1
            body = term.lstrip("+-")
            if not body:
                raise ValueError(f"Malformed polynomial: {text!r}")
            if "q" in body:
                coefficient_part, _, q_part = body.partition("q")
                coefficient_part = coefficient_part.rstrip("*")
                magnitude = int(coefficient_part) if coefficient_part else 1
                exponent = int(q_part[1:]) if q_part.startswith("^") else 1
                if q_part and not q_part.startswith("^"):
                    raise ValueError(f"Malformed polynomial: {text!r}")
            else:
                magnitude, exponent = int(body), 0
            coeffs[exponent] = coeffs.get(exponent, 0) + sign * magnitude
        return cls(coeffs)

    def to_json(self) -> Dict[str, List[List[int]]]:
        return {"poly": [[e, c] for e, c in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping[str, List[List[int]]]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data["poly"]})

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"


def quantum_integer(n: int) -> LaurentPoly:
    """[n] = (q^n - q^-n) / (q - q^-1); [0] = 0."""
    if n < 0:
        raise OutOfRange(f"Invalid quantum integer index: {n}. Must be non-negative")
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


def laurent_div_exact(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return the exact quotient p / d in Z[q, q^-1], raising NonDivisible on a remainder.

    Monomials are units of the Laurent ring, so dividing by q^k always
    succeeds: (q + q^-1) / q^2 is q^-1 + q^-3.
    """
    if d.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly()
    lead_d = d.max_degree()
    lead_coefficient = d.coefficient(lead_d)
    floor = p.min_degree() - d.min_degree()
    remainder = p
    quotient: Dict[int, int] = {}
    while remainder:
        lead_r = remainder.max_degree()
        exponent = lead_r - lead_d
        coefficient = remainder.coefficient(lead_r)
        if exponent < floor or coefficient % lead_coefficient:
            raise NonDivisible(f"{p.to_text()} is not divisible by {d.to_text()}")
        factor = coefficient // lead_coefficient
        quotient[exponent] = factor
        remainder = remainder - d.shift(exponent) * factor
    return LaurentPoly(quotient)


def _to_sympy(p: LaurentPoly) -> sympy.Poly:
    return sympy.Poly.from_dict({(e,): c for e, c in p.items()}, _Q, domain=sympy.ZZ)


def _from_sympy(poly: sympy.Poly) -> LaurentPoly:
    return LaurentPoly({monomial[0]: int(c) for monomial, c in poly.terms()})


class RationalFn:
    """A quotient of Laurent polynomials kept in lowest terms.

    Canonical form: the denominator is an ordinary polynomial with nonzero
    constant term and positive leading coefficient.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Scalar, denominator: Scalar = 1):
        numerator = LaurentPoly.promote(numerator)
        denominator = LaurentPoly.promote(denominator)
        if denominator.is_zero():
            raise ZeroDivisionError("RationalFn with zero denominator")
        self.numerator, self.denominator = self._normalize(numerator, denominator)

    @staticmethod
    def _normalize(
        numerator: LaurentPoly, denominator: LaurentPoly
    ) -> Tuple[LaurentPoly, LaurentPoly]:
        if numerator.is_zero():
            return LaurentPoly(), LaurentPoly.constant(1)
        shift = numerator.min_degree() - denominator.min_degree()
        top = numerator.shift(-numerator.min_degree())
        bottom = denominator.shift(-denominator.min_degree())
        if len(bottom) > 1 or abs(bottom.coefficient(0)) != 1:
            top_poly, bottom_poly = _to_sympy(top), _to_sympy(bottom)
            common = top_poly.gcd(bottom_poly)
            top = _from_sympy(top_poly.exquo(common))
            bottom = _from_sympy(bottom_poly.exquo(common))
        if bottom.coefficient(bottom.max_degree()) < 0:
            top, bottom = -top, -bottom
        return top.shift(shift), bottom

    @classmethod
    def promote(cls, item: Union[Scalar, "RationalFn"]) -> "RationalFn":
        if isinstance(item, RationalFn):
            return item
        return cls(item)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __add__(self, other) -> "RationalFn":
        other = RationalFn.promote(other)
        return RationalFn(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.numerator, self.denominator)

    def __sub__(self, other) -> "RationalFn":
        return self + (-RationalFn.promote(other))

    def __rsub__(self, other) -> "RationalFn":
        return RationalFn.promote(other) - self

    def __mul__(self, other) -> "RationalFn":
        other = RationalFn.promote(other)
        return RationalFn(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = RationalFn.promote(other)
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero rational function")
        return RationalFn(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def __rtruediv__(self, other) -> "RationalFn":
        return RationalFn.promote(other) / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return (
            self.numerator == other.numerator and self.denominator == other.denominator
        )

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def as_laurent(self) -> LaurentPoly:
        """Return the value as a Laurent polynomial or raise NonDivisible."""
        return laurent_div_exact(self.numerator, self.denominator)

    def __repr__(self) -> str:
        if self.denominator == 1:
            return f"RationalFn({self.numerator.to_text()!r})"
        return (
            f"RationalFn(({self.numerator.to_text()}) / ({self.denominator.to_text()}))"
        )


class TwoVarPoly:
    """Integer polynomial in t^{+-1} and q^{+-1}; used for Poincare polynomials."""

    def __init__(self, coeffs: Optional[Mapping[Tuple[int, int], int]] = None):
        self.coeffs: Dict[Tuple[int, int], int] = {
            (int(i), int(j)): int(c) for (i, j), c in (coeffs or {}).items() if c
        }

    def specialize_t(self, t: int) -> LaurentPoly:
        """Set t to +1 or -1."""
        result: Dict[int, int] = {}
        for (i, j), c in self.coeffs.items():
            result[j] = result.get(j, 0) + c * (t**i if i >= 0 else t ** (-i))
        return LaurentPoly(result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoVarPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda kv: (kv[0][0], -kv[0][1])):
            factors = []
            if i:
                factors.append("t" if i == 1 else f"t^{i}")
            if j:
                factors.append("q" if j == 1 else f"q^{j}")
            if abs(c) != 1 or not factors:
                factors.insert(0, str(abs(c)))
            body = "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"TwoVarPoly({self.to_text()!r})"
