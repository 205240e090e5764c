"""
Univariate polynomials and rational functions over the rationals.

Coefficients are ``fractions.Fraction`` stored lowest degree first. The gcd
works on primitive integer polynomials with the subresultant remainder
sequence so that intermediate coefficients stay small.
"""

import math
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..core.exceptions import AlgebraException

Number = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise AlgebraException(f"Not an exact rational: {value!r}")


def format_fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class Poly:
    """Polynomial with rational coefficients.

    Args:
        coeffs: Coefficients lowest degree first; trailing zeros are dropped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        values = [to_fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(values)

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def constant(cls, value: Number) -> "Poly":
        return cls((value,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def linear_root(cls, root: Number) -> "Poly":
        """The monic factor ``x - root``."""
        return cls((-to_fraction(root), 1))

    # ------------------------------------------------------------------
    # properties
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading == 1

    def coeff(self, power: int) -> Fraction:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else Fraction(0)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise AlgebraException("Negative polynomial power")
        result = Poly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other) -> Tuple["Poly", "Poly"]:
        other = _as_poly(other)
        if other.is_zero():
            raise AlgebraException("Division by the zero polynomial")
        remainder = list(self.coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - other.degree, 1)
        lead = other.leading
        while len(remainder) - 1 >= other.degree and remainder:
            shift = len(remainder) - 1 - other.degree
            factor = remainder[-1] / lead
            quotient[shift] = factor
            for i, c in enumerate(other.coeffs):
                remainder[i + shift] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return Poly(quotient), Poly(remainder)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        """Divide, raising if the division leaves a remainder."""
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise AlgebraException(f"{other} does not divide {self}")
        return quotient

    def scale(self, factor: Number) -> "Poly":
        factor = to_fraction(factor)
        return Poly(c * factor for c in self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def __call__(self, x):
        """Evaluate with Horner's scheme; works for Fractions and floats."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else float(c))
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # ------------------------------------------------------------------
    # integer forms and roots
    # ------------------------------------------------------------------

    def primitive_integer(self) -> List[int]:
        """Integer coefficients of the same roots, content 1, leading positive."""
        if self.is_zero():
            return []
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        content = 0
        for c in ints:
            content = math.gcd(content, c)
        sign = 1 if ints[-1] > 0 else -1
        return [sign * c // content for c in ints]

    def multiplicity(self, root: Number) -> int:
        """Number of times ``x - root`` divides this polynomial."""
        if self.is_zero():
            raise AlgebraException("Root multiplicity of the zero polynomial")
        factor = Poly.linear_root(root)
        count, current = 0, self
        while current.degree >= 1:
            quotient, remainder = divmod(current, factor)
            if not remainder.is_zero():
                break
            count += 1
            current = quotient
        return count

    def root_bound(self) -> float:
        """Fujiwara bound: every complex root has modulus at most this value."""
        if self.degree < 1:
            return 0.0
        n = self.degree
        lead = abs(self.leading)
        terms = []
        for k in range(1, n + 1):
            c = abs(self.coeffs[n - k]) / lead
            if k == n:
                c /= 2
            terms.append(float(c) ** (1.0 / k))
        return 2.0 * max(terms)

    def rational_roots(self) -> Dict[Fraction, int]:
        """All rational roots with their multiplicities.

        Candidates are ``p/q`` with ``q`` dividing the leading coefficient of the
        primitive integer form and ``|p/q|`` within the root bound.
        """
        roots: Dict[Fraction, int] = {}
        current = self
        zero_mult = 0
        while current.degree >= 1 and current.coeff(0) == 0:
            current = Poly(current.coeffs[1:])
            zero_mult += 1
        if zero_mult:
            roots[Fraction(0)] = zero_mult
        if current.degree < 1:
            return roots

        ints = current.primitive_integer()
        bound = math.ceil(current.root_bound()) + 1
        for q in _divisors(ints[-1]):
            for p in range(-bound * q, bound * q + 1):
                if p == 0 or math.gcd(p, q) != 1:
                    continue
                candidate = Fraction(p, q)
                if candidate in roots or current(candidate) != 0:
                    continue
                mult = current.multiplicity(candidate)
                roots[candidate] = mult
                current = current.exact_div(Poly.linear_root(candidate) ** mult)
                if current.degree < 1:
                    return roots
        return roots

    # ------------------------------------------------------------------
    # display
    # ------------------------------------------------------------------

    def coefficient_strings(self) -> List[str]:
        return [format_fraction(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = format_fraction(magnitude)
            else:
                var = "x" if power == 1 else f"x^{power}"
                if magnitude == 1:
                    body = var
                elif magnitude.denominator == 1:
                    body = f"{magnitude.numerator}{var}"
                else:
                    body = f"({format_fraction(magnitude)}){var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.constant(value)


def _divisors(value: int) -> List[int]:
    value = abs(value)
    small, large = [], []
    i = 1
    while i * i <= value:
        if value % i == 0:
            small.append(i)
            if i * i != value:
                large.append(value // i)
        i += 1
    return small + large[::-1]


# ----------------------------------------------------------------------
# gcd
# ----------------------------------------------------------------------


def _trim(values: List[int]) -> List[int]:
    while values and values[-1] == 0:
        values.pop()
    return values


def _pseudo_remainder(a: List[int], b: List[int]) -> List[int]:
    """lc(b)^(deg a - deg b + 1) * a mod b, in exact integers."""
    remainder = list(a)
    db = len(b) - 1
    lead = b[-1]
    steps = len(a) - len(b) + 1
    while remainder and len(remainder) - 1 >= db:
        top = remainder[-1]
        shift = len(remainder) - 1 - db
        remainder = [c * lead for c in remainder]
        for i, c in enumerate(b):
            remainder[i + shift] -= top * c
        _trim(remainder)
        steps -= 1
    factor = lead ** steps
    return [c * factor for c in remainder]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via the subresultant remainder sequence."""
    if a.is_zero() and b.is_zero():
        return Poly()
    if b.is_zero():
        return a.monic()
    if a.is_zero():
        return b.monic()

    A, B = a.primitive_integer(), b.primitive_integer()
    if len(B) > len(A):
        A, B = B, A
    g, h = 1, 1
    while True:
        delta = len(A) - len(B)
        R = _pseudo_remainder(A, B)
        if not R:
            return Poly(B).monic()
        if len(R) == 1:
            return Poly.constant(1)
        A = B
        divisor = g * h ** delta
        B = [c // divisor for c in R]
        g = A[-1]
        if delta:
            h = g ** delta // h ** (delta - 1)


# ----------------------------------------------------------------------
# rational functions
# ----------------------------------------------------------------------


class RatFunc:
    """Reduced quotient of polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise AlgebraException("Rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.constant(1)
            return
        common = poly_gcd(num, den)
        num, den = num.exact_div(common), den.exact_div(common)
        lead = den.leading
        self.num = num.scale(1 / lead)
        self.den = den.scale(1 / lead)

    @classmethod
    def from_poly(cls, poly: Poly) -> "RatFunc":
        return cls(poly, Poly.constant(1))

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.num.is_zero():
            raise AlgebraException("Division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def evaluate(self, x: Number) -> Optional[Fraction]:
        """Value at a rational point, or None at a pole."""
        x = to_fraction(x)
        den = self.den(x)
        if den == 0:
            return None
        return self.num(x) / den

    def __str__(self) -> str:
        if self.den == Poly.constant(1):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"


def interpolate(points: Sequence[Tuple[Number, Number]]) -> Poly:
    """The unique polynomial of degree < len(points) through the points.

    Uses Newton divided differences, then expands to monomial form.

    Raises:
        AlgebraException: If two nodes coincide.
    """
    xs = [to_fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise AlgebraException("Interpolation nodes must be distinct")
    table = [to_fraction(y) for _, y in points]
    n = len(xs)
    newton = [table[0]] if n else []
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        newton.append(table[0])

    result = Poly()
    for k in range(n - 1, -1, -1):
        result = result * Poly.linear_root(xs[k]) + Poly.constant(newton[k])
    return result
