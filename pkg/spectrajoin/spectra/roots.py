"""
Real roots of quadratic and cubic factors.

Exact coefficients give exact roots whenever the roots are rational; the
rest fall back to floats. A pair of non-real roots is an error here: every
factor these solvers see is a factor of a symmetric matrix's charpoly.
"""

import logging
import math
from fractions import Fraction
from typing import List, Optional, Union

from ..algebra import Poly
from ..core.exceptions import AlgebraException, VerificationException

logger = logging.getLogger(__name__)

Value = Union[Fraction, float]


def is_exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def exact_sqrt(value: Fraction) -> Optional[Fraction]:
    """The rational square root of a non-negative rational, if there is one."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def solve_quadratic_real(a, b, c, tolerance: float = 1e-9) -> List[Value]:
    """Both real roots of a x^2 + b x + c, ascending.

    Raises:
        AlgebraException: If a = 0.
        VerificationException: If the discriminant is negative beyond tolerance.
    """
    if a == 0:
        raise AlgebraException("Quadratic with zero leading coefficient")
    if is_exact(a) and is_exact(b) and is_exact(c):
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        disc = b * b - 4 * a * c
        if disc < 0:
            raise VerificationException(f"Quadratic {a}x^2 + {b}x + {c} has non-real roots")
        root = exact_sqrt(disc)
        if root is not None:
            return sorted([(-b - root) / (2 * a), (-b + root) / (2 * a)])

    a, b, c = float(a), float(b), float(c)
    disc = b * b - 4 * a * c
    if disc < 0:
        if disc < -tolerance * (1.0 + b * b + abs(4 * a * c)):
            raise VerificationException(
                f"Quadratic {a}x^2 + {b}x + {c} has non-real roots (disc={disc})"
            )
        disc = 0.0
    s = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(s, b))
    if q == 0:
        return [0.0, 0.0]
    return sorted([q / a, c / q])


def solve_cubic_real(c3, c2, c1, c0, residual_tolerance: float = 1e-10) -> List[Value]:
    """All three real roots of c3 x^3 + c2 x^2 + c1 x + c0, ascending.

    A rational root is split off exactly first; otherwise the trigonometric
    form of the depressed cubic is used and each root polished by Newton steps.

    Raises:
        AlgebraException: If c3 = 0.
        VerificationException: On a non-real root pair or a root failing the
            residual check.
    """
    if c3 == 0:
        raise AlgebraException("Cubic with zero leading coefficient")

    if all(is_exact(c) for c in (c3, c2, c1, c0)):
        poly = Poly([c0, c1, c2, c3])
        rational = poly.rational_roots()
        if rational:
            root = min(rational)
            rest = poly.exact_div(Poly.linear_root(root))
            roots = [root] + solve_quadratic_real(rest.coeff(2), rest.coeff(1), rest.coeff(0))
            return sorted(roots)

    a, b, c = float(c2) / float(c3), float(c1) / float(c3), float(c0) / float(c3)
    p = b - a * a / 3.0
    q = 2.0 * a ** 3 / 27.0 - a * b / 3.0 + c
    shift = -a / 3.0
    scale = max(1.0, abs(a), abs(b), abs(c))

    if abs(p) <= 1e-14 * scale:
        if abs(q) > 1e-12 * scale:
            raise VerificationException(f"Cubic with p~0, q={q} has a non-real root pair")
        roots = [shift, shift, shift]
    else:
        if p > 0:
            raise VerificationException(f"Cubic with p={p} > 0 has a non-real root pair")
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        if abs(arg) > 1.0:
            if abs(arg) - 1.0 > 1e-9:
                raise VerificationException(
                    f"Cubic discriminant indicates a non-real root pair (arg={arg})"
                )
            arg = math.copysign(1.0, arg)
        theta = math.acos(arg) / 3.0
        roots = [shift + m * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]

    def f(x):
        return ((x + a) * x + b) * x + c

    def df(x):
        return (3.0 * x + 2.0 * a) * x + b

    polished = []
    for x in roots:
        for _ in range(2):
            slope = df(x)
            if slope == 0:
                break
            candidate = x - f(x) / slope
            if not math.isfinite(candidate) or abs(f(candidate)) >= abs(f(x)):
                break
            x = candidate
        if abs(f(x)) > residual_tolerance * scale * max(1.0, abs(x)) ** 3:
            logger.error(f"Cubic root {x} fails residual check: {f(x)}")
            raise VerificationException(f"Cubic root {x} fails the residual check")
        polished.append(x)
    return sorted(polished)
