"""Exact integer, rational and 2x2 matrix arithmetic."""

from fractions import Fraction
from typing import Union

from ..errors import NotUnimodularError
from ..models.matrix import Mat2, I, C
from ..models.word import Letter

# Python ints are arbitrary precision; Fraction keeps den > 0 and gcd(num, den) = 1
Rational = Fraction


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    """Exact 2x2 product x * y."""
    return x @ y


def mat_det(x: Mat2) -> int:
    """ad - bc."""
    return x.det


def mat_inverse(x: Mat2) -> Mat2:
    """
    Inverse of a GL2(Z) matrix.

    For |det| = 1 the inverse is det * adj(x), which is again integral.

    Raises:
        NotUnimodularError: if |det(x)| != 1
    """
    det = x.det
    if abs(det) != 1:
        raise NotUnimodularError(det)
    return Mat2(x.d, -x.b, -x.c, x.a).scale(det)


def mat_pow_generator(g: Union[Letter, str], n: int) -> Mat2:
    """
    Closed form of a generator power.

    A^n = (1 n; 0 1), B^n = (1 0; n 1) for every integer n, and C is an
    involution so C^n is I or C depending on the parity of n.
    """
    g = Letter(g)
    n = int(n)
    if g == Letter.A:
        return Mat2(1, n, 0, 1)
    if g == Letter.B:
        return Mat2(1, 0, n, 1)
    return I if n % 2 == 0 else C


def sgn(n: int) -> int:
    """Sign of a nonzero integer, +1 or -1."""
    if n == 0:
        raise ValueError("sgn is only defined for nonzero integers")
    return 1 if n > 0 else -1


def normalize_rational(num: int, den: int) -> Rational:
    """
    Reduce num/den with the sign moved into the numerator.

    Raises:
        ZeroDivisionError: if den == 0
    """
    return Fraction(int(num), int(den))
