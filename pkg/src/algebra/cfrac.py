"""Simple finite continued fractions of rationals."""

from fractions import Fraction
from typing import List, Tuple

from ..models.continued_fraction import ContinuedFraction, ConvergentTable, Representation


def expand(x: Fraction) -> ContinuedFraction:
    """
    Expand a rational into its FIRST representation [n_1; n_2, ..., n_j].

    Quotients are taken with floor division, so -17/11 gives n_1 = -2 and
    every later quotient is >= 1. The final quotient of a multi-term
    expansion is always >= 2.

    Args:
        x: The rational to expand (any value Fraction accepts)

    Returns:
        ContinuedFraction in the FIRST representation
    """
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    quotients: List[int] = []
    while den:
        n = num // den
        quotients.append(n)
        num, den = den, num - n * den
    return ContinuedFraction(tuple(quotients), Representation.FIRST)


def alternate(cf: ContinuedFraction) -> ContinuedFraction:
    """
    Switch between the two representations of the same rational.

    [.., n_j] -> [.., n_j - 1, 1] for the FIRST representation (so [n] -> [n - 1; 1]),
    and the trailing 1 is folded back into the previous quotient for the SECOND.
    """
    qs = cf.quotients
    if cf.representation == Representation.FIRST:
        return ContinuedFraction(qs[:-1] + (qs[-1] - 1, 1), Representation.SECOND)
    return ContinuedFraction(qs[:-2] + (qs[-2] + 1,), Representation.FIRST)


def with_representation(cf: ContinuedFraction, rep: Representation) -> ContinuedFraction:
    """Return cf in the requested representation."""
    return cf if cf.representation == rep else alternate(cf)


def convergents(cf: ContinuedFraction) -> ConvergentTable:
    """
    Convergent table (p_k, q_k), k = 0..j.

    Starts from the sentinel (p_0, q_0) = (1, 0) and (p_1, q_1) = (n_1, 1), then
    p_k = n_k p_{k-1} + p_{k-2} and q_k = n_k q_{k-1} + q_{k-2}.
    """
    pairs: List[Tuple[int, int]] = [(1, 0), (cf.quotients[0], 1)]
    for n in cf.quotients[1:]:
        (p2, q2), (p1, q1) = pairs[-2], pairs[-1]
        pairs.append((n * p1 + p2, n * q1 + q2))
    return ConvergentTable(tuple(pairs))


def value(cf: ContinuedFraction) -> Fraction:
    """Exact value p_j / q_j of the continued fraction."""
    p, q = convergents(cf).final
    return Fraction(p, q)


def parity_sign(k: int) -> int:
    """
    (-1)^floor(k/2): +1 when k = 0 or 1 (mod 4), -1 when k = 2 or 3 (mod 4).

    Raises:
        ValueError: if k < 0
    """
    if k < 0:
        raise ValueError(f"parity_sign is defined for k >= 0, got {k}")
    return 1 if k % 4 in (0, 1) else -1
