"""
Factor a GL2(Z) matrix into a word over A = (1 1; 0 1), B = (1 0; 1 1) and C = (1 0; 0 -1).

For M = (a b; c d) with d != 0, let b/d = [n_1; ..., n_j] with convergents
p_k/q_k. Then

    M = (A B^-1 A)^s A (prod_{k=1..j} A^-(2 + (-1)^k n_k) B) (C A^2)^e A^b_j B^-1 A

with s = 1 - (-1)^floor(j/2) sgn(d), e = (1 - det M)/2 and
b_j = (-1)^j sgn(d) (p_{j-1} c - q_{j-1} a). The case d = 0 has four
closed-form words of its own.
"""

import logging
from typing import List, Tuple

from ..algebra.cfrac import convergents, expand, parity_sign, value, with_representation
from ..algebra.exact import mat_inverse, mat_pow_generator, normalize_rational, sgn
from ..algebra.words import reduce_word
from ..errors import NotUnimodularError
from ..models.continued_fraction import ContinuedFraction, ConvergentTable, Representation
from ..models.matrix import Mat2, A, B
from ..models.trace import DecompositionTrace
from ..models.word import Letter, Word, WordTerm

logger = logging.getLogger(__name__)

A_INV = mat_inverse(A)
B_INV = mat_inverse(B)

# (A B^-1 A)^2 = -I, spelled out letter by letter
_MINUS_I_HALF = ((Letter.A, 1), (Letter.B, -1), (Letter.A, 1))


def _require_unimodular(m: Mat2) -> None:
    if not m.is_unimodular:
        raise NotUnimodularError(m.det)


def _alternating(k: int) -> int:
    """(-1)^k."""
    return -1 if k % 2 else 1


def sign_exponent(j: int, d: int) -> int:
    """Exponent of the (A B^-1 A) prefix: 0 or 2."""
    return 1 - parity_sign(j) * sgn(d)


def det_exponent(m: Mat2) -> int:
    """Exponent of the (C A^2) factor: 0 for det = 1, 1 for det = -1."""
    return (1 - m.det) // 2


def alpha_gamma(k: int, table: ConvergentTable, u: int, v: int) -> Tuple[int, int]:
    """
    Coefficients alpha_k(u, v) and gamma_k(u, v).

    alpha_k = (-1)^floor(k/2) (q_k u - p_k v + (-1)^k (q_{k-1} u - p_{k-1} v))
    gamma_k = (-1)^floor(k/2) (p_k v - q_k u)

    Callers pass (u, v) = (b, d) for the first column of P_k and
    (b - a, d - c) for the second.

    Raises:
        IndexError: if k is outside 1..j
    """
    if not 1 <= k <= table.j:
        raise IndexError(f"k = {k} outside 1..{table.j}")
    p_k, q_k = table[k]
    p_prev, q_prev = table[k - 1]
    s = parity_sign(k)
    alpha = s * (q_k * u - p_k * v + _alternating(k) * (q_prev * u - p_prev * v))
    gamma = s * (p_k * v - q_k * u)
    return alpha, gamma


def p_matrix(k: int, table: ConvergentTable, m: Mat2) -> Mat2:
    """Closed form of P_k (k >= 1) built from the alpha/gamma coefficients."""
    alpha_1, gamma_1 = alpha_gamma(k, table, m.b, m.d)
    alpha_2, gamma_2 = alpha_gamma(k, table, m.b - m.a, m.d - m.c)
    return Mat2(alpha_1, alpha_2, gamma_1, gamma_2)


def p0_closed_form(m: Mat2) -> Mat2:
    """P_0 = A^-1 M A^-1 B = (b - d, b + c - (a + d); d, d - c)."""
    a, b, c, d = m
    return Mat2(b - d, b + c - (a + d), d, d - c)


def compute_bj(m: Mat2, table: ConvergentTable) -> int:
    """b_j = (-1)^j sgn(d) (p_{j-1} c - q_{j-1} a), the exponent of the A^b_j factor."""
    j = table.j
    p_prev, q_prev = table[j - 1]
    return _alternating(j) * sgn(m.d) * (p_prev * m.c - q_prev * m.a)


def final_p_matrix(m: Mat2, table: ConvergentTable) -> Mat2:
    """
    Closed form of P_j.

    P_j = (-1)^floor(j/2) sgn(d) (1, 1 - det M + b_j; 0, det M), which is
    +-A^b_j when det M = 1 and +-C A^(2 + b_j) when det M = -1.
    """
    det = m.det
    factor = parity_sign(table.j) * sgn(m.d)
    return Mat2(1, 1 - det + compute_bj(m, table), 0, det).scale(factor)


def chain(m: Mat2, cf: ContinuedFraction) -> List[Mat2]:
    """
    The matrices P_0 .. P_j.

    P_0 = A^-1 M A^-1 B and P_k = B^-1 A^(2 + (-1)^k n_k) P_{k-1}.

    Raises:
        NotUnimodularError: if |det(m)| != 1
        ValueError: if d = 0 or cf does not expand b/d
    """
    _require_unimodular(m)
    if m.d == 0:
        raise ValueError("the P-chain is only defined for d != 0")
    if value(cf) != normalize_rational(m.b, m.d):
        raise ValueError(f"{cf!r} does not expand b/d = {m.b}/{m.d}")

    p = A_INV @ m @ A_INV @ B
    matrices = [p]
    for k, n in enumerate(cf.quotients, start=1):
        p = B_INV @ mat_pow_generator(Letter.A, 2 + _alternating(k) * n) @ p
        matrices.append(p)
    return matrices


def build_word(cf: ContinuedFraction, s_exp: int, d_exp: int, b_j: int) -> Word:
    """Assemble the unreduced word for d != 0, factor by factor in printed order."""
    terms: List[Tuple[Letter, int]] = []
    terms.extend(_MINUS_I_HALF * s_exp)
    terms.append((Letter.A, 1))
    for k, n in enumerate(cf.quotients, start=1):
        terms.append((Letter.A, -(2 + _alternating(k) * n)))
        terms.append((Letter.B, 1))
    if d_exp:
        terms.extend([(Letter.C, 1), (Letter.A, 2)])
    terms.extend([(Letter.A, b_j), (Letter.B, -1), (Letter.A, 1)])
    return Word(tuple(WordTerm(letter, e) for letter, e in terms))


def decompose_d_zero(m: Mat2) -> Word:
    """
    Closed-form words for M = (a b; c 0).

    |det| = 1 forces (b, c) to be one of four sign patterns:

        (1, 1)    C B^-1 A B^(a-1)
        (-1, -1)  A B^-1 A^2 B^-1 A C B^-1 A B^(-a-1)
        (1, -1)   A^(1-a) B^-1 A
        (-1, 1)   B A^-1 B^(1-a)

    Only the first two (det = -1) contain C.
    """
    if m.d != 0:
        raise ValueError(f"expected d = 0, got d = {m.d}")
    _require_unimodular(m)
    a = m.a
    L = Letter
    cases = {
        (1, 1): [(L.C, 1), (L.B, -1), (L.A, 1), (L.B, a - 1)],
        (-1, -1): [(L.A, 1), (L.B, -1), (L.A, 2), (L.B, -1), (L.A, 1),
                   (L.C, 1), (L.B, -1), (L.A, 1), (L.B, -a - 1)],
        (1, -1): [(L.A, 1 - a), (L.B, -1), (L.A, 1)],
        (-1, 1): [(L.B, 1), (L.A, -1), (L.B, 1 - a)],
    }
    return reduce_word(Word.of(*cases[(m.b, m.c)]))


def decompose(m: Mat2, rep: Representation = Representation.FIRST) -> DecompositionTrace:
    """
    Factor m into a freely reduced word over {A, B, C} and keep every intermediate.

    Args:
        m: Matrix with |det| = 1
        rep: Which continued-fraction representation of b/d to use

    Returns:
        DecompositionTrace whose word evaluates back to m

    Raises:
        NotUnimodularError: if |det(m)| != 1
    """
    _require_unimodular(m)
    d_exp = det_exponent(m)

    if m.d == 0:
        logger.debug("d = 0 for %r, using the closed-form words", m)
        return DecompositionTrace(
            input=m,
            representation=rep,
            word=decompose_d_zero(m),
            det_exponent=d_exp,
        )

    cf = with_representation(expand(normalize_rational(m.b, m.d)), rep)
    table = convergents(cf)
    s_exp = sign_exponent(cf.j, m.d)
    b_j = compute_bj(m, table)
    logger.debug("decomposing %r with %r: j=%d s=%d e=%d b_j=%d", m, cf, cf.j, s_exp, d_exp, b_j)

    return DecompositionTrace(
        input=m,
        representation=rep,
        word=reduce_word(build_word(cf, s_exp, d_exp, b_j)),
        cf=cf,
        table=table,
        sign_exponent=s_exp,
        det_exponent=d_exp,
        b_j=b_j,
        chain=tuple(chain(m, cf)),
    )


def decompose_all(m: Mat2) -> Tuple[DecompositionTrace, DecompositionTrace]:
    """Traces for the FIRST and SECOND representations of b/d."""
    return decompose(m, Representation.FIRST), decompose(m, Representation.SECOND)
