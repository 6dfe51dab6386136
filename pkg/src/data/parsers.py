"""Parse and format the text forms of matrices, rationals, continued fractions and words."""

import re
from fractions import Fraction
from typing import List

from ..errors import (
    ContinuedFractionError,
    ContinuedFractionSyntaxError,
    MatrixSyntaxError,
    RationalSyntaxError,
    WordSyntaxError,
)
from ..models.continued_fraction import ContinuedFraction
from ..models.matrix import Mat2
from ..models.word import Letter, Word, WordTerm


_INT = r'-?[0-9]+'
_ROW_SEP = r'(?:\s*,\s*|\s+)'

MATRIX_PATTERN = re.compile(
    rf'^\s*(?P<open>[\[(])?\s*'
    rf'(?P<a>{_INT}){_ROW_SEP}(?P<b>{_INT})\s*;\s*'
    rf'(?P<c>{_INT}){_ROW_SEP}(?P<d>{_INT})'
    rf'\s*(?P<close>[\])])?\s*$'
)
RATIONAL_PATTERN = re.compile(rf'^\s*(?P<num>{_INT})\s*(?:/\s*(?P<den>{_INT}))?\s*$')
CF_PATTERN = re.compile(rf'^\s*\[\s*(?P<head>{_INT})\s*(?:;\s*(?P<tail>{_INT}(?:\s*,\s*{_INT})*)\s*)?\]\s*$')
EXPONENT_PATTERN = re.compile(_INT)

_BRACKETS = {'[': ']', '(': ')'}


def _ascii_minus(text: str) -> str:
    # Accept the typographic minus sign U+2212 as well as '-'
    return text.replace('−', '-')


def parse_matrix(text: str) -> Mat2:
    """
    Parse 'a b; c d' into a Mat2.

    Brackets '[...]' or '(...)' are optional and entries within a row may be
    separated by spaces or commas, e.g. '[-65, 17; 42, -11]'.
    """
    match = MATRIX_PATTERN.match(_ascii_minus(text))
    if not match:
        raise MatrixSyntaxError(f"expected 'a b; c d', got {text!r}", text)
    opening, closing = match.group('open'), match.group('close')
    if (opening and _BRACKETS[opening] != closing) or (closing and not opening):
        raise MatrixSyntaxError(f"unbalanced brackets in {text!r}", text)
    return Mat2(*(int(match.group(k)) for k in 'abcd'))


def format_matrix(m: Mat2) -> str:
    """Format as '[a, b; c, d]'."""
    return f"[{m.a}, {m.b}; {m.c}, {m.d}]"


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p' into a normalized Fraction."""
    match = RATIONAL_PATTERN.match(_ascii_minus(text))
    if not match:
        raise RationalSyntaxError(f"expected 'p/q', got {text!r}", text)
    den = int(match.group('den') or 1)
    if den == 0:
        raise RationalSyntaxError("zero denominator", text, text.index('/') + 1)
    return Fraction(int(match.group('num')), den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_cf(text: str) -> ContinuedFraction:
    """
    Parse '[n1; n2, ..., nj]' (or '[n1]').

    The representation is inferred from the last quotient.
    """
    match = CF_PATTERN.match(_ascii_minus(text))
    if not match:
        raise ContinuedFractionSyntaxError(f"expected '[n1; n2, ..., nj]', got {text!r}", text)
    quotients = [int(match.group('head'))]
    if match.group('tail'):
        quotients.extend(int(n) for n in match.group('tail').split(','))
    try:
        return ContinuedFraction.from_quotients(quotients)
    except ContinuedFractionError as e:
        raise ContinuedFractionSyntaxError(str(e), text) from e


def format_cf(cf: ContinuedFraction) -> str:
    """Format as '[n1; n2, ..., nj]'; a single quotient prints as '[n1]'."""
    head, *tail = cf.quotients
    if not tail:
        return f"[{head}]"
    return f"[{head}; {', '.join(str(n) for n in tail)}]"


def parse_word(text: str) -> Word:
    """
    Parse a word such as 'A^-3 B A^-4 B' or 'AB^-1A'.

    Grammar: word := 'I' | term+ ; term := letter ('^' integer)? with letter
    one of A, B, C. Whitespace between terms is optional and a blank string
    is read as the identity.

    Raises:
        WordSyntaxError: with the 0-based position of the offending character
    """
    src = _ascii_minus(text)
    if src.strip() in ('', 'I'):
        return Word()

    terms: List[WordTerm] = []
    pos = 0
    while pos < len(src):
        char = src[pos]
        if char.isspace():
            pos += 1
            continue
        if char not in 'ABC':
            raise WordSyntaxError(f"unknown letter {char!r}", text, pos)
        pos += 1
        exponent = 1
        if pos < len(src) and src[pos] == '^':
            pos += 1
            match = EXPONENT_PATTERN.match(src, pos)
            if not match:
                raise WordSyntaxError("missing exponent digits", text, pos)
            exponent = int(match.group())
            pos = match.end()
        terms.append(WordTerm(Letter(char), exponent))
    return Word(tuple(terms))


def format_word(w: Word) -> str:
    """Space-separated terms, 'X' for exponent 1 and 'X^e' otherwise; 'I' when empty."""
    if not w.terms:
        return "I"
    return " ".join(repr(t) for t in w.terms)
