"""
JSON forms of matrices, words, continued fractions and traces.

All integers that can grow with the input are written as decimal strings so
that consumers with 64-bit number parsing lose nothing.
"""

from fractions import Fraction
from typing import List, Optional

from ..models.continued_fraction import ContinuedFraction, ConvergentTable, Representation
from ..models.matrix import Mat2
from ..models.trace import DecompositionTrace
from ..models.word import Letter, Word, WordTerm
from .parsers import format_cf, format_word


def matrix_to_dict(m: Mat2) -> dict:
    return {'a': str(m.a), 'b': str(m.b), 'c': str(m.c), 'd': str(m.d)}


def matrix_from_dict(data: dict) -> Mat2:
    return Mat2(*(int(data[k]) for k in 'abcd'))


def word_to_list(w: Word) -> List[dict]:
    return [{'letter': t.letter.value, 'exp': str(t.exponent)} for t in w.terms]


def word_from_list(data: List[dict]) -> Word:
    return Word(tuple(WordTerm(Letter(t['letter']), int(t['exp'])) for t in data))


def rational_to_dict(x: Fraction) -> dict:
    return {'num': str(x.numerator), 'den': str(x.denominator)}


def cf_to_list(cf: Optional[ContinuedFraction]) -> List[str]:
    return [str(n) for n in cf.quotients] if cf is not None else []


def convergents_to_list(table: Optional[ConvergentTable]) -> List[List[str]]:
    return [[str(p), str(q)] for p, q in table] if table is not None else []


def trace_to_dict(trace: DecompositionTrace, verified: bool) -> dict:
    """Trace JSON: input, cf, convergents, exponents, b_j, chain, word and the verification flag."""
    return {
        'input': matrix_to_dict(trace.input),
        'representation': trace.representation.value,
        'cf': cf_to_list(trace.cf),
        'cf_text': format_cf(trace.cf) if trace.cf is not None else None,
        'convergents': convergents_to_list(trace.table),
        'sign_exponent': trace.sign_exponent,
        'det_exponent': trace.det_exponent,
        'b_j': str(trace.b_j),
        'chain': [matrix_to_dict(p) for p in trace.chain],
        'word': word_to_list(trace.word),
        'word_text': format_word(trace.word),
        'verified': bool(verified),
    }


def trace_from_dict(data: dict) -> DecompositionTrace:
    """Rebuild a DecompositionTrace from trace_to_dict output."""
    representation = Representation(data.get('representation', Representation.FIRST.value))
    cf = None
    table = None
    if data['cf']:
        cf = ContinuedFraction(tuple(int(n) for n in data['cf']), representation)
        table = ConvergentTable(tuple((int(p), int(q)) for p, q in data['convergents']))
    return DecompositionTrace(
        input=matrix_from_dict(data['input']),
        representation=representation,
        word=word_from_list(data['word']),
        cf=cf,
        table=table,
        sign_exponent=int(data['sign_exponent']),
        det_exponent=int(data['det_exponent']),
        b_j=int(data['b_j']),
        chain=tuple(matrix_from_dict(p) for p in data['chain']),
    )

