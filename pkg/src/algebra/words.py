"""Matrix evaluation and free reduction of words over {A, B, C}."""

import functools
from typing import List

from ..models.matrix import Mat2, I
from ..models.word import Letter, Word, WordTerm
from .exact import mat_pow_generator


def evaluate(w: Word) -> Mat2:
    """Left-to-right product of the word's generator powers; the empty word is I."""
    return functools.reduce(
        lambda acc, t: acc @ mat_pow_generator(t.letter, t.exponent), w.terms, I
    )


def _fold(letter: Letter, exponent: int) -> int:
    # C is an involution: only the parity of its exponent matters
    return exponent % 2 if letter == Letter.C else exponent


def reduce_word(w: Word) -> Word:
    """
    Free reduction: merge adjacent powers of the same letter, drop zero
    exponents and fold C^2 = I, until nothing changes.

    No relation of the modular group beyond C^2 = I is applied.
    """
    stack: List[WordTerm] = []
    for term in w.terms:
        exponent = _fold(term.letter, term.exponent)
        if exponent == 0:
            continue
        if stack and stack[-1].letter == term.letter:
            merged = _fold(term.letter, stack[-1].exponent + exponent)
            stack.pop()
            if merged:
                stack.append(WordTerm(term.letter, merged))
        else:
            stack.append(WordTerm(term.letter, exponent))
    return Word(tuple(stack))

