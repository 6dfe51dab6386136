import operator
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Tuple, Union


class Letter(Enum):
    """Generators of GL2(Z) used in words."""
    A = "A"
    B = "B"
    C = "C"


@dataclass(frozen=True)
class WordTerm:
    """A single power letter^exponent."""
    letter: Letter
    exponent: int = 1

    def __post_init__(self):
        if not isinstance(self.letter, Letter):
            object.__setattr__(self, 'letter', Letter(self.letter))
        object.__setattr__(self, 'exponent', int(operator.index(self.exponent)))

    def __repr__(self) -> str:
        if self.exponent == 1:
            return self.letter.value
        return f"{self.letter.value}^{self.exponent}"


TermLike = Union[WordTerm, Tuple[Union[Letter, str], int]]


@dataclass(frozen=True)
class Word:
    """
    Ordered product of generator powers, evaluated left to right.

    The empty word is the identity.
    """
    terms: Tuple[WordTerm, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple(
            t if isinstance(t, WordTerm) else WordTerm(*t) for t in self.terms
        ))

    @classmethod
    def of(cls, *terms: TermLike) -> 'Word':
        """Word.of(('A', -3), ('B', 1)) builds A^-3 B."""
        return cls(tuple(terms))

    @classmethod
    def concat(cls, words: Iterable['Word']) -> 'Word':
        return cls(tuple(t for w in words for t in w.terms))

    def __add__(self, other: 'Word') -> 'Word':
        return Word(self.terms + other.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[WordTerm]:
        return iter(self.terms)

    @property
    def is_identity(self) -> bool:
        return not self.terms

    @property
    def letter_length(self) -> int:
        """Total number of generator letters, sum of |exponent|."""
        return sum(abs(t.exponent) for t in self.terms)

    def contains(self, letter: Letter) -> bool:
        return any(t.letter == letter for t in self.terms)

    @property
    def is_reduced(self) -> bool:
        """No zero exponents, C only to the first power, no equal adjacent letters."""
        for i, t in enumerate(self.terms):
            if t.exponent == 0:
                return False
            if t.letter == Letter.C and t.exponent != 1:
                return False
            if i and self.terms[i - 1].letter == t.letter:
                return False
        return True

    def __repr__(self) -> str:
        if not self.terms:
            return "Word(I)"
        return f"Word({' '.join(repr(t) for t in self.terms)})"
