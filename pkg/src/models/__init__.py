from .matrix import Mat2, I, NEG_I, A, B, C, S, T
from .continued_fraction import ContinuedFraction, ConvergentTable, Representation
from .word import Letter, WordTerm, Word
from .trace import DecompositionTrace, CheckResult, VerificationReport

__all__ = [
    'Mat2', 'I', 'NEG_I', 'A', 'B', 'C', 'S', 'T',
    'ContinuedFraction', 'ConvergentTable', 'Representation',
    'Letter', 'WordTerm', 'Word',
    'DecompositionTrace', 'CheckResult', 'VerificationReport',
]
