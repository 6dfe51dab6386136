from .decomposer import (
    alpha_gamma,
    chain,
    compute_bj,
    decompose,
    decompose_all,
    decompose_d_zero,
)
from .verifier import verify
from .sampling import random_unimodular
from .batch import BatchRunner, BatchResult, BatchItem

__all__ = [
    'alpha_gamma',
    'chain',
    'compute_bj',
    'decompose',
    'decompose_all',
    'decompose_d_zero',
    'verify',
    'random_unimodular',
    'BatchRunner',
    'BatchResult',
    'BatchItem',
]
