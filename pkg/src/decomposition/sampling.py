"""Seeded pseudo-random unimodular matrices for property tests and fuzzing."""

from typing import List

import numpy as np

from ..algebra.exact import mat_inverse
from ..models.matrix import Mat2, I, A, B, C


SL2_FACTORS = (A, mat_inverse(A), B, mat_inverse(B))
GL2_FACTORS = SL2_FACTORS + (C,)


def random_unimodular(seed: int, length: int, allow_c: bool = False) -> Mat2:
    """
    Product of `length` factors drawn from {A, A^-1, B, B^-1} (plus C when allow_c).

    The same seed and length always give the same matrix. Without C the
    result is in SL2(Z).

    Args:
        seed: Seed for numpy's default generator
        length: Number of factors (0 gives I)
        allow_c: Also draw C, so det may be -1

    Returns:
        Mat2 with |det| = 1
    """
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    factors = GL2_FACTORS if allow_c else SL2_FACTORS
    rng = np.random.default_rng(seed)
    m = I
    for idx in rng.integers(0, len(factors), size=length):
        m = m @ factors[int(idx)]
    return m


def random_corpus(seed: int, count: int, max_length: int, allow_c: bool = False) -> List[Mat2]:
    """
    `count` matrices with lengths drawn uniformly from 0..max_length.

    Matrix i uses seed + i for its own factors, so the corpus is stable when
    count grows.
    """
    rng = np.random.default_rng(seed)
    lengths = rng.integers(0, max_length + 1, size=count)
    return [random_unimodular(seed + i, int(n), allow_c) for i, n in enumerate(lengths)]


def random_rationals(rng: np.random.Generator, count: int, bound: int) -> List[tuple]:
    """(num, den) pairs with |num| <= bound and 1 <= den <= bound, as Python ints."""
    nums = rng.integers(-bound, bound + 1, size=count)
    dens = rng.integers(1, bound + 1, size=count)
    return [(int(n), int(d)) for n, d in zip(nums, dens)]
