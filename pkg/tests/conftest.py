"""Pytest fixtures for decomposition tests."""

import pytest
import numpy as np

from src.models.continued_fraction import ContinuedFraction, Representation
from src.models.matrix import Mat2
from src.decomposition.sampling import random_corpus


CORPUS_SEED = 20240611


@pytest.fixture
def rng():
    """Seeded generator for reproducible random inputs."""
    return np.random.default_rng(42)


@pytest.fixture
def worked_matrix():
    """The (-65 17; 42 -11) example, det = 1, b/d = -17/11."""
    return Mat2(-65, 17, 42, -11)


@pytest.fixture
def worked_cf_first():
    """First representation of -17/11."""
    return ContinuedFraction((-2, 2, 5), Representation.FIRST)


@pytest.fixture
def worked_cf_second():
    """Second representation of -17/11."""
    return ContinuedFraction((-2, 2, 4, 1), Representation.SECOND)


@pytest.fixture(scope="session")
def unimodular_corpus():
    """2,000 random GL2(Z) matrices: half from A, B only, half with C allowed."""
    sl2 = random_corpus(CORPUS_SEED, 1000, max_length=30, allow_c=False)
    gl2 = random_corpus(CORPUS_SEED + 10**6, 1000, max_length=30, allow_c=True)
    return sl2 + gl2
