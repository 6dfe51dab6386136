"""Decompose and verify many matrices in one run."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from ..errors import NotUnimodularError
from ..models.continued_fraction import Representation
from ..models.matrix import Mat2
from ..models.trace import DecompositionTrace, VerificationReport
from .decomposer import decompose
from .sampling import random_unimodular
from .verifier import verify

logger = logging.getLogger(__name__)


@dataclass
class BatchItem:
    """One input matrix with its traces and reports, one per representation."""
    index: int
    matrix: Mat2
    traces: List[DecompositionTrace] = field(default_factory=list)
    reports: List[VerificationReport] = field(default_factory=list)
    error: Optional[str] = None  # set when the matrix is not in GL2(Z)

    @property
    def passed(self) -> bool:
        return self.error is None and all(r.passed for r in self.reports)


@dataclass
class BatchResult:
    """Results of a BatchRunner run."""
    items: List[BatchItem]

    @property
    def n_failures(self) -> int:
        return sum(1 for item in self.items if item.error is None and not item.passed)

    @property
    def n_rejected(self) -> int:
        return sum(1 for item in self.items if item.error is not None)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def to_dict(self) -> dict:
        lengths = np.array(
            [t.word.letter_length for item in self.items for t in item.traces], dtype=float
        )
        return {
            'count': len(self.items),
            'failures': self.n_failures,
            'rejected': self.n_rejected,
            'max_word_length': int(lengths.max()) if lengths.size else 0,
            'mean_word_length': float(lengths.mean()) if lengths.size else 0.0,
        }


class BatchRunner:
    """Decomposes every matrix under each requested representation and verifies it."""

    def __init__(
        self,
        matrices: Sequence[Mat2],
        representations: Sequence[Representation] = (Representation.FIRST,),
    ):
        self.matrices = list(matrices)
        self.representations = list(representations)

    @classmethod
    def from_seed(
        cls,
        seed: int,
        count: int,
        length: int,
        allow_c: bool = False,
        representations: Sequence[Representation] = (Representation.FIRST,),
    ) -> 'BatchRunner':
        """Matrix i is random_unimodular(seed + i, length, allow_c)."""
        matrices = [random_unimodular(seed + i, length, allow_c) for i in range(count)]
        return cls(matrices, representations)

    def run(self) -> BatchResult:
        items = [self._run_one(i, m) for i, m in enumerate(self.matrices)]
        result = BatchResult(items)
        if not result.passed:
            logger.warning("%d of %d matrices failed verification, %d rejected",
                           result.n_failures, len(items), result.n_rejected)
        return result

    def _run_one(self, index: int, m: Mat2) -> BatchItem:
        item = BatchItem(index=index, matrix=m)
        try:
            for rep in self.representations:
                trace = decompose(m, rep)
                item.traces.append(trace)
                item.reports.append(verify(trace))
        except NotUnimodularError as e:
            item.error = str(e)
        return item
