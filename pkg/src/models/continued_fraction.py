from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Sequence, Tuple

from ..errors import ContinuedFractionError


class Representation(Enum):
    """Which of the two expansions of a rational a quotient list is."""
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class ContinuedFraction:
    """
    Simple finite continued fraction [n_1; n_2, ..., n_j].

    n_1 is any integer and n_i >= 1 for i >= 2. The FIRST representation
    ends in a quotient >= 2 (or has a single quotient); the SECOND ends in 1.
    """
    quotients: Tuple[int, ...]
    representation: Representation = Representation.FIRST

    def __post_init__(self):
        object.__setattr__(self, 'quotients', tuple(int(n) for n in self.quotients))
        qs = self.quotients
        if not qs:
            raise ContinuedFractionError("a continued fraction needs at least one quotient")
        for i, n in enumerate(qs[1:], start=2):
            if n < 1:
                raise ContinuedFractionError(f"quotient n_{i} = {n} must be >= 1")
        if self.representation == Representation.FIRST:
            if len(qs) > 1 and qs[-1] < 2:
                raise ContinuedFractionError(
                    f"first representation must end in a quotient >= 2, got {qs[-1]}"
                )
        elif len(qs) < 2 or qs[-1] != 1:
            raise ContinuedFractionError(
                "second representation needs at least two quotients and must end in 1"
            )

    @classmethod
    def from_quotients(cls, quotients: Sequence[int]) -> 'ContinuedFraction':
        """Build a continued fraction, inferring its representation from the last quotient."""
        qs = tuple(quotients)
        if len(qs) >= 2 and qs[-1] == 1:
            return cls(qs, Representation.SECOND)
        return cls(qs, Representation.FIRST)

    @property
    def j(self) -> int:
        """Number of quotients."""
        return len(self.quotients)

    def __iter__(self) -> Iterator[int]:
        return iter(self.quotients)

    def __len__(self) -> int:
        return len(self.quotients)

    def __getitem__(self, k: int) -> int:
        """1-based access: cf[1] is n_1."""
        if not 1 <= k <= self.j:
            raise IndexError(f"quotient index {k} outside 1..{self.j}")
        return self.quotients[k - 1]

    def __repr__(self) -> str:
        head, *tail = self.quotients
        body = f"{head}; " + ", ".join(str(n) for n in tail) if tail else f"{head}"
        return f"ContinuedFraction([{body}], {self.representation.value})"


@dataclass(frozen=True)
class ConvergentTable:
    """Convergent pairs (p_k, q_k) for k = 0..j, with (p_0, q_0) = (1, 0)."""
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, 'pairs', tuple((int(p), int(q)) for p, q in self.pairs))
        if not self.pairs or self.pairs[0] != (1, 0):
            raise ContinuedFractionError("convergent table must start with (p_0, q_0) = (1, 0)")

    @property
    def j(self) -> int:
        return len(self.pairs) - 1

    @property
    def p(self) -> List[int]:
        return [p for p, _ in self.pairs]

    @property
    def q(self) -> List[int]:
        return [q for _, q in self.pairs]

    @property
    def final(self) -> Tuple[int, int]:
        """(p_j, q_j)."""
        return self.pairs[-1]

    def __getitem__(self, k: int) -> Tuple[int, int]:
        if not 0 <= k <= self.j:
            raise IndexError(f"convergent index {k} outside 0..{self.j}")
        return self.pairs[k]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.pairs)
