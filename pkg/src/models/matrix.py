import operator
from dataclasses import dataclass
from typing import Iterator

_ENTRIES = ('a', 'b', 'c', 'd')


@dataclass(frozen=True)
class Mat2:
    """A 2x2 integer matrix (a b; c d), row-major, with exact entries."""
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        # operator.index accepts numpy integers but refuses floats
        for name in _ENTRIES:
            object.__setattr__(self, name, int(operator.index(getattr(self, name))))

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def is_unimodular(self) -> bool:
        """True when the matrix lies in GL2(Z), i.e. |det| = 1."""
        return abs(self.det) == 1

    def __matmul__(self, other: 'Mat2') -> 'Mat2':
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> 'Mat2':
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, factor: int) -> 'Mat2':
        """Return factor * self."""
        return Mat2(factor * self.a, factor * self.b, factor * self.c, factor * self.d)

    def __iter__(self) -> Iterator[int]:
        yield from (self.a, self.b, self.c, self.d)

    def __repr__(self) -> str:
        return f"Mat2([{self.a}, {self.b}; {self.c}, {self.d}])"


I = Mat2(1, 0, 0, 1)
NEG_I = Mat2(-1, 0, 0, -1)

A = Mat2(1, 1, 0, 1)
B = Mat2(1, 0, 1, 1)
C = Mat2(1, 0, 0, -1)

# The other common generating pair of SL2(Z); kept for reference only
S = Mat2(0, 1, -1, 0)  # B^-1 A B^-1
T = B
