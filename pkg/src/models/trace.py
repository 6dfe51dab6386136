from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .matrix import Mat2
from .continued_fraction import ContinuedFraction, ConvergentTable, Representation
from .word import Word


@dataclass(frozen=True)
class DecompositionTrace:
    """Every intermediate quantity of one factorization of a GL2(Z) matrix."""
    input: Mat2
    representation: Representation
    word: Word
    cf: Optional[ContinuedFraction] = None  # None on the d = 0 path
    table: Optional[ConvergentTable] = None
    sign_exponent: int = 0  # 0 or 2, exponent of (A B^-1 A)
    det_exponent: int = 0  # 0 or 1, exponent of (C A^2)
    b_j: int = 0
    chain: Tuple[Mat2, ...] = ()  # P_0 .. P_j

    @property
    def is_d_zero(self) -> bool:
        return self.cf is None

    @property
    def j(self) -> int:
        return self.cf.j if self.cf is not None else 0


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check."""
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    """Pass/fail per check for a DecompositionTrace."""
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, bool(passed), detail))

    def __getitem__(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            'passed': self.passed,
            'checks': [
                {'name': c.name, 'passed': c.passed, 'detail': c.detail}
                for c in self.checks
            ],
        }
