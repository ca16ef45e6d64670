"""Result records shared by the exact verification suites."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple


class IdentityInstance(NamedTuple):
    """Both exact sides of one instance of an identity."""

    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class FirstFailure:
    index: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking an identity over an inclusive index range.

    ``failure`` is ``None`` when every index in ``range_checked`` passed
    (``AllPass``); otherwise it holds the first failing witness.
    """

    identity_name: str
    range_checked: tuple[int, int]
    failure: FirstFailure | None = None
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.failure is None

    @property
    def status(self) -> str:
        return "pass" if self.failure is None else "fail"


class IdentityViolation(AssertionError):
    """An identity that should hold exactly was found to fail."""

    def __init__(self, name: str, index: int, lhs: Fraction, rhs: Fraction):
        super().__init__(f"{name} fails at index {index}: {lhs} != {rhs}")
        self.name = name
        self.index = index
        self.lhs = lhs
        self.rhs = rhs
