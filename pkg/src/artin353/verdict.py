"""Three-valued answers for checks run on finite windows of infinite objects."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

TRUE = "true"
FALSE = "false"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: Any = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.status == TRUE

    @property
    def failed(self) -> bool:
        return self.status == FALSE

    @property
    def indeterminate(self) -> bool:
        return self.status == INDETERMINATE

    @classmethod
    def holds(cls, note: str = "") -> "Verdict":
        return cls(TRUE, None, note)

    @classmethod
    def fails(cls, witness, note: str = "") -> "Verdict":
        return cls(FALSE, witness, note)

    @classmethod
    def unknown(cls, witness=None, note: str = "") -> "Verdict":
        return cls(INDETERMINATE, witness, note)

    def exit_code(self) -> int:
        return {TRUE: 0, FALSE: 1, INDETERMINATE: 2}[self.status]


def combine(verdicts) -> Verdict:
    """First failure wins, then first indeterminate; otherwise true."""
    verdicts = list(verdicts)
    for v in verdicts:
        if v.failed:
            return v
    for v in verdicts:
        if v.indeterminate:
            return v
    return Verdict.holds()
