"""Result objects returned by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class Verdict:
    """Outcome of a finite check.

    ``witness`` is the first offending object in the checker's deterministic
    order (a word, a chain description, ...) and ``value`` the scalar found
    there; both are ``None`` on PASS.
    """

    status: str
    witness: Any = None
    value: Any = None
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def __bool__(self):
        return self.passed

    @classmethod
    def ok(cls, **info) -> "Verdict":
        return cls(PASS, info=info)

    @classmethod
    def fail(cls, witness, value=None, **info) -> "Verdict":
        return cls(FAIL, witness, value, info)

    @classmethod
    def inconclusive(cls, **info) -> "Verdict":
        return cls(INCONCLUSIVE, info=info)
