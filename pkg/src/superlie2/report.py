"""Verification reports collected by the checkers."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Failure:
    identity: str
    where: tuple
    detail: str = ""

    def __str__(self) -> str:
        loc = ",".join(str(w) for w in self.where)
        return f"{self.identity}[{loc}]" + (f": {self.detail}" if self.detail else "")


@dataclass
class VerificationReport:
    subject: str = ""
    failures: list[Failure] = field(default_factory=list)
    checked: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, identity: str, where: tuple, detail: str = "") -> None:
        self.failures.append(Failure(identity, tuple(where), detail))

    def count(self, identity: str, n: int = 1) -> None:
        self.checked[identity] = self.checked.get(identity, 0) + n

    def identities_failed(self) -> list[str]:
        seen: list[str] = []
        for f in self.failures:
            if f.identity not in seen:
                seen.append(f.identity)
        return seen

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.failures.extend(other.failures)
        for k, v in other.checked.items():
            self.count(k, v)
        return self

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject}: pass".strip(": ")
        head = ", ".join(str(f) for f in self.failures[:5])
        more = f" (+{len(self.failures) - 5} more)" if len(self.failures) > 5 else ""
        return f"{self.subject}: FAIL {head}{more}"
