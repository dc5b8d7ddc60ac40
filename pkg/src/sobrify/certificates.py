"""Structured records of machine checks and their text serialization."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    bound: str
    result: bool
    detail: str = ""


@dataclass
class Certificate:
    """A claim together with the finite checks that support it.

    ``paper_ref`` holds a short plain-language name of the result being
    certified (the key name is part of the serialized schema).
    """

    claim: str
    paper_ref: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, bound, result: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, str(bound), bool(result), detail))
        return bool(result)

    @property
    def passed(self) -> bool:
        return all(c.result for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.result]

    def to_text(self, indent: int = 0) -> str:
        pad = " " * indent
        lines = [f"{pad}claim: {self.claim}", f"{pad}paper_ref: {self.paper_ref}", f"{pad}checks:"]
        for c in self.checks:
            lines.append(f"{pad}  - name: {c.name}")
            lines.append(f"{pad}    bound: {c.bound}")
            lines.append(f"{pad}    result: {'pass' if c.result else 'fail'}")
            if c.detail:
                lines.append(f"{pad}    detail: {c.detail}")
        return "\n".join(lines)


@dataclass
class Report:
    suite: str
    window: str = ""
    seed: int | None = None
    certificates: list[Certificate] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.certificates)

    def counts(self) -> tuple[int, int]:
        checks = [c for cert in self.certificates for c in cert.checks]
        ok = sum(c.result for c in checks)
        return ok, len(checks) - ok

    def to_text(self) -> str:
        ok, bad = self.counts()
        head = [f"suite: {self.suite}"]
        if self.window:
            head.append(f"window: {self.window}")
        if self.seed is not None:
            head.append(f"seed: {self.seed}")
        body = [cert.to_text(indent=2) for cert in self.certificates]
        tail = [f"summary: {ok} passed, {bad} failed", f"status: {'PASS' if self.passed else 'FAIL'}"]
        return "\n".join(head + ["certificates:"] + body + tail) + "\n"
