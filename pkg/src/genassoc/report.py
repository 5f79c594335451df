from __future__ import annotations

from dataclasses import dataclass, field


class ConsistencyError(RuntimeError):
    """A computed object contradicts a structural theorem (a bug, not bad input)."""


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witnesses: list = field(default_factory=list)


@dataclass
class Report:
    """Named pass/fail checks; failures keep a few witnesses for diagnosis."""

    title: str
    checks: list = field(default_factory=list)

    def add(self, name, passed, detail="", witnesses=()):
        self.checks.append(Check(name, bool(passed), detail, list(witnesses)[:10]))
        return self

    def extend(self, other: "Report", prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail, c.witnesses))
        return self

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def lines(self):
        out = []
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            line = f"{tag} {self.title}: {c.name}"
            if c.detail:
                line += f" ({c.detail})"
            out.append(line)
            for w in c.witnesses if not c.passed else ():
                out.append(f"    witness: {w}")
        return out

    def __str__(self):
        return "\n".join(self.lines())
