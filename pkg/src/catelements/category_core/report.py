from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    """One failed axiom or identity instance.

    ``kind`` is a coarse bucket (``structural``, ``axiom``, ``identity``,
    ``paste`` ...), ``rule`` names the law, ``witness`` holds the IDs or
    indices needed to reproduce it.
    """

    kind: str
    rule: str
    witness: tuple = ()
    message: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "rule": self.rule,
            "witness": _jsonable(self.witness),
            "message": self.message,
        }


@dataclass
class ValidationReport:
    subject: str
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, rule: str, witness=(), message: str = "") -> None:
        self.violations.append(Violation(kind, rule, tuple(witness), message))

    def of_kind(self, kind: str) -> list[Violation]:
        return [v for v in self.violations if v.kind == kind]

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        for v in other.violations:
            rule = f"{prefix}{v.rule}" if prefix else v.rule
            self.violations.append(Violation(v.kind, rule, v.witness, v.message))
        self.checked += other.checked
        self.skipped += other.skipped

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": [v.to_dict() for v in self.violations],
        }

    def __str__(self) -> str:
        head = f"{self.subject}: {'ok' if self.ok else f'{len(self.violations)} violation(s)'}"
        lines = [head] + [f"  [{v.kind}] {v.rule} {v.witness} {v.message}".rstrip()
                          for v in self.violations[:20]]
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    if isinstance(x, (int, str, float, bool)) or x is None:
        return x
    if hasattr(x, "item"):
        return x.item()
    return str(x)
