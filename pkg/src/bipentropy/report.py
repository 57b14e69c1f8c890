from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of an exhaustive check: instances examined and any violations."""

    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.violations)} violations)"
        return f"{self.name}: {status}, {self.checked} instances checked"
