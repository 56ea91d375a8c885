"""Failure records and check reports shared by the brute-force verifiers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    check: str
    params: dict
    witness: dict

    def to_dict(self) -> dict:
        return {"check": self.check, "params": self.params, "witness": self.witness}


@dataclass(frozen=True)
class CheckReport:
    label: str
    checked: int
    failures: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failed_checks(self) -> set:
        return {f.check for f in self.failures}

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "checked": self.checked,
            "ok": self.ok,
            "failures": [f.to_dict() for f in self.failures],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        if self.ok:
            return f"{self.label}: {self.checked} checks, all passed"
        lines = [f"{self.label}: {len(self.failures)} of {self.checked} checks failed"]
        lines += [f"  {f.check} {f.params} witness={f.witness}" for f in self.failures[:10]]
        if len(self.failures) > 10:
            lines.append(f"  ... and {len(self.failures) - 10} more")
        return "\n".join(lines)
