"""Machine-readable verification reports.

Every top-level operation that verifies something returns a Report: a list
of named checks, each passing or failing with a finite witness, plus
free-form data tables.  Reports serialize to JSON for the CLI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    ok: bool
    details: dict = field(default_factory=dict)


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    elapsed_s: float = 0.0

    def add(self, name, ok, **details):
        self.checks.append(Check(name, bool(ok), details))
        return ok

    def extend(self, other):
        self.checks.extend(other.checks)
        for k, v in other.data.items():
            self.data.setdefault(k, v)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def to_dict(self):
        return {
            "command": self.command,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "ok": c.ok, "details": _plain(c.details)} for c in self.checks
            ],
            "data": _plain(self.data),
            "elapsed_s": self.elapsed_s,
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, **kw)


def _plain(obj):
    """Coerce report payloads into JSON-serializable data."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if isinstance(obj, (int, float, str, bool)) or obj is None:
        return obj
    return str(obj)
