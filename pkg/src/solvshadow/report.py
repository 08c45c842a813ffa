"""Reports: ordered check results plus derived objects, rendered as canonical
JSON or as plain text."""
import json
from dataclasses import dataclass, field
from typing import Any

from .document import canonical_json


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: Any = None

    def as_obj(self):
        out = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    command: list
    input_digest: str = ""
    checks: list = field(default_factory=list)
    objects: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    def check(self, name, passed, witness=None):
        self.checks.append(CheckResult(name, bool(passed), witness))
        return bool(passed)

    def warn(self, msg):
        self.warnings.append(msg)

    @property
    def ok(self):
        return all(c.passed for c in self.checks) and not self.errors

    def as_obj(self):
        # timing is left out on purpose: machine reports must be reproducible
        return {
            "command": self.command,
            "input_digest": self.input_digest,
            "checks": [c.as_obj() for c in self.checks],
            "objects": self.objects,
            "warnings": self.warnings,
            "errors": self.errors,
            "ok": self.ok,
        }

    def to_machine(self):
        return canonical_json(self.as_obj())

    def to_text(self, verbose=False):
        lines = [f"$ solvshadow {' '.join(self.command)}"]
        if self.input_digest:
            lines.append(f"input sha256 {self.input_digest[:16]}")
        for w in self.warnings:
            lines.append(f"WARNING: {w}")
        for e in self.errors:
            lines.append(f"ERROR: {e}")
        for c in self.checks:
            lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}")
            if verbose and c.witness is not None:
                lines.append(f"       {c.witness}")
        for key in sorted(self.objects):
            val = self.objects[key]
            if isinstance(val, dict) and not verbose:
                lines.append(f"{key}:")
                for sub in sorted(val):
                    lines.append(f"  {sub}: {_compact(val[sub])}")
            elif isinstance(val, list) and not verbose:
                lines.append(f"{key}: [{len(val)} entries]")
            else:
                lines.append(f"{key}: {_short(val, verbose)}")
        if verbose and self.timing:
            for key in sorted(self.timing):
                lines.append(f"time {key}: {self.timing[key]:.2f}s")
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines) + "\n"


def _short(val, verbose):
    if isinstance(val, (dict, list)):
        return canonical_json(val).strip() if verbose else "..."
    return str(val)


def _compact(val):
    if isinstance(val, (dict, list)):
        return json.dumps(val, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
    return str(val)
