"""Structured pass/fail records shared by every verification suite.

A report is a flat list of checks; serialisation follows the fixed schema
{config, suite, instances: [{id, params, pass, witness?, value?}], totals}
so runs are diffable CI artifacts.  Instances are order-normalised before
serialisation, which keeps concurrent or reordered evaluation invisible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    check_id: str
    params: dict
    ok: bool
    witness: str | None = None
    value: str | None = None

    def to_obj(self) -> dict:
        obj = {"id": self.check_id, "params": self.params, "pass": self.ok}
        if self.witness is not None:
            obj["witness"] = self.witness
        if self.value is not None:
            obj["value"] = self.value
        return obj

    def sort_key(self):
        return (self.check_id, json.dumps(self.params, sort_keys=True))


@dataclass
class Report:
    suite: str
    config: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def add(self, check_id: str, params: dict, ok: bool,
            witness: str | None = None, value: str | None = None) -> Check:
        check = Check(check_id, params, bool(ok), witness, value)
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def counts_by_id(self) -> dict:
        out: dict[str, dict] = {}
        for c in self.checks:
            slot = out.setdefault(c.check_id,
                                  {"instances": 0, "failures": 0, "vacuous": False})
            if c.value == "vacuous":
                slot["vacuous"] = True
                continue
            slot["instances"] += 1
            if not c.ok:
                slot["failures"] += 1
        return out

    def totals(self) -> dict:
        return {
            "instances": len(self.checks),
            "failures": len(self.failures),
            "by_id": self.counts_by_id(),
        }

    def to_payload(self) -> dict:
        """Deterministic JSON-compatible payload (no timestamps here)."""
        instances = [c.to_obj() for c in sorted(self.checks, key=Check.sort_key)]
        return {
            "suite": self.suite,
            "config": self.config,
            "instances": instances,
            "totals": self.totals(),
        }

    def summary_lines(self) -> list[str]:
        lines = [f"suite {self.suite}: {len(self.checks)} checks, "
                 f"{len(self.failures)} failures"]
        for check_id, slot in sorted(self.counts_by_id().items()):
            note = " (vacuous)" if slot["vacuous"] and not slot["instances"] else ""
            lines.append(f"  {check_id}: {slot['instances']} instances, "
                         f"{slot['failures']} failures{note}")
        for c in self.failures[:10]:
            lines.append(f"  FAIL {c.check_id} {c.params} witness={c.witness}")
        return lines
