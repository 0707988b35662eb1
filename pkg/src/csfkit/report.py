"""Verification reports shared by the replay and series checkers.

A report is a named list of rows; each row is a JSON-able dict with at least
a "status" key that is "match" or "mismatch".  A mismatch is a result, not an
exception: callers decide whether to fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field

_BULKY = ("formula", "direct", "lhs", "rhs")


@dataclass
class VerificationReport:
    name: str
    rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(row.get("status") == "match" for row in self.rows)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.name, self.rows + other.rows)

    def to_json(self) -> dict:
        out = {"identity": self.name, "status": "match" if self.ok else "mismatch"}
        if len(self.rows) == 1:
            out.update(self.rows[0])
        else:
            out["rows"] = self.rows
        return out

    def __str__(self) -> str:
        lines = [f"{self.name}: {'pass' if self.ok else 'FAIL'}"]
        for row in self.rows:
            shown = {k: v for k, v in row.items() if k not in _BULKY}
            lines.append("  " + "  ".join(f"{k}={v}" for k, v in shown.items()))
        return "\n".join(lines)
