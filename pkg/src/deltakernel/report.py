"""Command results as plain data, rendered as text or JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Report:
    command: str
    data: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({"command": self.command, **self.data}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Report:
        doc = json.loads(text)
        return cls(doc.pop("command"), doc)

    def to_text(self) -> str:
        lines = []
        for key, value in self.data.items():
            if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
                lines.append(f"{key}:")
                lines.extend(f"  {_fmt(v)}" for v in value)
            else:
                lines.append(f"{key}: {_fmt(value)}")
        return "\n".join(lines)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    if isinstance(value, dict):
        return " ".join(f"{k}={_fmt(v)}" for k, v in value.items())
    if value is None:
        return "-"
    return str(value)
