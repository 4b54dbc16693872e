"""Self-describing JSON report documents.

Every document carries ``schema_version``, the echoed ``command`` parameters,
a ``kind`` tag and the ``payload``. Serialization is deterministic (sorted
keys, fixed indentation), so parse -> serialize reproduces the text exactly.
Shape payloads are re-validated against sum(e*f*count) == degree on the way
in and on the way out.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .decomp import DecompShape
from .errors import ValidationError

SCHEMA_VERSION = "1"

KINDS = ("irregularity", "decomposition", "primarity", "jacobi", "verification")


@dataclass(frozen=True)
class ReportDocument:
    kind: str
    command: dict[str, Any]
    payload: Any
    schema_version: str = field(default=SCHEMA_VERSION)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValidationError(f"unknown report kind {self.kind!r}")
        if self.kind == "decomposition":
            for shape in _shape_dicts(self.payload):
                DecompShape.from_dict(shape)

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "command": self.command,
            "payload": self.payload,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def loads(cls, text: str) -> ReportDocument:
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"report is not valid JSON: {exc}") from None
        if not isinstance(d, dict) or "schema_version" not in d:
            raise ValidationError("report lacks schema_version")
        if d["schema_version"] != SCHEMA_VERSION:
            raise ValidationError(f"unsupported schema_version {d['schema_version']!r}")
        return cls(kind=d["kind"], command=d["command"], payload=d["payload"], schema_version=d["schema_version"])


def _shape_dicts(payload: Any) -> list[dict]:
    if isinstance(payload, dict) and "shapes" in payload:
        return list(payload["shapes"])
    return [payload]


def shape_document(command: dict, shape: DecompShape) -> ReportDocument:
    return ReportDocument("decomposition", command, shape.to_dict())
