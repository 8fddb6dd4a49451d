"""Machine-checkable exactness certificates and their JSON form.

A certificate records, for one (m, n, field) cell, the dimension data
and the named sub-checks of a sequence verification.  Aggregation is
fail-closed: a certificate passes only when it has at least one check,
no error, and every check passed.  JSON output is canonical (sorted
keys, fixed separators) so that identical runs are byte-identical once
timing fields are excluded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class Certificate:
    sequence: str
    m: int
    n: int
    field_name: str
    dims: dict
    checks: tuple[CheckResult, ...]
    error: str | None = None
    elapsed_ms: float | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def capped(self) -> bool:
        return self.error is not None and self.error.startswith("size_cap")

    def to_json_dict(self, include_timing: bool = True) -> dict:
        doc = {
            "sequence": self.sequence,
            "m": self.m,
            "n": self.n,
            "field": self.field_name,
            "dims": dict(sorted(self.dims.items())),
            "checks": [
                {"name": c.name, "pass": c.passed, "detail": c.detail}
                for c in self.checks
            ],
            "pass": self.passed,
        }
        if self.error is not None:
            doc["error"] = self.error
        if include_timing and self.elapsed_ms is not None:
            doc["elapsed_ms"] = self.elapsed_ms
        return doc

    def summary(self) -> str:
        status = "PASS" if self.passed else ("CAP" if self.capped else "FAIL")
        return f"[{status}] {self.sequence} m={self.m} n={self.n} field={self.field_name}"


def certificates_to_json(certs: Iterable[Certificate], include_timing: bool = True,
                         pretty: bool = False) -> str:
    docs = [c.to_json_dict(include_timing) for c in certs]
    if pretty:
        return json.dumps(docs, sort_keys=True, indent=2) + "\n"
    return json.dumps(docs, sort_keys=True, separators=(",", ":")) + "\n"
