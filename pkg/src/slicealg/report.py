"""Check reports and their JSON-lines serialization.

One Report per executed check.  Serialization keeps a fixed key order so
that report files diff cleanly; timing is omitted unless it was requested,
which keeps default runs byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "unresolved")

# severity drives the process exit code: pass = 0, anything else = 1
SEVERITY = {"pass": 0, "fail": 1, "unresolved": 1}

_KEYS = ("check", "status", "window", "details", "witnesses", "assumptions", "timing")


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class Report:
    check: str
    status: str
    window: list = None
    details: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)
    timing: float = None

    def __post_init__(self):
        # JSON-native payloads only, so that parse(serialize(r)) == r
        self.window = _jsonable(self.window)
        self.details = _jsonable(self.details)
        self.witnesses = _jsonable(self.witnesses)
        self.assumptions = _jsonable(self.assumptions)

    def validate(self):
        if self.status not in STATUSES:
            raise ValueError("unknown status %r" % (self.status,))
        for det in self.details:
            if not isinstance(det, dict):
                raise ValueError("detail entries must be objects")
        if self.status == "fail":
            bad = [
                d for d in self.details
                if "expected" in d and d.get("expected") != d.get("computed")
            ]
            if not bad:
                raise ValueError(
                    "fail status requires a detail with expected != computed"
                )

    @property
    def severity(self) -> int:
        return SEVERITY.get(self.status, 1)


def detail(degree, expected, computed, **extra) -> dict:
    out = {"degree": _jsonable(degree), "expected": expected, "computed": computed}
    out.update(_jsonable(extra))
    return out


def report_to_json(rep: Report) -> str:
    rep.validate()
    doc = {}
    for key in _KEYS:
        if key == "timing" and rep.timing is None:
            continue
        doc[key] = getattr(rep, key)
    return json.dumps(doc, separators=(",", ":"), sort_keys=False)


def report_from_json(line: str) -> Report:
    doc = json.loads(line)
    extra = set(doc) - set(_KEYS)
    if extra:
        raise ValueError("unknown report keys: %s" % sorted(extra))
    if "check" not in doc or "status" not in doc:
        raise ValueError("report needs check and status")
    rep = Report(**doc)
    rep.validate()
    return rep


def write_reports(reports, stream) -> None:
    """Serialize reports one per line; writing is a single serialized pass."""
    for rep in reports:
        stream.write(report_to_json(rep))
        stream.write("\n")
