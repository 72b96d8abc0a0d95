"""Configuration, witness persistence, and table emitters.

Witnesses live in an append-only JSON-lines file.  Every record carries an id
computed from the canonical JSON of its replayable fields (check, gens,
verdict, data); timestamps are excluded from the id, so `nslab replay`
can recompute a record from its generators and diff every field.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field

from . import lab
from .core import from_generators
from .errors import InvalidInput
from .lab import CheckReport
from .resolution import BettiTable

__all__ = [
    "Config",
    "canonical_json",
    "report_id",
    "WitnessStore",
    "replay_record",
    "betti_csv",
]


@dataclass
class Config:
    characteristics: tuple[int, ...] = (0, 2)
    factorization_cap: int = 10**6
    rf_pair_cap: int = 10**6
    b1g_degree_cap: int | None = None
    face_cap: int = 1 << 21
    jobs: int = 1
    out: str | None = None
    timestamps: bool = True

    def validate(self):
        for c in self.characteristics:
            if c != 0 and (c < 2 or any(c % q == 0 for q in range(2, int(c**0.5) + 1))):
                raise InvalidInput(f"characteristic must be 0 or prime: {c}")
        for name in ("factorization_cap", "rf_pair_cap", "face_cap"):
            if getattr(self, name) <= 0:
                raise InvalidInput(f"{name} must be positive")
        if self.jobs < 1:
            raise InvalidInput("jobs must be >= 1")
        return self


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def report_id(rec: dict) -> str:
    core = {k: rec[k] for k in ("check", "gens", "verdict", "data")}
    return hashlib.sha256(canonical_json(core).encode()).hexdigest()[:16]


class WitnessStore:
    """Append-only JSON-lines store of check reports."""

    def __init__(self, path: str):
        self.path = path

    def append(self, report: CheckReport, timestamp: bool = True) -> str:
        rec = report.to_json_dict()
        rec["id"] = report_id(rec)
        if timestamp:
            rec["ts"] = time.time()
        with open(self.path, "a") as fh:
            fh.write(canonical_json(rec) + "\n")
        return rec["id"]

    def records(self):
        try:
            with open(self.path) as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        yield json.loads(line)
        except FileNotFoundError:
            return

    def find(self, wid: str) -> dict | None:
        for rec in self.records():
            if rec.get("id") == wid:
                return rec
        return None


def _recompute(rec: dict) -> CheckReport:
    check = rec["check"]
    if check.startswith("search-"):
        params = rec["data"]["params"]
        return lab.search_supremum(check.split("-", 1)[1], **params)
    fn = lab.CHECKS.get(check)
    if fn is None:
        raise InvalidInput(f"cannot replay unknown check {check!r}")
    fresh = fn(from_generators(rec["gens"]))
    if fresh is None:
        raise InvalidInput(f"check {check!r} is not applicable to {rec['gens']}")
    return fresh


def replay_record(rec: dict) -> tuple[bool, dict]:
    """Recompute a stored record from its generators; return (match, diffs)."""
    fresh = _recompute(rec).to_json_dict()
    fresh["id"] = report_id(fresh)
    diffs = {}
    for key in ("check", "gens", "verdict", "data", "id"):
        if rec.get(key) != fresh.get(key):
            diffs[key] = {"stored": rec.get(key), "recomputed": fresh.get(key)}
    return not diffs, diffs


def betti_csv(table: BettiTable) -> str:
    """CSV emitter: one line per nonzero graded entry plus a totals line."""
    lines = ["char,i,j,b"]
    for (i, j), b in sorted(table.entries.items()):
        lines.append(f"{table.characteristic},{i},{j},{b}")
    totals = ",".join(str(t) for t in table.totals())
    lines.append(f"# totals,{totals}")
    return "\n".join(lines) + "\n"
