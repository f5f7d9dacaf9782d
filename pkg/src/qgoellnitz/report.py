"""Verification reports shared by every checker."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Counterexample:
    cell: dict[str, Any]
    lhs: int
    rhs: int
    degree: int | None = None
    markers: tuple[int, ...] | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"cell": self.cell}
        if self.degree is not None:
            out["degree"] = self.degree
        if self.markers is not None:
            out["markers"] = list(self.markers)
        out["lhs"] = self.lhs
        out["rhs"] = self.rhs
        return out


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    cells_checked: int
    counterexample: Counterexample | None = None
    details: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "identity": self.identity,
            "cells_checked": self.cells_checked,
            "status": self.status,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_dict()
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def line(self) -> str:
        """One-line human summary; on failure it carries the counterexample."""
        head = f"{self.identity}: {self.status.upper()} ({self.cells_checked} cells)"
        ce = self.counterexample
        if ce is None:
            return head
        cell = ",".join(f"{k}={v}" for k, v in ce.cell.items())
        where = []
        if ce.degree is not None:
            where.append(f"q^{ce.degree}")
        if ce.markers is not None:
            where.append("markers=" + ",".join(map(str, ce.markers)))
        return f"{head} at [{cell}] {' '.join(where)}: lhs={ce.lhs} rhs={ce.rhs}"


class Checker:
    """Accumulates cell comparisons and stops at the first mismatch."""

    def __init__(self, identity: str):
        self.identity = identity
        self.cells = 0
        self.counterexample: Counterexample | None = None

    @property
    def failed(self) -> bool:
        return self.counterexample is not None

    def compare(self, cell: dict[str, Any], lhs: int, rhs: int,
                degree: int | None = None, markers=None) -> bool:
        self.cells += 1
        if lhs != rhs and self.counterexample is None:
            self.counterexample = Counterexample(
                dict(cell), lhs, rhs, degree,
                tuple(markers) if markers is not None else None,
            )
        return lhs == rhs

    def compare_sequences(self, cell: dict[str, Any], lhs, rhs,
                          markers=None) -> bool:
        """Compare two coefficient sequences degree by degree."""
        for d, (x, y) in enumerate(zip(lhs, rhs, strict=True)):
            self.cells += 1
            if x != y:
                if self.counterexample is None:
                    self.counterexample = Counterexample(
                        dict(cell), x, y, d,
                        tuple(markers) if markers is not None else None,
                    )
                return False
        return True

    def report(self, **details) -> VerificationReport:
        return VerificationReport(self.identity, self.cells, self.counterexample,
                                  details)
