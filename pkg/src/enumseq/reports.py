"""Pass/fail records shared by every verification routine."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class Counterexample:
    index: Any
    expected: Any
    actual: Any

    def to_json(self) -> dict:
        return {"actual": _jsonable(self.actual), "expected": _jsonable(self.expected),
                "index": _jsonable(self.index)}


@dataclass
class TheoremReport:
    part: str
    params: dict
    passed: bool
    counterexample: Optional[Counterexample] = None
    asserted: bool = True
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed and self.counterexample is not None:
            raise ValueError("a passing report cannot carry a counterexample")

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {
            "asserted": self.asserted,
            "counterexample": None if self.counterexample is None else self.counterexample.to_json(),
            "details": {k: _jsonable(v) for k, v in self.details.items()},
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "part": self.part,
            "pass": self.passed,
        }


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        # keep big integers exact
        return x if abs(x) < 2 ** 53 else str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


def first_failure(items, part: str, params: dict, asserted: bool = True, details=None) -> TheoremReport:
    """Build a report from (index, expected, actual) triples; fails at the first mismatch."""
    for index, expected, actual in items:
        if expected != actual:
            return TheoremReport(part, params, False, Counterexample(index, expected, actual),
                                 asserted, details or {})
    return TheoremReport(part, params, True, None, asserted, details or {})


def dumps(reports) -> str:
    return json.dumps([r.to_json() for r in reports], sort_keys=True, indent=2)
