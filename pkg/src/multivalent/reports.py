"""Verification reports and deterministic JSON output."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np


@dataclass
class VerificationReport:
    """Outcome of one identity, implication or constant check."""

    id: str
    kind: str
    passed: bool
    max_error: float | None = None
    violations: list = field(default_factory=list)
    samples_tested: int = 0
    hypothesis_hold_count: int | None = None
    config_echo: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "pass": bool(self.passed),
            "max_error": self.max_error,
            "violations": self.violations,
            "samples_tested": self.samples_tested,
            "hypothesis_hold_count": self.hypothesis_hold_count,
            "config_echo": self.config_echo,
            "details": self.details,
        }

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        err = "" if self.max_error is None else f" max_error={self.max_error:.3e}"
        return f"[{status}] {self.id} ({self.kind}){err} samples={self.samples_tested}"


def jsonable(obj: Any, digits: int | None = None) -> Any:
    """Convert numpy scalars, complex numbers and non-finite floats for JSON.

    ``digits`` rounds floats to that many significant digits (``--pretty``);
    the default keeps the shortest round-trip representation.
    """
    if isinstance(obj, VerificationReport):
        return jsonable(obj.to_json(), digits)
    if isinstance(obj, dict):
        return {str(k): jsonable(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v, digits) for v in obj]
    if isinstance(obj, np.ndarray):
        return [jsonable(v, digits) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [jsonable(float(obj.real), digits), jsonable(float(obj.imag), digits)]
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")
        if digits is not None and x != 0:
            x = float(f"{x:.{digits}g}")
        return x
    return obj


def dumps(obj: Any, pretty: bool = False) -> str:
    return json.dumps(jsonable(obj, 6 if pretty else None), sort_keys=True, indent=2)
