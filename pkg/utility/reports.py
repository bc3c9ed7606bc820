import json
import math
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from sphere3c import __version__
from utility.logger import get_logger


def to_jsonable(value):
    """Plain JSON types for numpy scalars, complex numbers and tuples."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        value = complex(value)
        if value.imag == 0:
            return to_jsonable(value.real)
        return [to_jsonable(value.real), to_jsonable(value.imag)]
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value) or math.isinf(value):
            return str(value)
        return value
    return value


@dataclass
class VerificationReport:
    """
    One pass/fail record.

    ``passed`` defaults to (max_abs_err <= tol or max_rel_err <= tol). Checks with
    a different gate (e.g. an order that must fail) set it explicitly.
    """

    check: str
    system: object = None
    params: dict = field(default_factory=dict)
    n_points: int = 0
    seed: object = None
    max_abs_err: float = 0.0
    max_rel_err: float = 0.0
    tol: float = 0.0
    passed: bool = None
    notes: list = field(default_factory=list)
    tool_version: str = __version__

    def __post_init__(self):
        self.max_abs_err = float(self.max_abs_err)
        self.max_rel_err = float(self.max_rel_err)
        if self.passed is None:
            self.passed = self.max_abs_err <= self.tol or self.max_rel_err <= self.tol
        self.passed = bool(self.passed)

    @classmethod
    def failed(cls, check, system, error, **kwargs):
        """Report for a check that raised before producing numbers."""
        notes = list(kwargs.pop("notes", [])) + [f"{type(error).__name__}: {error}"]
        return cls(check=check, system=system, max_abs_err=math.inf, max_rel_err=math.inf,
                   passed=False, notes=notes, **kwargs)

    def to_dict(self):
        return to_jsonable({
            "tool_version": self.tool_version,
            "system": self.system,
            "check": self.check,
            "params": self.params,
            "n_points": self.n_points,
            "seed": self.seed,
            "max_abs_err": self.max_abs_err,
            "max_rel_err": self.max_rel_err,
            "tol": self.tol,
            "pass": self.passed,
            "notes": self.notes,
        })


def _sort_key(report):
    system = report.system
    # numbered systems first, then named blocks, then system-less checks
    return (system is None, isinstance(system, str), system if isinstance(system, int) else 0, str(system),
            report.check, json.dumps(to_jsonable(report.params), sort_keys=True))


def write_reports(reports, path):
    """Write reports as a sorted JSON array; identical inputs give identical bytes."""
    ordered = [r.to_dict() for r in sorted(reports, key=_sort_key)]
    text = json.dumps(ordered, sort_keys=True, indent=2)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text + "\n")
    get_logger().debug(f"Wrote {len(ordered)} reports to {path}")
    return path


def write_table(rows, path, columns=None):
    """Write a list of row dicts as CSV with pandas."""
    frame = pd.DataFrame(rows, columns=columns)
    frame.to_csv(path, index=False, float_format="%.17g")
    get_logger().debug(f"Wrote {len(frame)} rows to {path}")
    return frame


def summarize(reports):
    """Counts for the statistics table."""
    passed = sum(1 for r in reports if r.passed)
    return {
        "Checks": len(reports),
        "Passed": passed,
        "Failed": len(reports) - passed,
        "Worst abs error": f"{max((r.max_abs_err for r in reports), default=0.0):.3e}",
    }
