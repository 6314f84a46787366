"""Replayable JSON certificates.

Keys are emitted in a fixed order and every integer is written as a decimal
string, so two runs with the same inputs and seed produce byte-identical
output apart from ``wall_time_ms``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .bounds import BoundReport
from .contact import ContactReport
from .multiindex import Format
from .terracini import SecantVerdict

VERSION = "1"


def _ints(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_ints(v) for v in x]
    if isinstance(x, dict):
        return {k: _ints(v) for k, v in x.items()}
    if isinstance(x, BoundReport):
        return x.to_json()
    return x


@dataclass
class Certificate:
    command: str
    fmt: Format
    verdict: str
    seed: int = 0
    h: Optional[int] = None
    s: Optional[int] = None
    sampled_points: list = field(default_factory=list)
    ranks: list = field(default_factory=list)
    kernel_dims: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    wall_time_ms: int = 0

    def to_dict(self, with_time: bool = True) -> dict[str, Any]:
        out = {
            "version": VERSION,
            "command": self.command,
            "format": {"n": _ints(list(self.fmt.n)), "d": _ints(list(self.fmt.d))},
            "h": _ints(self.h),
            "s": _ints(self.s),
            "seed": _ints(self.seed),
            "params": _ints(self.params),
            "sampled_points": self.sampled_points,
            "ranks": _ints(self.ranks),
            "kernel_dims": _ints(self.kernel_dims),
            "verdict": self.verdict,
            "details": _ints(self.details),
        }
        if with_time:
            out["wall_time_ms"] = str(self.wall_time_ms)
        return out

    def to_json(self, with_time: bool = True) -> str:
        return json.dumps(self.to_dict(with_time), indent=2) + "\n"


def secant_certificate(fmt: Format, h: int, seed: int, verdict: SecantVerdict,
                       params: dict) -> Certificate:
    return Certificate(
        command="secant",
        fmt=fmt,
        verdict=verdict.status,
        seed=seed,
        h=h,
        sampled_points=[c.to_json() for c in verdict.configs],
        ranks=verdict.ranks,
        details={
            "expected": verdict.expected,
            "computed_lower_bound": verdict.computed_lower_bound,
            "defect": verdict.defect,
            "attempts": verdict.attempts,
        },
        params=params,
    )


def contact_certificate(fmt: Format, h: Optional[int], seed: int, report: ContactReport,
                        params: dict) -> Certificate:
    details = {
        "attempts": report.attempts,
        "span_dims": [a.span_dim for a in report.history],
        "n_forms": [a.n_forms for a in report.history],
        "hessian_kernel_dims": [[c.hessian_kernel for c in a.local] for a in report.history],
        "isolation_orders": [[c.order for c in a.local] for a in report.history],
        "multiplicities": [[c.multiplicity for c in a.local] for a in report.history],
    }
    if report.kind == "osc":
        details["certified_h"] = report.certified_h
    return Certificate(
        command=f"contact {report.kind}",
        fmt=fmt,
        verdict=report.status,
        seed=seed,
        h=h,
        s=report.s,
        sampled_points=[a.config.to_json() for a in report.history],
        ranks=[a.span_dim + 1 for a in report.history],
        kernel_dims=[a.kernel_dims for a in report.history],
        details=details,
        params=params,
    )


def bounds_certificate(fmt: Format, reports: dict) -> Certificate:
    return Certificate(command="bounds", fmt=fmt, verdict="Reported", details=reports)
