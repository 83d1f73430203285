"""Verification, parameter sweeps and randomized counterexample search."""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from ..numeric_core import format_rational
from .params import ParamPoint
from .registry import REGISTRY, Identity, get_identity
from .specs import Sampler, expand_grid

PASS = "pass"
MISMATCH = "mismatch"
DOMAIN_ERROR = "domain-error"

WORKERS_ENV = "MHSUMS_WORKERS"


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    params: ParamPoint
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    equal: bool
    elapsed: float
    status: str = PASS
    in_domain: bool = True
    extras: Mapping[str, Fraction] = field(default_factory=dict)
    message: str = ""

    @property
    def counts_as_failure(self) -> bool:
        # equality outside the stated range is informative, never required
        return self.status == MISMATCH and self.in_domain

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "identity_id": self.identity_id,
            "params": self.params.to_dict(),
            "lhs": None if self.lhs is None else format_rational(self.lhs),
            "rhs": None if self.rhs is None else format_rational(self.rhs),
            "equal": self.equal,
            "status": self.status,
            "in_domain": self.in_domain,
            "extras": {k: format_rational(v) for k, v in self.extras.items()},
            "message": self.message,
            "elapsed": round(self.elapsed, 6) if timings else None,
        }


@dataclass(frozen=True)
class Counterexample:
    identity_id: str
    params: ParamPoint
    lhs: Fraction
    rhs: Fraction
    seed: int
    attempt: int


@dataclass
class Summary:
    total: int = 0
    passed: int = 0
    mismatched: int = 0
    skipped: int = 0
    out_of_domain_mismatches: int = 0

    @property
    def ok(self) -> bool:
        return self.mismatched == 0

    def __str__(self) -> str:
        text = (
            f"total={self.total} passed={self.passed} mismatched={self.mismatched} "
            f"skipped={self.skipped}"
        )
        if self.out_of_domain_mismatches:
            text += f" out_of_domain_mismatches={self.out_of_domain_mismatches}"
        return text


def verify(
    identity_id: str,
    params: ParamPoint,
    override: bool = False,
    registry: Optional[Mapping[str, Identity]] = None,
) -> IdentityReport:
    """Evaluate both sides exactly. Domain problems come back as reports, never exceptions."""
    identity = get_identity(identity_id, registry)
    start = time.perf_counter()
    try:
        violations = identity.domain(params)
        if violations and not override:
            return IdentityReport(identity_id, params, None, None, False, time.perf_counter() - start,
                                  DOMAIN_ERROR, False, message="; ".join(violations))
        ev = identity.evaluate(params)
    except (ValueError, ZeroDivisionError) as exc:
        return IdentityReport(identity_id, params, None, None, False, time.perf_counter() - start,
                              DOMAIN_ERROR, False, message=str(exc) or type(exc).__name__)
    elapsed = time.perf_counter() - start
    equal = ev.lhs == ev.rhs
    extras_ok = all(v == ev.lhs for v in ev.extras.values())
    status = PASS if equal and extras_ok else MISMATCH
    message = ""
    if equal and not extras_ok:
        bad = [k for k, v in ev.extras.items() if v != ev.lhs]
        message = f"alternative form(s) disagree: {', '.join(bad)}"
    elif violations:
        message = "evaluated outside stated domain: " + "; ".join(violations)
    return IdentityReport(identity_id, params, ev.lhs, ev.rhs, equal, elapsed, status,
                          not violations, dict(ev.extras), message)


def _verify_task(args):
    identity_id, params, override = args
    return verify(identity_id, params, override)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def sweep(
    identity_id: str,
    grid: Mapping | Sequence[ParamPoint],
    override: bool = False,
    workers: Optional[int] = None,
    registry: Optional[Mapping[str, Identity]] = None,
) -> list[IdentityReport]:
    """One report per grid point, in grid enumeration order."""
    get_identity(identity_id, registry)
    points = expand_grid(grid) if isinstance(grid, Mapping) else list(grid)
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(points) < 2 or registry is not None:
        return [verify(identity_id, pt, override, registry) for pt in points]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_task, [(identity_id, pt, override) for pt in points], chunksize=4))


def summarize(reports: Iterable[IdentityReport]) -> Summary:
    s = Summary()
    for rep in reports:
        s.total += 1
        if rep.status == PASS:
            s.passed += 1
        elif rep.status == DOMAIN_ERROR:
            s.skipped += 1
        elif rep.in_domain:
            s.mismatched += 1
        else:
            s.out_of_domain_mismatches += 1
    return s


def search_counterexample(
    identity_id: str,
    sampler: Optional[Mapping] = None,
    seed: int = 42,
    budget: int = 200,
    override: bool = False,
    registry: Optional[Mapping[str, Identity]] = None,
) -> Optional[Counterexample]:
    """Sample ``budget`` points; return the first in-domain mismatch, or None."""
    identity = get_identity(identity_id, registry)
    draw = Sampler(identity.sampler if sampler is None else sampler, seed)
    for attempt in range(budget):
        rep = verify(identity_id, draw.sample(), override, registry)
        if rep.counts_as_failure:
            return Counterexample(identity_id, rep.params, rep.lhs, rep.rhs, seed, attempt)
    return None


def sample_reports(
    identity_id: str,
    sampler: Optional[Mapping] = None,
    seed: int = 42,
    budget: int = 200,
    override: bool = False,
) -> list[IdentityReport]:
    """Every report of a randomized run, for callers that want more than the first failure."""
    identity = get_identity(identity_id)
    draw = Sampler(identity.sampler if sampler is None else sampler, seed)
    return [verify(identity_id, draw.sample(), override) for _ in range(budget)]


REPORT_COLUMNS = ("identity_id", "params", "lhs", "rhs", "equal", "status", "in_domain", "extras", "message", "elapsed")


def render_reports(reports: Sequence[IdentityReport], fmt: str = "json", timings: bool = False) -> str:
    """Serialize reports as newline-delimited JSON, CSV, or plain text."""
    rows = [r.to_dict(timings) for r in reports]
    if fmt == "json":
        return "".join(json.dumps(row, sort_keys=False) + "\n" for row in rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        for row in rows:
            flat = dict(row)
            flat["params"] = ";".join(f"{k}={v}" for k, v in row["params"].items())
            flat["extras"] = ";".join(f"{k}={v}" for k, v in row["extras"].items())
            writer.writerow(["" if flat[c] is None else flat[c] for c in REPORT_COLUMNS])
        return buf.getvalue()
    if fmt == "plain":
        lines = []
        for rep in reports:
            line = f"{rep.status:12s} {rep.identity_id} {rep.params}"
            if rep.lhs is not None:
                line += f"  lhs={format_rational(rep.lhs)}"
                if not rep.equal:
                    line += f" rhs={format_rational(rep.rhs)}"
            if rep.message:
                line += f"  ({rep.message})"
            lines.append(line)
        return "".join(line + "\n" for line in lines)
    raise ValueError(f"unknown output format {fmt!r}")


def list_identities() -> list[Identity]:
    return list(REGISTRY.values())
