"""Grid runner: three-way checks over identities x (n, ell, m) x sample points."""

from __future__ import annotations

import csv
import io
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import registry
from .qalg import ParamPoint
from .registry import IdentitySpec, SearPoint
from .sampler import Draw, SampleConfig, SamplingExhausted, draw_evaluated, trial
from .scalar import ConstraintError, PoleError, fmt, preview

PASS = "PASS"
FAIL = "FAIL"
SKIP_CONSTRAINT = "SKIP_CONSTRAINT"
SKIP_POLE = "SKIP_POLE"
DISCREPANT = "DISCREPANT"
STATUSES = (PASS, FAIL, SKIP_CONSTRAINT, SKIP_POLE, DISCREPANT)
FAILING = (FAIL, DISCREPANT)

CSV_COLUMNS = (
    "identity_id", "n", "ell", "m", "point_index", "status",
    "lhs", "rhs_closed", "rhs_derived", "resamples",
)


@dataclass
class VerificationRecord:
    identity_id: str
    n: int
    ell: int
    m: int
    point_index: int
    status: str
    point: ParamPoint | SearPoint | None = None
    lhs: Optional[Fraction] = None
    rhs_closed: Optional[Fraction] = None
    rhs_derived: Optional[Fraction] = None
    resamples: int = 0
    elapsed_micros: int = 0
    note: Optional[str] = None

    @property
    def sort_key(self):
        return (self.identity_id, self.n, self.ell, self.m, self.point_index)

    def as_dict(self) -> dict:
        opt = lambda x: None if x is None else fmt(x)  # noqa: E731
        return {
            "identity_id": self.identity_id,
            "n": self.n,
            "ell": self.ell,
            "m": self.m,
            "point_index": self.point_index,
            "status": self.status,
            "point": None if self.point is None else self.point.as_dict(),
            "lhs": opt(self.lhs),
            "rhs_closed": opt(self.rhs_closed),
            "rhs_derived": opt(self.rhs_derived),
            "resamples": self.resamples,
            "elapsed_micros": self.elapsed_micros,
            "note": self.note,
        }


def classify(lhs: Fraction, closed: Fraction, derived: Optional[Fraction]) -> str:
    """PASS when everything present agrees.

    DISCREPANT means the proof pipeline reproduces the left side but the
    printed closed form does not, which pins the fault on the closed form.
    """
    if lhs == closed and (derived is None or derived == closed):
        return PASS
    if derived is not None and derived == lhs:
        return DISCREPANT
    return FAIL


def _record(spec: IdentitySpec, draw: Draw, n: int, ell: int, m: int, index: int, started: float) -> VerificationRecord:
    return VerificationRecord(
        spec.id, n, ell, m, index,
        classify(draw.lhs, draw.rhs_closed, draw.rhs_derived),
        point=spec.bind(draw.point),
        lhs=draw.lhs,
        rhs_closed=draw.rhs_closed,
        rhs_derived=draw.rhs_derived,
        resamples=draw.resamples,
        elapsed_micros=int((time.perf_counter() - started) * 1e6),
        note=draw.derived_note,
    )


def compare_cell(spec: IdentitySpec, point, index: int = 0) -> VerificationRecord:
    """Check ``spec`` at an explicit point (no resampling)."""
    started = time.perf_counter()
    ell = getattr(point, "ell", 0)
    m = getattr(point, "m", 0)
    try:
        draw = trial(spec, point)
    except ConstraintError as exc:
        return VerificationRecord(spec.id, point.n, ell, m, index, SKIP_CONSTRAINT, point=point, note=str(exc))
    except PoleError as exc:
        return VerificationRecord(spec.id, point.n, ell, m, index, SKIP_POLE, point=point, note=str(exc))
    return _record(spec, draw, point.n, ell, m, index, started)


def run_cell(spec: IdentitySpec, n: int, ell: int, m: int, points: int, cfg: SampleConfig) -> list[VerificationRecord]:
    out = []
    bad = spec.cell_violations(n, ell, m)
    for index in range(points):
        if bad:
            out.append(VerificationRecord(spec.id, n, ell, m, index, SKIP_CONSTRAINT, note="requires " + ", ".join(bad)))
            continue
        started = time.perf_counter()
        try:
            draw = draw_evaluated(cfg, spec, n, ell, m, index)
        except SamplingExhausted as exc:
            out.append(VerificationRecord(
                spec.id, n, ell, m, index, SKIP_POLE, resamples=exc.attempts, note=exc.last_error,
            ))
            continue
        out.append(_record(spec, draw, n, ell, m, index, started))
    return out


def _cell_task(args):
    identity_id, n, ell, m, points, cfg = args
    return run_cell(registry.get(identity_id), n, ell, m, points, cfg)


@dataclass
class Report:
    records: list[VerificationRecord]
    config: dict = field(default_factory=dict)

    def __post_init__(self):
        self.records.sort(key=lambda r: r.sort_key)

    @property
    def summary(self) -> dict:
        per: dict[str, Counter] = {}
        for r in self.records:
            per.setdefault(r.identity_id, Counter())[r.status] += 1
        totals = Counter(r.status for r in self.records)
        return {
            "total": {s: totals.get(s, 0) for s in STATUSES},
            "records": len(self.records),
            "identities": {k: {s: c.get(s, 0) for s in STATUSES} for k, c in sorted(per.items())},
        }

    @property
    def ok(self) -> bool:
        return not any(r.status in FAILING for r in self.records)

    def stable(self) -> "Report":
        for r in self.records:
            r.elapsed_micros = 0
        return self

    def as_dict(self) -> dict:
        return {"config": self.config, "summary": self.summary, "records": [r.as_dict() for r in self.records]}

    def to_json(self) -> str:
        return dumps(self.as_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.records:
            d = r.as_dict()
            w.writerow(["" if d[k] is None else d[k] for k in CSV_COLUMNS])
        return buf.getvalue()

    def to_markdown(self) -> str:
        """Per-identity tables in theorem order rather than id order."""
        by_id: dict[str, list[VerificationRecord]] = {}
        for r in self.records:
            by_id.setdefault(r.identity_id, []).append(r)

        def order(ident):
            try:
                return (registry.get(ident).order, ident)
            except KeyError:
                return (10**9, ident)

        lines = ["# Verification report", ""]
        cfg = ", ".join(f"{k}={v}" for k, v in self.config.items() if k != "pool")
        if cfg:
            lines += [f"Configuration: {cfg}", ""]
        tot = self.summary["total"]
        lines += ["| status | count |", "|---|---|"] + [f"| {s} | {tot[s]} |" for s in STATUSES] + [""]
        for ident in sorted(by_id, key=order):
            try:
                label = registry.get(ident).paper_label
            except KeyError:
                label = ""
            lines += [f"## {ident}", "", label, ""] if label else [f"## {ident}", ""]
            lines += ["| n | ell | m | # | status | lhs | rhs_closed | rhs_derived |", "|---|---|---|---|---|---|---|---|"]
            for r in by_id[ident]:
                vals = [preview(x) if x is not None else "" for x in (r.lhs, r.rhs_closed, r.rhs_derived)]
                lines.append(f"| {r.n} | {r.ell} | {r.m} | {r.point_index} | {r.status} | " + " | ".join(vals) + " |")
            lines.append("")
        return "\n".join(lines)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def cells(ids: Sequence[str], n_range: Iterable[int], ell_range: Iterable[int], m_range: Iterable[int]):
    """Grid cells; entries with a pinned ell or m run only at that value."""
    n_range, ell_range, m_range = list(n_range), list(ell_range), list(m_range)
    out = []
    for ident in ids:
        spec = registry.get(ident)
        for n in n_range:
            for ell in spec.ell_values(ell_range):
                for m in spec.m_values(m_range):
                    out.append((ident, n, ell, m))
    return out


def run_grid(
    ids: Sequence[str],
    n_range: Iterable[int],
    ell_range: Iterable[int],
    m_range: Iterable[int],
    points_per_cell: int,
    cfg: SampleConfig,
    parallelism: int = 1,
    fail_fast: bool = False,
    config_echo: Optional[dict] = None,
) -> Report:
    """Run every cell; record order never depends on ``parallelism``.

    With ``fail_fast`` the run stops at the first failing cell, so the set of
    records then depends on scheduling.
    """
    tasks = [(i, n, l, m, points_per_cell, cfg) for (i, n, l, m) in cells(ids, n_range, ell_range, m_range)]
    records: list[VerificationRecord] = []
    if parallelism <= 1 or len(tasks) <= 1:
        for t in tasks:
            got = _cell_task(t)
            records.extend(got)
            if fail_fast and any(r.status in FAILING for r in got):
                break
    else:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            chunk = max(1, len(tasks) // (parallelism * 8))
            for got in pool.map(_cell_task, tasks, chunksize=chunk):
                records.extend(got)
                if fail_fast and any(r.status in FAILING for r in got):
                    pool.shutdown(wait=False, cancel_futures=True)
                    break
    return Report(records, dict(config_echo or {}))
