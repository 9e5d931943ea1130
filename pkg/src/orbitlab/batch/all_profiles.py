"""
Batch driver: one summary row per irreducible complexity-one profile.
"""

import csv
import io
import logging
import multiprocessing
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..common.common import OrbitLabError, OutOfRange
from ..hessenberg import HFun, enumerate_complexity_one
from ..orbitspace import orbit_space_report

logger = logging.getLogger(__name__)

BATCH_COLUMNS = [
    "n",
    "h",
    "i0",
    "status",
    "special_by_color",
    "boundary_components",
    "cohomology_ranks",
    "runtime_s",
]


@dataclass
class BatchRow:
    """One line of the batch summary.
    Attributes:
        h: The profile analysed.
        status: ``ok`` or the code of the error that stopped the analysis.
        i0: Double-step position.
        special_by_color: Special facet count per colour.
        boundary_components: Number l of boundary components.
        cohomology_ranks: rank H~^i(Q) for i = 0 .. N+1.
        runtime_s: Wall-clock seconds spent on the row.
    """

    h: HFun
    status: str = "ok"
    i0: Optional[int] = None
    special_by_color: dict[int, int] = field(default_factory=dict)
    boundary_components: Optional[int] = None
    cohomology_ranks: list[int] = field(default_factory=list)
    runtime_s: float = 0.0

    def to_record(self) -> dict:
        ok = self.status == "ok"
        return {
            "n": self.h.n,
            "h": self.h.word,
            "i0": self.i0 if self.i0 is not None else "",
            "status": self.status,
            "special_by_color": ";".join(
                f"{k}:{c}" for k, c in self.special_by_color.items()
            ),
            "boundary_components": self.boundary_components if ok else "",
            "cohomology_ranks": ";".join(str(r) for r in self.cohomology_ranks),
            "runtime_s": f"{self.runtime_s:.3f}",
        }


def worker_limit() -> int:
    """Worker count from ``ORBITLAB_THREADS``; defaults to min(8, cpu count)."""
    raw = os.getenv("ORBITLAB_THREADS", None)
    if raw is None or raw == "":
        return min(8, os.cpu_count() or 1)
    try:
        value = int(raw)
    except ValueError:
        raise EnvironmentError(f"ORBITLAB_THREADS must be an integer, got '{raw}'.")
    if value < 1:
        raise EnvironmentError(f"ORBITLAB_THREADS must be positive, got {value}.")
    return value


def parse_range(text: str) -> tuple[int, int]:
    """Parse ``a..b`` (or a single ``n``) into an inclusive range."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError as e:
        raise OutOfRange(f"Cannot read a size range from '{text}'.") from e
    if a > b:
        raise OutOfRange(f"Empty size range {text}.")
    return a, b


def profiles_in_range(a: int, b: int) -> list[HFun]:
    """Complexity-one profiles with a <= n <= b, in (n, i0) order."""
    profiles = [h for n in range(max(a, 3), b + 1) for h in enumerate_complexity_one(n)]
    if not profiles:
        raise OutOfRange(f"No complexity-one profiles with {a} <= n <= {b}.")
    return profiles


def analyze_row(h: HFun) -> BatchRow:
    start = time.perf_counter()
    try:
        report = orbit_space_report(h)
    except OrbitLabError as e:
        logger.info("h=%s skipped: %s", h, e.message)
        return BatchRow(h=h, status=e.code, runtime_s=time.perf_counter() - start)
    return BatchRow(
        h=h,
        i0=report.i0,
        special_by_color=report.special_counts(),
        boundary_components=report.boundary_count,
        cohomology_ranks=[g.rank for g in report.cohomology],
        runtime_s=time.perf_counter() - start,
    )


def run_batch(profiles: list[HFun], workers: Optional[int] = None) -> list[BatchRow]:
    """Analyse the profiles in worker processes; rows keep the input order."""
    workers = workers or worker_limit()
    print(f"Starting batch of {len(profiles)} profiles on {workers} worker(s)...")
    rows = []
    pool = None
    if workers > 1 and len(profiles) > 1:
        pool = multiprocessing.Pool(processes=min(workers, len(profiles)))
    try:
        results = pool.imap(analyze_row, profiles) if pool else map(analyze_row, profiles)
        for row in results:
            print(f"  h={row.h}: {row.status}")
            rows.append(row)
    finally:
        if pool:
            pool.close()
            pool.join()
    print("Batch done.")
    return rows


def batch_csv(rows: list[BatchRow]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=BATCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.to_record())
    return buffer.getvalue()


def write_batch(rows: list[BatchRow], out: Path) -> Path:
    out.mkdir(parents=True, exist_ok=True)
    path = out / "batch.csv"
    path.write_text(batch_csv(rows), encoding="utf-8")
    return path
