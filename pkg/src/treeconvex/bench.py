"""Head-to-head benchmark of the two recognizers, written as CSV rows."""

from __future__ import annotations

import csv
import time
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import TextIO

from treeconvex.core import OpCounter, SetCollection
from treeconvex.errors import TreeConvexError
from treeconvex.formats import looks_like_cats, parse_cats, parse_collection
from treeconvex.gen import GenConfig, batch, random_collection
from treeconvex.recognize import is_tree_convex
from treeconvex.spanning import spanning_tree_verdict

CSV_HEADER = ("id", "m", "n", "r1", "r2", "verdict",
              "acyclic_s", "spanning_s", "acyclic_ops", "spanning_ops")

# Table-1 configurations (m, n, r1, r2).
LARGE_CONFIGS = ((100, 100, 2, 10), (300, 300, 2, 30), (500, 500, 2, 50))


class VerdictMismatchError(TreeConvexError):
    """The two recognizers disagreed; the run is aborted."""


@dataclass(frozen=True)
class BenchRecord:
    id: str
    m: int
    n: int
    r1: int
    r2: int
    verdict: bool
    acyclic_s: float
    spanning_s: float
    acyclic_ops: int
    spanning_ops: int

    def row(self) -> list[str]:
        out = []
        for f, value in zip(fields(self), astuple(self)):
            if isinstance(value, bool):
                out.append("true" if value else "false")
            elif isinstance(value, float):
                out.append(f"{value:.9f}")
            else:
                out.append(str(value))
        return out


def time_both(s: SetCollection) -> tuple[bool, float, float, int, int]:
    """Run each recognizer once on ``s``; returns verdict, seconds and op counts."""
    acyc_ops, span_ops = OpCounter(), OpCounter()
    t0 = time.perf_counter()
    fast = is_tree_convex(s, counter=acyc_ops)
    t1 = time.perf_counter()
    slow = spanning_tree_verdict(s, counter=span_ops)
    t2 = time.perf_counter()
    if fast.convex != slow.convex:
        raise VerdictMismatchError(
            f"acyclicity says {fast.convex}, spanning tree says {slow.convex}"
        )
    return fast.convex, t1 - t0, t2 - t1, acyc_ops.ops, span_ops.ops


def _measure_generated(job: tuple[str, GenConfig]) -> BenchRecord:
    ident, cfg = job
    verdict, ta, ts, oa, os_ = time_both(random_collection(cfg))
    return BenchRecord(ident, cfg.m, cfg.n, cfg.r1, cfg.r2, verdict, ta, ts, oa, os_)


def _measure_file(path: Path) -> BenchRecord:
    data = path.read_bytes()
    s = parse_cats(data) if looks_like_cats(data) else parse_collection(data)
    sizes = [len(x) for x in s.sets]
    verdict, ta, ts, oa, os_ = time_both(s)
    return BenchRecord(path.name, s.m, s.universe_size, min(sizes), max(sizes),
                       verdict, ta, ts, oa, os_)


def _run(fn, jobs: Sequence, workers: int) -> Iterator[BenchRecord]:
    if workers <= 1:
        yield from map(fn, jobs)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, jobs)


def bench_configs(
    configs: Iterable[GenConfig],
    repetitions: int,
    *,
    workers: int = 1,
) -> Iterator[list[BenchRecord]]:
    """One batch of ``repetitions`` records per config, in order.

    Instance ``i`` of the ``p``-th config is seeded from (config seed, p, i).
    """
    for pos, cfg in enumerate(configs):
        jobs = [(f"{pos}-{i}", c) for i, c in enumerate(batch(cfg, repetitions, pos))]
        yield list(_run(_measure_generated, jobs, workers))


def bench_directory(directory: Path, *, workers: int = 1) -> list[BenchRecord]:
    paths = sorted(p for p in Path(directory).iterdir() if p.is_file())
    return list(_run(_measure_file, paths, workers))


def write_csv(records: Iterable[BenchRecord], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.row())


def read_csv(inp: TextIO) -> list[dict[str, str]]:
    return list(csv.DictReader(inp))


@dataclass(frozen=True)
class BatchSummary:
    label: str
    count: int
    acyclic_mean_s: float
    spanning_mean_s: float
    convex: int

    @property
    def speedup(self) -> float:
        if self.acyclic_mean_s == 0:
            return float("inf")
        return self.spanning_mean_s / self.acyclic_mean_s

    def __str__(self) -> str:
        return (f"{self.label}: {self.count} instances, {self.convex} convex, "
                f"acyclic mean {self.acyclic_mean_s:.6f}s, "
                f"spanning mean {self.spanning_mean_s:.6f}s, "
                f"speedup {self.speedup:.1f}x")


def summarize(label: str, records: Sequence[BenchRecord]) -> BatchSummary:
    k = len(records)
    if k == 0:
        return BatchSummary(label, 0, 0.0, 0.0, 0)
    return BatchSummary(
        label,
        k,
        sum(r.acyclic_s for r in records) / k,
        sum(r.spanning_s for r in records) / k,
        sum(r.verdict for r in records),
    )
