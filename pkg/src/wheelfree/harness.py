"""Machine-check of the wheel/antiwheel equivalence at desk scale.

Three independent routes must agree on every graph:

  condition 1: exhaustive wheel/antiwheel search over holes of every
               length (only run for graphs within the oracle's cap);
  condition 2: the bounded search for wheels/antiwheels spanning at
               most seven vertices;
  condition 3: the structural classifier (a graph is "not free" exactly
               when classify fails over to a witness).

Labeled enumeration (no isomorphism reduction) keeps the harness free of
canonical-form machinery and stresses the recognizers on every labeling;
n = 7 means 2,097,152 graphs, which is fine.  Work is partitioned across
processes by edge-bitmask ranges; reports are aggregated order-
insensitively (counts plus sorted lists), so worker count never changes
the result.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional

from .graph import Graph, serialize_graph6
from .oracle import (
    DEFAULT_EXHAUSTIVE_CAP,
    find_small_antiwheel,
    find_small_wheel,
    find_wheel_exhaustive,
)
from .recognizer import NOT_FREE, ClassificationError, classify, verify_classification
from .generators import gen_random

MAX_EXHAUSTIVE_N = 7

_SEED_STRIDE = 0x9E3779B97F4A7C15  # sample i uses seed*stride + i, any worker split


def _pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 column order: (0,1),(0,2),(1,2),(0,3),..."""
    return [(u, v) for v in range(1, n) for u in range(v)]


def graph_from_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    pairs = _pairs(n)
    m = mask
    while m:
        b = m & -m
        m ^= b
        u, v = pairs[b.bit_length() - 1]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices exactly once, in edge-bitmask order."""
    if not 0 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(
            f"labeled enumeration is capped at n={MAX_EXHAUSTIVE_N}; use sampling")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


@dataclass(frozen=True)
class TheoremCheck:
    """Per-graph agreement record."""

    graph6: str
    condition1: Optional[bool]
    condition2: bool
    verdict: str
    certificate_ok: bool

    @property
    def agree(self) -> bool:
        if self.verdict.startswith("error"):
            return False
        if self.condition1 is not None and self.condition1 != self.condition2:
            return False
        return self.condition2 == (self.verdict == NOT_FREE)


@dataclass(frozen=True)
class AgreementReport:
    graphs_checked: int
    condition1_checked: int
    disagreements: tuple[tuple[str, str, str], ...]
    certificate_failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.certificate_failures

    def to_json(self) -> str:
        return json.dumps({
            "graphs_checked": self.graphs_checked,
            "condition1_checked": self.condition1_checked,
            "disagreements": [list(d) for d in self.disagreements],
            "certificate_failures": list(self.certificate_failures),
            "ok": self.ok,
        }, indent=2, sort_keys=True)


def check_theorem(g: Graph, run_condition1: bool = False,
                  cap: int = DEFAULT_EXHAUSTIVE_CAP) -> TheoremCheck:
    """Evaluate the three conditions on one graph.

    condition 2 short-circuits (wheel first, then antiwheel), condition 3
    is the classifier plus certificate verification, condition 1 runs
    only on request and requires n <= cap.
    """
    c2 = find_small_wheel(g) is not None or find_small_antiwheel(g) is not None
    try:
        cls = classify(g)
        verdict = cls.verdict
        cert_ok = verify_classification(g, cls)
    except ClassificationError as exc:
        verdict = f"error: {exc}"
        cert_ok = False
    c1 = None
    if run_condition1:
        c1 = (find_wheel_exhaustive(g, cap=cap) is not None
              or find_wheel_exhaustive(g, in_complement=True, cap=cap) is not None)
    return TheoremCheck(serialize_graph6(g), c1, c2, verdict, cert_ok)


def _found(flag: Optional[bool]) -> str:
    return "found" if flag else "none"


def _record(rec: TheoremCheck, disagreements: list, certfails: list) -> None:
    if not rec.agree:
        c2s = f"c2={_found(rec.condition2)}"
        if rec.condition1 is not None:
            c2s = f"c1={_found(rec.condition1)},{c2s}"
        disagreements.append((rec.graph6, c2s, rec.verdict))
    if not rec.certificate_ok:
        certfails.append(rec.graph6)


def _check_mask_range(args) -> tuple[int, int, list, list]:
    n, start, stop, run_c1, cap = args
    pairs = _pairs(n)
    count = 0
    c1count = 0
    disagreements: list = []
    certfails: list = []
    for mask in range(start, stop):
        rows = [0] * n
        m = mask
        while m:
            b = m & -m
            m ^= b
            u, v = pairs[b.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        rec = check_theorem(Graph(n, tuple(rows)), run_c1, cap)
        count += 1
        if rec.condition1 is not None:
            c1count += 1
        _record(rec, disagreements, certfails)
    return count, c1count, disagreements, certfails


def _check_sample_range(args) -> tuple[int, int, list, list]:
    n, p, seed, start, stop, run_c1, cap = args
    count = 0
    c1count = 0
    disagreements: list = []
    certfails: list = []
    for i in range(start, stop):
        g = gen_random(n, p, seed * _SEED_STRIDE + i)
        rec = check_theorem(g, run_c1, cap)
        count += 1
        if rec.condition1 is not None:
            c1count += 1
        _record(rec, disagreements, certfails)
    return count, c1count, disagreements, certfails


def _aggregate(task_fn, tasks: list, jobs: int) -> AgreementReport:
    count = 0
    c1count = 0
    disagreements: list = []
    certfails: list = []
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            partials = pool.imap_unordered(task_fn, tasks)
            for cnt, c1c, dis, cf in partials:
                count += cnt
                c1count += c1c
                disagreements.extend(dis)
                certfails.extend(cf)
    else:
        for task in tasks:
            cnt, c1c, dis, cf = task_fn(task)
            count += cnt
            c1count += c1c
            disagreements.extend(dis)
            certfails.extend(cf)
    return AgreementReport(count, c1count,
                           tuple(sorted(disagreements)),
                           tuple(sorted(certfails)))


def run_exhaustive(max_n: int, jobs: int = 1,
                   cap: int = DEFAULT_EXHAUSTIVE_CAP) -> AgreementReport:
    """Check every labeled graph with 0 <= n <= max_n (max_n <= 7),
    all three conditions included."""
    if not 0 <= max_n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"run_exhaustive needs 0 <= max_n <= {MAX_EXHAUSTIVE_N}")
    tasks = []
    for n in range(max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        step = total if jobs <= 1 else max(4096, total // (jobs * 16))
        for s in range(0, total, step):
            tasks.append((n, s, min(s + step, total), True, cap))
    return _aggregate(_check_mask_range, tasks, jobs)


def run_sampled(n: int, count: int, p: float, seed: int, jobs: int = 1,
                cap: int = DEFAULT_EXHAUSTIVE_CAP) -> AgreementReport:
    """Check `count` samples of G(n, p); condition 1 included when n <= cap.

    Sample i is derived from (seed, i) alone, so reports do not depend on
    the worker split.
    """
    if count < 0:
        raise ValueError("sample count must be non-negative")
    run_c1 = n <= cap
    step = max(1, count) if jobs <= 1 else max(64, count // (jobs * 16))
    tasks = [(n, p, seed, s, min(s + step, count), run_c1, cap)
             for s in range(0, count, step)]
    return _aggregate(_check_sample_range, tasks, jobs)


def run_graph6_lines(lines: Iterable[str],
                     cap: int = DEFAULT_EXHAUSTIVE_CAP) -> AgreementReport:
    """Check an externally supplied corpus, one graph6 record per line."""
    from .graph import parse_graph6

    count = 0
    c1count = 0
    disagreements: list = []
    certfails: list = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        g = parse_graph6(line)
        rec = check_theorem(g, run_condition1=g.n <= cap, cap=cap)
        count += 1
        if rec.condition1 is not None:
            c1count += 1
        _record(rec, disagreements, certfails)
    return AgreementReport(count, c1count,
                           tuple(sorted(disagreements)),
                           tuple(sorted(certfails)))
