"""Timing harness: one CSV row per (method, n, trial)."""

from __future__ import annotations

import csv
import gc
import io
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace

from .connectivity import connected_fast, connected_paper
from .core import build_pseudodigraph
from .decision import decide
from .generate import GeneratorSpec, derive_seed, generate
from .oracle import BACKTRACK_CAP, PERMUTATION_CAP, oracle_backtrack, oracle_permutations

FIELDS = ("method", "n", "alphabet_size", "trial", "elapsed_ns", "answer")


@dataclass(frozen=True)
class BenchRecord:
    method: str
    n: int
    alphabet_size: int
    trial: int
    elapsed_ns: int
    answer: bool


def _edges_then(check):
    def prepare(u):
        return build_pseudodigraph(u).edges, check
    return prepare


def _plain(fn):
    def prepare(u):
        return u, fn
    return prepare


# method -> prepare(instance) -> (argument, timed callable); only the call is timed
METHODS = {
    "decide": _plain(lambda u: decide(u).answer),
    "oracle_perms": _plain(oracle_permutations),
    "oracle_backtrack": _plain(oracle_backtrack),
    "connected_paper": _edges_then(connected_paper),
    "connected_fast": _edges_then(connected_fast),
    "build": _plain(lambda u: bool(build_pseudodigraph(u).multiplicity)),
}
CAPS = {"oracle_perms": PERMUTATION_CAP, "oracle_backtrack": BACKTRACK_CAP}


def time_call(fn, arg) -> tuple[int, bool]:
    """Monotonic wall time of one call, with the cyclic GC paused as ``timeit`` does."""
    enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter_ns()
        answer = fn(arg)
        elapsed = time.perf_counter_ns() - t0
    finally:
        if enabled:
            gc.enable()
    return elapsed, bool(answer)


def check_plan(methods, sizes) -> None:
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown bench method {m!r}; choose from {', '.join(METHODS)}")
        cap = CAPS.get(m)
        if cap is not None and max(sizes) > cap:
            raise ValueError(f"{m} is capped at n={cap}, asked for n={max(sizes)}")


def _run_one(method: str, spec: GeneratorSpec, trial: int) -> BenchRecord:
    u = generate(replace(spec, seed=derive_seed(spec.seed, spec.n, trial)))
    arg, fn = METHODS[method](u)
    elapsed, answer = time_call(fn, arg)
    return BenchRecord(method, spec.n, spec.alphabet_size, trial, elapsed, answer)


def bench(methods, sizes, trials: int, template: GeneratorSpec, parallel: bool = False) -> list[BenchRecord]:
    """Time each method on ``trials`` generated instances per size.

    Trial ``k`` at size ``n`` uses the instance seeded by
    ``derive_seed(template.seed, n, k)``, so every method sees the same inputs.
    Each (method, n) pair gets one discarded warm-up call.  Sizes are
    interleaved within each trial round so slow drift in machine speed lands
    on every size alike.
    """
    methods, sizes = list(methods), list(sizes)
    check_plan(methods, sizes)
    specs = [replace(template, n=n) for n in sizes]
    records = []
    for m in methods:
        for spec in specs:
            _run_one(m, spec, -1)
        jobs = [(m, spec, k) for k in range(trials) for spec in specs]
        if parallel:
            with ProcessPoolExecutor() as pool:
                records.extend(pool.map(_run_one, *zip(*jobs)))
        else:
            records.extend(_run_one(*job) for job in jobs)
    records.sort(key=lambda r: (methods.index(r.method), sizes.index(r.n), r.trial))
    return records


def to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        row = asdict(r)
        row["answer"] = "yes" if r.answer else "no"
        writer.writerow(row)
    return buf.getvalue()


def read_csv(text: str) -> list[BenchRecord]:
    rows = csv.DictReader(io.StringIO(text))
    return [
        BenchRecord(r["method"], int(r["n"]), int(r["alphabet_size"]), int(r["trial"]),
                    int(r["elapsed_ns"]), r["answer"] == "yes")
        for r in rows
    ]


def medians(records) -> dict:
    """Median elapsed nanoseconds per (method, n)."""
    groups: dict = {}
    for r in records:
        groups.setdefault((r.method, r.n), []).append(r.elapsed_ns)
    return {k: statistics.median(v) for k, v in sorted(groups.items())}


def growth_ratios(records, method: str) -> list[tuple[int, int, float]]:
    """(n_prev, n_next, median ratio) for successive sizes of one method."""
    med = sorted((n, t) for (m, n), t in medians(records).items() if m == method)
    return [(a, b, tb / ta) for (a, ta), (b, tb) in zip(med, med[1:])]
