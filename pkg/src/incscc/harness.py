"""Experiment pipeline: dataset ingestion, prediction perturbation, trial
execution, error metrics, timing, CSV output, and randomized verification.

Reproducibility: all randomness flows through numpy's PCG64 generator
(np.random.default_rng); normal offsets use the generator's ziggurat
sampler, are rounded to the nearest integer (numpy rint, half-to-even) and
clamped to [1, m]. Per-trial sub-seeds are seed XOR trial. Given a seed,
everything except the runtime_ms column is byte-identical across runs.
"""

from __future__ import annotations

import gzip
import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from incscc.baseline import IncSccPlus
from incscc.graph import EdgeSequence, edge_errors
from incscc.learned import LearnedIncScc
from incscc.offline import OfflineSccIndex
from incscc.oracle import check_equivalence, scc_snapshots
from incscc.synth import random_edge_sequence, reversed_sequence

ALGOS = ("learned", "offline", "baseline", "baseline-opt")

CSV_HEADER = "dataset,algo,S,trial,seed,eta_max,eta_avg,runtime_ms,work_edges,merges"


# -- ingestion ----------------------------------------------------------------

@dataclass
class IngestResult:
    n: int
    sequence: EdgeSequence
    lines_read: int = 0
    comments: int = 0
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0

    def summary(self) -> str:
        return (f"n={self.n} m={self.sequence.m} lines={self.lines_read} "
                f"comments={self.comments} self_loops={self.self_loops_dropped} "
                f"duplicates={self.duplicates_dropped}")


def ingest(path: str, fmt: str = "snap-temporal") -> IngestResult:
    """Parse a SNAP-style edge list: lines of "SRC DST [TIMESTAMP]", '#'
    comments skipped.

    snap-temporal sorts by timestamp (stable on ties, keeping file order);
    edge-list keeps file order. Duplicate (src, dst) pairs keep the first
    occurrence, self-loops are dropped, and vertices are renumbered densely
    over the surviving edge endpoints in first-appearance order.
    """
    if fmt not in ("snap-temporal", "edge-list"):
        raise ValueError(f"unknown format {fmt!r}")
    rows: list[tuple[int, int, int]] = []
    res = IngestResult(0, None)  # type: ignore[arg-type]
    opener = gzip.open if str(path).endswith(".gz") else open
    with opener(path, "rt", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped:
                continue
            res.lines_read += 1
            if stripped.startswith("#") or stripped.startswith("%"):
                res.comments += 1
                continue
            parts = stripped.split()
            try:
                u = int(parts[0])
                v = int(parts[1])
                ts = int(parts[2]) if fmt == "snap-temporal" and len(parts) > 2 else 0
            except (ValueError, IndexError) as exc:
                raise ValueError(f"{path}:{lineno}: unparsable line {stripped!r}") from exc
            rows.append((ts, u, v))
    if fmt == "snap-temporal":
        rows.sort(key=lambda r: r[0])  # stable: ties keep file order
    seen: set[tuple[int, int]] = set()
    src_l: list[int] = []
    dst_l: list[int] = []
    for _, u, v in rows:
        if u == v:
            res.self_loops_dropped += 1
            continue
        if (u, v) in seen:
            res.duplicates_dropped += 1
            continue
        seen.add((u, v))
        src_l.append(u)
        dst_l.append(v)
    if not src_l:
        raise ValueError(f"{path}: no edges after filtering")
    remap: dict[int, int] = {}
    for u, v in zip(src_l, dst_l):  # first-appearance order along the stream
        if u not in remap:
            remap[u] = len(remap)
        if v not in remap:
            remap[v] = len(remap)
    src = np.array([remap[x] for x in src_l], dtype=np.int64)
    dst = np.array([remap[x] for x in dst_l], dtype=np.int64)
    res.n = len(remap)
    res.sequence = EdgeSequence(res.n, src, dst, validate=False)
    return res


def truncate(n: int, sigma: EdgeSequence, limit: int) -> tuple[int, EdgeSequence]:
    """First `limit` arrivals, with vertices re-densified over the prefix."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    if limit >= sigma.m:
        return n, sigma
    eids = sigma.order[:limit]
    src = sigma.src[eids]
    dst = sigma.dst[eids]
    verts = np.unique(np.concatenate([src, dst]))
    return len(verts), EdgeSequence(len(verts), np.searchsorted(verts, src),
                                    np.searchsorted(verts, dst), validate=False)


# -- perturbation --------------------------------------------------------------

@dataclass
class PerturbConfig:
    S: float  # standard deviation of position offsets
    seed: int
    trials: int = 1

    def __post_init__(self):
        if self.S < 0:
            raise ValueError("S must be nonnegative")
        if self.trials < 1:
            raise ValueError("trials must be positive")


def perturb(sigma: EdgeSequence, cfg: PerturbConfig,
            offsets=None) -> EdgeSequence:
    """Perturbed copy of the arrival order.

    Positions 1..m are traversed in order; each draws a normal offset
    (stddev cfg.S, rounded to nearest, clamped into [1, m]); if both the
    current and the target position are still unmodified the two edges are
    swapped and both positions marked modified (a self-target counts as a
    successful swap). `offsets` is a test hook bypassing the PRNG.
    """
    m = sigma.m
    if offsets is None:
        rng = np.random.default_rng(cfg.seed)
        offsets = np.rint(rng.normal(0.0, cfg.S, size=m)).astype(np.int64)
    else:
        offsets = np.asarray(offsets, dtype=np.int64)
    targets = np.clip(np.arange(1, m + 1, dtype=np.int64) + offsets, 1, m)
    order = sigma.order.copy()
    modified = np.zeros(m + 1, dtype=bool)  # 1-based positions
    tgt = targets.tolist()
    for p in range(1, m + 1):
        q = tgt[p - 1]
        if modified[p] or modified[q]:
            continue
        order[p - 1], order[q - 1] = order[q - 1], order[p - 1]
        modified[p] = True
        modified[q] = True
    return sigma.reordered(order)


# -- experiment runner ----------------------------------------------------------

@dataclass
class RunRecord:
    dataset: str
    algo: str
    S: float
    trial: int
    seed: int
    eta_max: int
    eta_avg: float
    runtime_ms: float
    work_edges: int
    merges: int

    def csv_row(self) -> str:
        s = int(self.S) if float(self.S).is_integer() else self.S
        return (f"{self.dataset},{self.algo},{s},{self.trial},{self.seed},"
                f"{self.eta_max},{self.eta_avg},{self.runtime_ms},"
                f"{self.work_edges},{self.merges}")


def _run_learned(n: int, sigma: EdgeSequence, sigma_hat: EdgeSequence):
    t0 = time.perf_counter()
    algo = LearnedIncScc(n, sigma_hat)
    for e in sigma:
        algo.insert(e)
    ms = (time.perf_counter() - t0) * 1e3
    st = algo.stats()
    return ms, st["work_edges"], st["merges"]


def _run_offline(n: int, sigma: EdgeSequence):
    t0 = time.perf_counter()
    idx = OfflineSccIndex(n, sigma)
    ms = (time.perf_counter() - t0) * 1e3
    final = idx.partition_at(sigma.m)
    merges = n - len(np.unique(final))
    return ms, idx.work_edges, merges


def _run_baseline(n: int, sigma: EdgeSequence, variant: str):
    algo = IncSccPlus(n, variant)
    t0 = time.perf_counter()
    for e in sigma:
        algo.insert(e)
    ms = (time.perf_counter() - t0) * 1e3
    st = algo.stats()
    return ms, st["work_edges"], st["merges"]


def run_experiment(dataset: str, n: int, sigma: EdgeSequence, algos,
                   s_values, trials: int, seed: int,
                   limit: int | None = None) -> list[RunRecord]:
    """Full pipeline for one dataset: for each S and trial, generate a
    perturbed prediction, measure its errors, and time every selected
    algorithm over the true arrival order. Deterministic given the seed
    (runtime_ms excepted)."""
    for a in algos:
        if a not in ALGOS:
            raise ValueError(f"unknown algorithm {a!r}")
    if limit is not None:
        n, sigma = truncate(n, sigma, limit)
    records: list[RunRecord] = []
    for s_val in s_values:
        for trial in range(trials):
            sub_seed = seed ^ trial
            sigma_hat = perturb(sigma, PerturbConfig(s_val, sub_seed))
            eta_max, eta_avg = edge_errors(sigma, sigma_hat)
            for algo in algos:
                if algo == "learned":
                    ms, work, merges = _run_learned(n, sigma, sigma_hat)
                elif algo == "offline":
                    ms, work, merges = _run_offline(n, sigma)
                elif algo == "baseline":
                    ms, work, merges = _run_baseline(n, sigma, "basic")
                else:
                    ms, work, merges = _run_baseline(n, sigma, "optimized")
                records.append(RunRecord(dataset, algo, s_val, trial, sub_seed,
                                         eta_max, eta_avg, round(ms, 3),
                                         work, merges))
    return records


def write_csv(records: list[RunRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in records:
            fh.write(r.csv_row() + "\n")


def median_summary(records: list[RunRecord]) -> list[str]:
    """Median runtime per (algo, S) alongside the per-trial rows."""
    groups: dict[tuple[str, float], list[float]] = {}
    for r in records:
        groups.setdefault((r.algo, r.S), []).append(r.runtime_ms)
    lines = []
    for (algo, s_val), times in sorted(groups.items()):
        lines.append(f"{algo} S={s_val}: median runtime "
                     f"{statistics.median(times):.1f} ms over {len(times)} trial(s)")
    return lines


# -- randomized verification -----------------------------------------------------

@dataclass
class VerifyReport:
    ok: bool
    instances: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def summary(self) -> str:
        status = "OK" if self.ok else "FAIL"
        out = (f"{status}: {self.instances} instances, "
               f"{self.checks} algorithm runs checked")
        for f in self.failures:
            out += f"\n  {f}"
        return out


def verify(n_max: int = 40, m_max: int = 150, instances: int = 200,
           seed: int = 0, s_values=(2, 5, 20),
           progress=None) -> VerifyReport:
    """Oracle-equivalence fuzzing: random instances, every algorithm, with
    the learned structure additionally driven under perfect, perturbed, and
    fully reversed predictions. Also asserts the relabeling amortization
    bound after every learned run."""
    rng = np.random.default_rng(seed)
    report = VerifyReport(True)
    for i in range(instances):
        n, sigma = random_edge_sequence(n_max, m_max, rng)
        snapshots = scc_snapshots(n, sigma)
        predictions = [("perfect", sigma)]
        for s_val in s_values:
            cfg = PerturbConfig(s_val, int(rng.integers(2**32)))
            predictions.append((f"S={s_val}", perturb(sigma, cfg)))
        predictions.append(("reversed", reversed_sequence(sigma)))

        runs = []
        for name, sigma_hat in predictions:
            algo = LearnedIncScc(n, sigma_hat)
            runs.append((f"learned[{name}]", algo,
                         check_equivalence(algo, n, sigma, snapshots)))
        for variant in ("basic", "optimized"):
            algo = IncSccPlus(n, variant)
            runs.append((f"incscc+[{variant}]", algo,
                         check_equivalence(algo, n, sigma, snapshots)))

        for name, algo, res in runs:
            report.checks += 1
            if not res.ok:
                report.ok = False
                report.failures.append(
                    f"instance {i} (n={n}, m={sigma.m}): {name} diverged: "
                    f"{res.first_divergence[1]}")
            if isinstance(algo, LearnedIncScc):
                bound = n * int(np.floor(np.log2(n))) if n > 1 else 0
                if algo.labels.relabel_count > bound:
                    report.ok = False
                    report.failures.append(
                        f"instance {i}: {name} relabel_count "
                        f"{algo.labels.relabel_count} > n*floor(log2 n) = {bound}")

        # offline index: full-partition comparison at every time step
        idx = OfflineSccIndex(n, sigma)
        report.checks += 1
        for t in range(sigma.m + 1):
            got = idx.partition_at(t)
            if not np.array_equal(got, snapshots.partition(t)):
                report.ok = False
                report.failures.append(
                    f"instance {i} (n={n}, m={sigma.m}): offline diverged at t={t}")
                break

        report.instances += 1
        if progress and (i + 1) % 50 == 0:
            progress(f"  {i + 1}/{instances} instances verified")
        if len(report.failures) >= 5:
            break
    return report
