"""Benchmark harness: seeded trials, validity gate, CSV output and summaries."""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, field, fields

import numpy as np

from .errors import ConfigError, EmptyInputError
from .generators import (
    all_kings_tournament,
    derive_seed,
    hard_instance,
    random_tournament,
    transitive_tournament,
)
from .oracles import AdversaryOracle
from .search import ALGORITHMS, run_algorithm

GENERATORS = ("random", "transitive", "allkings", "hard", "adversary")
QUERY_MODEL = ("rand", "maxdeg", "det", "three", "three-det")


class ValidityError(RuntimeError):
    """A benchmarked algorithm returned a vertex that is not a king."""


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    n: int
    k: int
    seed: int
    queries_total: int
    queries_distinct: int
    wall_ns: int
    kings_found: int
    valid: bool


CSV_HEADER = [f.name for f in fields(BenchRecord)]


@dataclass(frozen=True)
class BenchPlan:
    algorithms: tuple[str, ...]
    generator: str
    n_values: tuple[int, ...]
    trials: int = 1
    seed: int = 0
    k: int = 1
    timing: bool = True
    workers: int = 1

    def validate(self) -> None:
        if not self.algorithms:
            raise ConfigError("plan lists no algorithms")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ConfigError(f"unknown algorithm {a!r}")
        if self.generator not in GENERATORS:
            raise ConfigError(f"unknown generator {self.generator!r}; choose from {', '.join(GENERATORS)}")
        if self.generator == "adversary":
            bad = [a for a in self.algorithms if a not in QUERY_MODEL]
            if bad:
                raise ConfigError(f"adversary generator only supports query-model algorithms, not {bad}")
        if not self.n_values or min(self.n_values) < 1:
            raise ConfigError("n_values must be positive integers")
        if self.generator == "hard":
            for n in self.n_values:
                m = (n - 3) // 3
                if n % 3 or m in (0, 2, 4):
                    raise ConfigError(f"hard instances need n = 3m + 3 with m in 1, 3, 5, 6, ...; got n={n}")
        if self.generator == "allkings" and any(n in (2, 4) for n in self.n_values):
            raise ConfigError("no all-kings tournament on 2 or 4 vertices")
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if self.k < 1:
            raise ConfigError("k must be at least 1")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")


def _parse_bool(value: str) -> bool:
    v = value.strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"expected a boolean, got {value!r}")


def parse_plan(text: str) -> BenchPlan:
    """Read a ``key=value`` plan; ``#`` starts a comment."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        values[key] = value
    known = {"algorithms", "generator", "n_values", "trials", "seed", "k", "timing", "workers"}
    unknown = set(values) - known
    if unknown:
        raise ConfigError(f"unknown plan keys: {', '.join(sorted(unknown))}")
    for key in ("algorithms", "generator", "n_values"):
        if key not in values:
            raise ConfigError(f"plan is missing {key!r}")
    try:
        plan = BenchPlan(
            algorithms=tuple(a.strip() for a in values["algorithms"].split(",") if a.strip()),
            generator=values["generator"],
            n_values=tuple(int(x) for x in values["n_values"].split(",") if x.strip()),
            trials=int(values.get("trials", 1)),
            seed=int(values.get("seed", 0)),
            k=int(values.get("k", 1)),
            timing=_parse_bool(values.get("timing", "true")),
            workers=int(values.get("workers", 1)),
        )
    except ValueError as e:
        raise ConfigError(f"bad plan value: {e}") from None
    plan.validate()
    return plan


def trial_seed(master: int, point: int, trial: int) -> int:
    return derive_seed(master, point, trial)


def make_instance(generator: str, n: int, seed: int):
    if generator == "random":
        return random_tournament(n, seed)
    if generator == "transitive":
        return transitive_tournament(n)
    if generator == "allkings":
        return all_kings_tournament(n, seed)
    if generator == "hard":
        return hard_instance((n - 3) // 3, seed).t
    raise ConfigError(f"generator {generator!r} does not produce a tournament")


def run_trial(plan: BenchPlan, point: int, trial: int) -> list[BenchRecord]:
    n = plan.n_values[point]
    seed = trial_seed(plan.seed, point, trial)
    t = None if plan.generator == "adversary" else make_instance(plan.generator, n, seed)
    records = []
    for algo in plan.algorithms:
        source = AdversaryOracle(n) if t is None else t
        k = min(plan.k, n)
        start = time.perf_counter_ns()
        result = run_algorithm(algo, source, k=k, seed=seed)
        wall = time.perf_counter_ns() - start
        check = source.complete() if t is None else t
        bad = [v for v in result.kings if not check.is_king(v)]
        if bad or len(set(result.kings)) != len(result.kings):
            raise ValidityError(
                f"{algo} returned non-king(s) {bad} (n={n}, point={point}, trial={trial}, seed={seed})"
            )
        records.append(
            BenchRecord(
                algorithm=algo,
                n=n,
                k=result.k,
                seed=seed,
                queries_total=result.stats.total,
                queries_distinct=result.stats.distinct,
                wall_ns=wall if plan.timing else 0,
                kings_found=len(result.kings),
                valid=True,
            )
        )
    return records


def _run_task(args) -> list[BenchRecord]:
    return run_trial(*args)


def run_bench(plan: BenchPlan) -> list[BenchRecord]:
    """One record per (point, trial, algorithm), ordered by point, then trial."""
    plan.validate()
    tasks = [(plan, p, i) for p in range(len(plan.n_values)) for i in range(plan.trials)]
    if plan.workers > 1:
        with ProcessPoolExecutor(max_workers=plan.workers) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(task) for task in tasks]
    return [r for chunk in chunks for r in chunk]


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        row = list(astuple(r))
        row[-1] = "true" if r.valid else "false"
        w.writerow(row)
    return buf.getvalue()


def records_from_csv(text: str) -> list[BenchRecord]:
    rows = list(csv.DictReader(io.StringIO(text)))
    out = []
    for row in rows:
        out.append(
            BenchRecord(
                algorithm=row["algorithm"],
                valid=row["valid"] == "true",
                **{k: int(row[k]) for k in CSV_HEADER if k not in ("algorithm", "valid")},
            )
        )
    return out


# -- summaries -------------------------------------------------------------


@dataclass(frozen=True)
class PointSummary:
    algorithm: str
    n: int
    trials: int
    mean_total: float
    min_total: int
    max_total: int
    mean_distinct: float
    min_distinct: int
    max_distinct: int


@dataclass
class Summary:
    points: list[PointSummary]
    slopes: dict[str, float | None] = field(default_factory=dict)

    def point(self, algorithm: str, n: int) -> PointSummary:
        for p in self.points:
            if p.algorithm == algorithm and p.n == n:
                return p
        raise KeyError((algorithm, n))

    def format(self) -> str:
        lines = ["algorithm  n  trials  mean_total  min_total  max_total  mean_distinct  min_distinct  max_distinct"]
        for p in self.points:
            lines.append(
                f"{p.algorithm} {p.n} {p.trials} {p.mean_total:.2f} {p.min_total} {p.max_total} "
                f"{p.mean_distinct:.2f} {p.min_distinct} {p.max_distinct}"
            )
        for algo, slope in self.slopes.items():
            lines.append(f"slope {algo} " + ("n/a" if slope is None else f"{slope:.4f}"))
        return "\n".join(lines) + "\n"


def fit_slope(ns, queries) -> float:
    """Least-squares slope of log(queries) against log(n)."""
    x = np.log(np.asarray(ns, dtype=float))
    y = np.log(np.asarray(queries, dtype=float))
    return float(np.polyfit(x, y, 1)[0])


def summarize(records) -> Summary:
    records = list(records)
    if not records:
        raise EmptyInputError("no records to summarize")
    groups: dict[tuple[str, int], list[BenchRecord]] = {}
    for r in records:
        groups.setdefault((r.algorithm, r.n), []).append(r)
    points = []
    for (algo, n), rs in sorted(groups.items()):
        tot = [r.queries_total for r in rs]
        dis = [r.queries_distinct for r in rs]
        points.append(
            PointSummary(algo, n, len(rs), float(np.mean(tot)), min(tot), max(tot),
                         float(np.mean(dis)), min(dis), max(dis))
        )
    slopes: dict[str, float | None] = {}
    for algo in sorted({p.algorithm for p in points}):
        pts = [p for p in points if p.algorithm == algo and p.mean_distinct > 0]
        if len({p.n for p in pts}) < 2:
            slopes[algo] = None
        else:
            slopes[algo] = fit_slope([p.n for p in pts], [p.mean_distinct for p in pts])
    return Summary(points, slopes)
