"""Scoring, learning curves, and paired significance tests.

Prediction files are TSV ``index<TAB>predicted_label`` and must cover the
gold split's indices exactly once. Curves aggregate per-(size, run)
accuracies under the sweep plan's run counts. The paired t-test uses the
sample standard deviation (n-1) and a two-tailed p-value from the Student
CDF, computed here via the regularized incomplete beta function (Lentz
continued fraction).
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .model import Example, SweepPlan


class AlignmentError(ValueError):
    """Prediction indices do not cover the gold split exactly once."""


class CompletenessError(ValueError):
    """A curve is missing (size, run) cells required by the plan."""


# ---------------------------------------------------------------------------
# Scoring
# ---------------------------------------------------------------------------


def read_predictions(path: Path | str) -> dict[int, int]:
    preds: dict[int, int] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for i, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise AlignmentError(f"{path}: line {i}: expected 'index<TAB>label'")
            try:
                index, label = int(parts[0]), int(parts[1])
            except ValueError as e:
                raise AlignmentError(f"{path}: line {i}: non-integer field") from e
            if index in preds:
                raise AlignmentError(f"{path}: duplicate index {index}")
            preds[index] = label
    return preds


def accuracy(predictions: Mapping[int, int], gold: Sequence[Example]) -> float:
    expected = set(range(len(gold)))
    got = set(predictions)
    if got != expected:
        missing = sorted(expected - got)[:5]
        extra = sorted(got - expected)[:5]
        raise AlignmentError(
            f"prediction indices misaligned (missing {missing or 'none'}, "
            f"unexpected {extra or 'none'})")
    correct = sum(predictions[i] == ex.label for i, ex in enumerate(gold))
    return correct / len(gold) if gold else 0.0


# ---------------------------------------------------------------------------
# Curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CurvePoint:
    size: int
    mean: float
    stddev: float
    runs: tuple[float, ...]

    @property
    def n_runs(self) -> int:
        return len(self.runs)


@dataclass(frozen=True)
class Curve:
    model_id: str
    task: str
    points: tuple[CurvePoint, ...]

    def to_json(self) -> dict:
        return {"model_id": self.model_id, "task": self.task,
                "points": [{"size": p.size, "mean": p.mean, "stddev": p.stddev,
                            "n_runs": p.n_runs, "runs": list(p.runs)}
                           for p in self.points]}

    @classmethod
    def from_json(cls, obj: dict) -> "Curve":
        pts = tuple(CurvePoint(size=p["size"], mean=p["mean"], stddev=p["stddev"],
                               runs=tuple(p["runs"])) for p in obj["points"])
        return cls(model_id=obj["model_id"], task=obj["task"], points=pts)

    def means(self) -> list[float]:
        return [p.mean for p in self.points]


def _mean(xs: Sequence[float]) -> float:
    return sum(xs) / len(xs)


def _stddev(xs: Sequence[float]) -> float:
    if len(xs) < 2:
        return 0.0
    m = _mean(xs)
    return math.sqrt(sum((x - m) ** 2 for x in xs) / (len(xs) - 1))


def build_curve(cells: Mapping[tuple[int, int], float], plan: SweepPlan,
                model_id: str = "model", task: str = "") -> Curve:
    """Aggregate per-(size, run) accuracies into a mean curve per the plan."""
    missing = [(size, run) for size, run in plan.cells() if (size, run) not in cells]
    if missing:
        raise CompletenessError(f"missing {len(missing)} cells: {missing[:8]}")
    points = []
    for size, n_runs in zip(plan.sizes, plan.runs):
        runs = tuple(cells[(size, run)] for run in range(n_runs))
        points.append(CurvePoint(size=size, mean=_mean(runs),
                                 stddev=_stddev(runs), runs=runs))
    return Curve(model_id=model_id, task=task, points=tuple(points))


# ---------------------------------------------------------------------------
# Paired t-test
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TTestResult:
    t: float
    df: int
    p_two_tailed: float
    n: int
    degenerate_variance: bool = False

    @property
    def p_one_tailed(self) -> float:
        half = self.p_two_tailed / 2.0
        return half if self.t >= 0 else 1.0 - half

    def to_json(self) -> dict:
        return {"t": self.t, "df": self.df, "n": self.n,
                "p_two_tailed": self.p_two_tailed,
                "p_one_tailed": self.p_one_tailed,
                "degenerate_variance": self.degenerate_variance}


_BETACF_MAX_ITER = 300
_BETACF_EPS = 1e-15
_TINY = 1e-300


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta function (Lentz)."""
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _BETACF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETACF_EPS:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def reg_inc_beta(a: float, b: float, x: float, complement: float | None = None) -> float:
    """Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].

    Callers that can compute 1 - x without cancellation should pass it as
    ``complement``; it keeps the tails accurate when x sits next to 0 or 1.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    cx = (1.0 - x) if complement is None else complement
    if x == 0.0 or cx == 0.0:
        return x
    log_x = math.log1p(-cx) if cx < 0.5 else math.log(x)
    log_cx = math.log1p(-x) if x < 0.5 else math.log(cx)
    front = math.exp(math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                     + a * log_x + b * log_cx)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, cx) / b


def student_p_two_tailed(t: float, df: int) -> float:
    """P(|T_df| >= |t|) via I_x(df/2, 1/2) with x = df / (df + t^2)."""
    if df < 1:
        raise ValueError("df must be >= 1")
    if t == 0.0:
        return 1.0
    if math.isinf(t):
        return 0.0
    t2 = t * t
    return reg_inc_beta(df / 2.0, 0.5, df / (df + t2), complement=t2 / (df + t2))


def paired_ttest(a: Sequence[float], b: Sequence[float]) -> TTestResult:
    """Two-tailed paired t-test on position-matched series."""
    if len(a) != len(b):
        raise ValueError(f"series lengths differ: {len(a)} vs {len(b)}")
    n = len(a)
    if n < 2:
        raise ValueError("need at least 2 pairs")
    d = [x - y for x, y in zip(a, b)]
    mean_d = _mean(d)
    sd = _stddev(d)
    df = n - 1
    if sd == 0.0:
        if mean_d == 0.0:
            return TTestResult(t=0.0, df=df, p_two_tailed=1.0, n=n,
                               degenerate_variance=True)
        t = math.copysign(math.inf, mean_d)
        return TTestResult(t=t, df=df, p_two_tailed=0.0, n=n,
                           degenerate_variance=True)
    t = mean_d / (sd / math.sqrt(n))
    return TTestResult(t=t, df=df, p_two_tailed=student_p_two_tailed(t, df), n=n)


def ttest_curves(a: Curve | Sequence[Curve], b: Curve | Sequence[Curve]) -> TTestResult:
    """Pair two models by training-size means, concatenating multiple tasks."""
    a_list = [a] if isinstance(a, Curve) else list(a)
    b_list = [b] if isinstance(b, Curve) else list(b)
    if len(a_list) != len(b_list):
        raise ValueError("need the same tasks on both sides")
    series_a, series_b = [], []
    for ca, cb in zip(a_list, b_list):
        if [p.size for p in ca.points] != [p.size for p in cb.points]:
            raise ValueError(f"size grids differ for task {ca.task!r}")
        series_a.extend(ca.means())
        series_b.extend(cb.means())
    return paired_ttest(series_a, series_b)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TTestRow:
    baseline: str
    result: TTestResult


def write_curve_csv(curves: Sequence[Curve], path: Path | str) -> None:
    """Full-precision per-size rows; floats round-trip via repr."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["model_id", "task", "size", "mean", "stddev", "n"])
        for curve in curves:
            for p in curve.points:
                writer.writerow([curve.model_id, curve.task, p.size,
                                 repr(p.mean), repr(p.stddev), p.n_runs])


def read_curve_csv(path: Path | str) -> list[Curve]:
    """Reload curves from CSV (means/stddevs only; per-run values live in JSON)."""
    grouped: dict[tuple[str, str], list[CurvePoint]] = {}
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            key = (row["model_id"], row["task"])
            grouped.setdefault(key, []).append(
                CurvePoint(size=int(row["size"]), mean=float(row["mean"]),
                           stddev=float(row["stddev"]),
                           runs=(float(row["mean"]),) * int(row["n"])))
    return [Curve(model_id=m, task=t, points=tuple(pts))
            for (m, t), pts in grouped.items()]


def write_percent_table(curves: Sequence[Curve], path: Path | str) -> None:
    """Whole-percent summary table: one row per size, one column per model."""
    sizes = sorted({p.size for c in curves for p in c.points})
    columns = [(c.model_id, c.task, {p.size: p.mean for p in c.points})
               for c in curves]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["size"] + [f"{m}:{t}" if t else m for m, t, _ in columns])
        for size in sizes:
            row = [size]
            for _, _, by_size in columns:
                row.append(round(100 * by_size[size]) if size in by_size else "")
            writer.writerow(row)


def emit_report(curves: Sequence[Curve], tests: Sequence[TTestRow],
                out_dir: Path | str, fmt: str = "both") -> list[Path]:
    """Write plot-ready curve and t-test files; returns the paths written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    if fmt in ("csv", "both"):
        path = out_dir / "curves.csv"
        write_curve_csv(curves, path)
        written.append(path)
        if curves:
            path = out_dir / "summary_percent.csv"
            write_percent_table(curves, path)
            written.append(path)
        path = out_dir / "ttests.csv"
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["baseline", "p_value"])
            for row in tests:
                writer.writerow([row.baseline, repr(row.result.p_two_tailed)])
        written.append(path)
    if fmt in ("json", "both"):
        path = out_dir / "curves.json"
        path.write_text(json.dumps([c.to_json() for c in curves], indent=2) + "\n",
                        encoding="utf-8")
        written.append(path)
        path = out_dir / "ttests.json"
        path.write_text(json.dumps([{"baseline": r.baseline, **r.result.to_json()}
                                    for r in tests], indent=2) + "\n",
                        encoding="utf-8")
        written.append(path)
    return written
