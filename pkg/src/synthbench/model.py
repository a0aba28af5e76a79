"""Core data model shared by all task families.

Task identifiers, per-task specifications (label spaces, operand ranges,
split sizes), the Example record, dataset file io (JSONL/TSV), sweep plans,
label allocation, and deterministic training-pool subsampling.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .seeds import derive_stream

SPLITS = ("train", "dev", "test")


class TaskId(str, enum.Enum):
    """The 19 classification tasks. Values are the stable on-disk names."""

    ODD = "odd"
    EVEN = "even"
    ODD_EVEN = "odd_even"
    DECIMAL_OP = "decimal_op"
    DECIMAL_WORD_OP = "decimal_word_op"
    MEAN = "mean"
    MEDIAN = "median"
    MODE = "mode"
    REGEX_012 = "regex_012"
    REGEX_ABCDE = "regex_abcde"
    PALINDROME = "palindrome"
    ANAGRAM = "anagram"
    ISOGRAM = "isogram"
    TAUTONYM = "tautonym"
    STR_LENGTH = "str_length"
    UNIQUE_COUNT = "unique_count"
    PARITY = "parity"
    VOWELS = "vowels"
    MAX_FREQ_CHAR = "max_freq_char"

    def __str__(self) -> str:  # argparse/help friendliness
        return self.value


NUMERIC_TASKS = frozenset({
    TaskId.ODD, TaskId.EVEN, TaskId.ODD_EVEN, TaskId.DECIMAL_OP,
    TaskId.DECIMAL_WORD_OP, TaskId.MEAN, TaskId.MEDIAN, TaskId.MODE,
})
REGEX_TASKS = frozenset({TaskId.REGEX_012, TaskId.REGEX_ABCDE})
STRING_TASKS = frozenset({
    TaskId.PALINDROME, TaskId.ANAGRAM, TaskId.ISOGRAM, TaskId.TAUTONYM,
    TaskId.STR_LENGTH, TaskId.UNIQUE_COUNT, TaskId.PARITY, TaskId.VOWELS,
    TaskId.MAX_FREQ_CHAR,
})


class ParseError(ValueError):
    """A dataset record could not be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class RangeError(ValueError):
    """A payload or argument falls outside a task's stated bounds."""


@dataclass(frozen=True)
class Example:
    """One classification instance: rendered input string and class label."""

    input: str
    label: int


@dataclass(frozen=True)
class TaskSpec:
    """Identity, label space, operand bounds, and split sizes for one task.

    ``label_capacity`` lists labels whose entire input space is finite and
    smaller than a balanced share; the allocator caps those labels and
    redistributes the deficit (10-way tasks with tiny classes cannot be both
    globally deduplicated and exactly balanced).
    """

    task: TaskId
    num_labels: int
    input_range: dict[str, tuple[int, int]]
    train_size: int = 10_000
    dev_size: int = 1_000
    test_size: int = 1_000
    label_capacity: dict[int, int] = field(default_factory=dict)

    @property
    def sizes(self) -> dict[str, int]:
        return {"train": self.train_size, "dev": self.dev_size, "test": self.test_size}

    @property
    def labels(self) -> range:
        return range(self.num_labels)

    def with_sizes(self, train: int | None = None, dev: int | None = None,
                   test: int | None = None) -> "TaskSpec":
        return TaskSpec(
            task=self.task,
            num_labels=self.num_labels,
            input_range=self.input_range,
            train_size=self.train_size if train is None else train,
            dev_size=self.dev_size if dev is None else dev,
            test_size=self.test_size if test is None else test,
            label_capacity=self.label_capacity,
        )


def _binary(task: TaskId, input_range, **kw) -> TaskSpec:
    return TaskSpec(task=task, num_labels=2, input_range=input_range, **kw)


def _tenway(task: TaskId, input_range, **kw) -> TaskSpec:
    return TaskSpec(task=task, num_labels=10, input_range=input_range, **kw)


# Finite-class capacities, from exact combinatorics:
#   str_length label 1 -> 26 one-letter strings, label 2 -> 26**2
#   unique_count label 1 -> 10 letters x 21 lengths
TASK_SPECS: dict[TaskId, TaskSpec] = {
    TaskId.ODD: _binary(TaskId.ODD, {"n": (1, 20_000)}),
    TaskId.EVEN: _binary(TaskId.EVEN, {"n": (1, 20_000)}),
    TaskId.ODD_EVEN: _binary(TaskId.ODD_EVEN, {"n": (1, 20_000)}),
    TaskId.DECIMAL_OP: _tenway(
        TaskId.DECIMAL_OP, {"operand": (1, 10_000), "result": (0, 9)}),
    TaskId.DECIMAL_WORD_OP: _tenway(
        TaskId.DECIMAL_WORD_OP, {"operand": (1, 10_000), "result": (0, 9)}),
    TaskId.MEAN: _tenway(
        TaskId.MEAN, {"value": (-15, 15), "length": (5, 15), "result": (0, 9)}),
    TaskId.MEDIAN: _tenway(
        TaskId.MEDIAN, {"value": (-15, 15), "length": (5, 15), "result": (0, 9)}),
    TaskId.MODE: _tenway(
        TaskId.MODE, {"value": (0, 9), "length": (5, 15), "result": (0, 9)}),
    TaskId.REGEX_012: _binary(
        TaskId.REGEX_012, {"length": (1, 20)}, test_size=2_000),
    TaskId.REGEX_ABCDE: _binary(
        TaskId.REGEX_ABCDE, {"length": (1, 30)}, test_size=2_000),
    TaskId.PALINDROME: _binary(TaskId.PALINDROME, {"length": (1, 15)}),
    TaskId.ANAGRAM: _binary(TaskId.ANAGRAM, {"length": (2, 15)}),
    TaskId.ISOGRAM: _binary(TaskId.ISOGRAM, {"length": (1, 52)}),
    TaskId.TAUTONYM: _binary(TaskId.TAUTONYM, {"total_length": (2, 10)}),
    TaskId.STR_LENGTH: _tenway(
        TaskId.STR_LENGTH, {"length": (1, 10)},
        label_capacity={1: 26, 2: 26 ** 2}),
    TaskId.UNIQUE_COUNT: _tenway(
        TaskId.UNIQUE_COUNT, {"length": (10, 30)},
        label_capacity={1: 10 * 21}),
    TaskId.PARITY: _binary(TaskId.PARITY, {"length": (1, 20)}),
    TaskId.VOWELS: _binary(TaskId.VOWELS, {"length": (3, 10)}),
    TaskId.MAX_FREQ_CHAR: _tenway(TaskId.MAX_FREQ_CHAR, {"length": (5, 30)}),
}

assert len(TASK_SPECS) == len(TaskId) == 19


def task_spec(task: TaskId | str) -> TaskSpec:
    return TASK_SPECS[TaskId(task)]


def allocate_label_counts(spec: TaskSpec) -> dict[str, list[int]]:
    """Per-split example counts for every label.

    Balanced (n/num_labels each) except for capacity-limited labels, which
    receive a proportional share of their finite input space; the deficit is
    spread evenly over unconstrained labels. Deterministic, and the per-label
    totals across splits never exceed the label's capacity, so global
    deduplication is always satisfiable.
    """
    total = sum(spec.sizes.values())
    out: dict[str, list[int]] = {}
    for split, n in spec.sizes.items():
        base = n // spec.num_labels
        counts = [base] * spec.num_labels
        for label, cap in spec.label_capacity.items():
            counts[label] = min(counts[label], cap * n // total)
        deficit = n - sum(counts)
        open_labels = [l for l in spec.labels if l not in spec.label_capacity]
        for i in range(deficit):
            counts[open_labels[i % len(open_labels)]] += 1
        out[split] = counts
    return out


# ---------------------------------------------------------------------------
# Sweep plan
# ---------------------------------------------------------------------------

SWEEP_SIZES = (10, 20, 40, 80, 160, 320, 640, 1280, 2560, 5120,
               6000, 7000, 8000, 9000, 10000)
SMALL_SIZE_RUNS = 10
LARGE_SIZE_RUNS = 5


def runs_for_size(size: int) -> int:
    return SMALL_SIZE_RUNS if size < 1000 else LARGE_SIZE_RUNS


@dataclass(frozen=True)
class SweepPlan:
    """Training-size sweep: ordered sizes, runs per size, base seed."""

    sizes: tuple[int, ...]
    runs: tuple[int, ...]
    base_seed: int

    def __post_init__(self):
        if len(self.sizes) != len(self.runs):
            raise ValueError("sizes and runs must be parallel")

    def runs_at(self, size: int) -> int:
        return self.runs[self.sizes.index(size)]

    def cells(self) -> Iterable[tuple[int, int]]:
        for size, n_runs in zip(self.sizes, self.runs):
            for run in range(n_runs):
                yield size, run

    def to_json(self) -> dict:
        return {"sizes": list(self.sizes), "runs_per_size": list(self.runs),
                "base_seed": self.base_seed}

    @classmethod
    def from_json(cls, obj: dict) -> "SweepPlan":
        return cls(sizes=tuple(obj["sizes"]), runs=tuple(obj["runs_per_size"]),
                   base_seed=int(obj["base_seed"]))


def sweep_plan(base_seed: int, runs_override: int | None = None) -> SweepPlan:
    runs = tuple(runs_override if runs_override is not None else runs_for_size(s)
                 for s in SWEEP_SIZES)
    return SweepPlan(sizes=SWEEP_SIZES, runs=runs, base_seed=base_seed)


def write_sweep_plan(plan: SweepPlan, path: Path | str) -> None:
    Path(path).write_text(json.dumps(plan.to_json(), indent=2) + "\n", encoding="utf-8")


def read_sweep_plan(path: Path | str) -> SweepPlan:
    return SweepPlan.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


# ---------------------------------------------------------------------------
# Record io
# ---------------------------------------------------------------------------


def render_record(example: Example, fmt: str = "jsonl") -> str:
    if fmt == "jsonl":
        return json.dumps({"input": example.input, "label": example.label},
                          ensure_ascii=False, separators=(",", ":"))
    if fmt == "tsv":
        return f"{example.input}\t{example.label}"
    raise ValueError(f"unknown format: {fmt}")


def parse_example(task: TaskId, line: str, line_number: int | None = None,
                  fmt: str = "jsonl") -> Example:
    """Parse one dataset record back into an Example."""
    spec = task_spec(task)
    if fmt == "jsonl":
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", line_number) from e
        if not isinstance(obj, dict) or "input" not in obj or "label" not in obj:
            raise ParseError("record must carry 'input' and 'label'", line_number)
        text, label = obj["input"], obj["label"]
    elif fmt == "tsv":
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError("expected exactly one tab", line_number)
        text = parts[0]
        try:
            label = int(parts[1])
        except ValueError as e:
            raise ParseError(f"label is not an integer: {parts[1]!r}", line_number) from e
    else:
        raise ValueError(f"unknown format: {fmt}")
    if not isinstance(text, str) or not text:
        raise ParseError("input must be a nonempty string", line_number)
    if not isinstance(label, int) or isinstance(label, bool):
        raise ParseError("label must be an integer", line_number)
    if not 0 <= label < spec.num_labels:
        raise ParseError(f"label {label} outside 0..{spec.num_labels - 1}", line_number)
    return Example(text, label)


def write_split(examples: Sequence[Example], path: Path | str, fmt: str = "jsonl") -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for ex in examples:
            fh.write(render_record(ex, fmt))
            fh.write("\n")


def read_split(path: Path | str, task: TaskId, fmt: str | None = None) -> list[Example]:
    path = Path(path)
    if fmt is None:
        fmt = "tsv" if path.suffix == ".tsv" else "jsonl"
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for i, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            out.append(parse_example(task, line, line_number=i, fmt=fmt))
    return out


# ---------------------------------------------------------------------------
# Subsampling
# ---------------------------------------------------------------------------


def subsample_training_set(pool: Sequence[Example], task: TaskId, size: int,
                           run: int, base_seed: int) -> list[Example]:
    """Draw ``size`` examples uniformly without replacement from the pool.

    The draw is keyed by (task, size, run, base_seed): identical arguments
    reproduce the identical subset; distinct runs are independent draws.
    A full-size draw returns the pool in its stored order.
    """
    if size > len(pool):
        raise RangeError(f"requested {size} examples from a pool of {len(pool)}")
    if size == len(pool):
        return list(pool)
    rng = derive_stream(base_seed, "subsample", TaskId(task).value, size, run)
    return rng.sample(list(pool), size)
