"""Dataset assembly: balanced, globally-deduplicated splits, on-disk trees
with checksummed manifests, and conformance validation.

Split layout per task directory:

    <task>/train.jsonl  <task>/dev.jsonl  <task>/test.jsonl  <task>/manifest.json

Generation is deterministic in (task, seed, version): each split consumes
its own derived random stream, splits are assembled in train/dev/test order
against one shared seen-input set, and example order within a split is a
seeded shuffle. Distinct tasks are independent, so generating them in
parallel worker processes reproduces the sequential output byte for byte.
"""

from __future__ import annotations

import concurrent.futures
import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .dispatch import generate_example
from .model import (Example, SPLITS, TaskId, TaskSpec, allocate_label_counts,
                    read_split, task_spec, write_split)
from .numeric import GenerationError
from .seeds import derive_stream

GENERATOR_VERSION = "1"
MAX_DUPLICATE_ATTEMPTS = 10 ** 6

# Tolerated relative deviation from the target per-label count.
BINARY_BALANCE_TOL = 0.02
TENWAY_BALANCE_TOL = 0.05


def sha256_file(path: Path | str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


@dataclass(frozen=True)
class Manifest:
    task: str
    seed: int
    version: str
    fmt: str
    sizes: dict[str, int]
    checksums: dict[str, str]
    config: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"task": self.task, "seed": self.seed, "version": self.version,
                "format": self.fmt, "sizes": self.sizes,
                "checksums": self.checksums, "config": self.config}

    @classmethod
    def from_json(cls, obj: dict) -> "Manifest":
        return cls(task=obj["task"], seed=obj["seed"], version=obj["version"],
                   fmt=obj["format"], sizes=obj["sizes"],
                   checksums=obj["checksums"], config=obj.get("config", {}))


def read_manifest(path: Path | str) -> Manifest:
    return Manifest.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


# ---------------------------------------------------------------------------
# Building
# ---------------------------------------------------------------------------


def _unique_example(task, label, rng, seen: set[str]) -> Example:
    for _ in range(MAX_DUPLICATE_ATTEMPTS):
        ex = generate_example(task, label, rng)
        if ex.input not in seen:
            seen.add(ex.input)
            return ex
    raise GenerationError(
        f"{task}: duplicate-input constraint exhausted for label {label}")


def build_task_dataset(task: TaskId, seed: int,
                       spec: TaskSpec | None = None) -> dict[str, list[Example]]:
    """All splits for one task, balanced per label and globally deduplicated."""
    task = TaskId(task)
    spec = spec or task_spec(task)
    allocation = allocate_label_counts(spec)
    seen: set[str] = set()
    splits: dict[str, list[Example]] = {}
    for split in SPLITS:
        rng = derive_stream(seed, task.value, split, "payload")
        examples: list[Example] = []
        for label, count in enumerate(allocation[split]):
            for _ in range(count):
                examples.append(_unique_example(task, label, rng, seen))
        derive_stream(seed, task.value, split, "order").shuffle(examples)
        splits[split] = examples
    return splits


def write_task_tree(out_root: Path | str, task: TaskId, seed: int,
                    splits: dict[str, list[Example]], fmt: str = "jsonl",
                    config: dict | None = None) -> Manifest:
    task = TaskId(task)
    task_dir = Path(out_root) / task.value
    task_dir.mkdir(parents=True, exist_ok=True)
    checksums = {}
    for split, examples in splits.items():
        path = task_dir / f"{split}.{fmt}"
        write_split(examples, path, fmt)
        checksums[split] = sha256_file(path)
    manifest = Manifest(task=task.value, seed=seed, version=GENERATOR_VERSION,
                        fmt=fmt, sizes={s: len(x) for s, x in splits.items()},
                        checksums=checksums, config=config or {})
    (task_dir / "manifest.json").write_text(
        json.dumps(manifest.to_json(), indent=2) + "\n", encoding="utf-8")
    return manifest


def generate_task(out_root: Path | str, task: TaskId, seed: int,
                  fmt: str = "jsonl", spec: TaskSpec | None = None,
                  config: dict | None = None) -> Manifest:
    task = TaskId(task)
    splits = build_task_dataset(task, seed, spec=spec)
    return write_task_tree(out_root, task, seed, splits, fmt=fmt, config=config)


def _generate_task_worker(args) -> tuple[str, Manifest]:
    out_root, task_value, seed, fmt, train_size, config = args
    task = TaskId(task_value)
    spec = task_spec(task)
    if train_size is not None:
        spec = spec.with_sizes(train=train_size)
    manifest = generate_task(out_root, task, seed, fmt=fmt, spec=spec, config=config)
    return task_value, manifest


def generate_all(out_root: Path | str, seed: int, tasks=None, fmt: str = "jsonl",
                 workers: int | None = None, train_size: int | None = None,
                 config: dict | None = None) -> dict[str, Manifest]:
    """Generate every requested task directory, tasks in parallel workers."""
    tasks = [TaskId(t) for t in (tasks or list(TaskId))]
    if workers is None:
        workers = min(4, os.cpu_count() or 1, len(tasks))
    jobs = [(str(out_root), t.value, seed, fmt, train_size, config) for t in tasks]
    manifests: dict[str, Manifest] = {}
    if workers <= 1:
        for job in jobs:
            name, manifest = _generate_task_worker(job)
            manifests[name] = manifest
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            for name, manifest in pool.map(_generate_task_worker, jobs):
                manifests[name] = manifest
    return manifests


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    message: str = ""


@dataclass
class ValidationReport:
    task: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, message: str = "") -> None:
        self.checks.append(CheckResult(name, ok, message))

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok]

    def summary(self) -> str:
        lines = [f"{self.task}: {'ok' if self.ok else 'FAILED'}"]
        for c in self.checks:
            status = "ok" if c.ok else "FAIL"
            lines.append(f"  [{status}] {c.name}" + (f": {c.message}" if c.message else ""))
        return "\n".join(lines)


def validate_dataset(splits: dict[str, list[Example]],
                     spec: TaskSpec) -> ValidationReport:
    """Check split sizes, duplicate hygiene, label space, and label balance.

    Balance is judged against the allocator's per-label targets, which equal
    the exactly-balanced share except for labels whose finite input space
    cannot fill it.
    """
    report = ValidationReport(task=spec.task.value)

    for split, expected in spec.sizes.items():
        actual = len(splits.get(split, ()))
        report.add(f"size:{split}", actual == expected,
                   f"expected {expected}, found {actual}")

    seen: dict[str, str] = {}
    dup_within, dup_across = [], []
    for split in SPLITS:
        for ex in splits.get(split, ()):
            origin = seen.get(ex.input)
            if origin == split:
                dup_within.append((split, ex.input))
            elif origin is not None:
                dup_across.append((origin, split, ex.input))
            else:
                seen[ex.input] = split
    report.add("duplicates:within-split", not dup_within,
               f"{len(dup_within)} duplicated inputs" if dup_within else "")
    report.add("duplicates:across-splits", not dup_across,
               f"{len(dup_across)} leaked inputs" if dup_across else "")

    bad_labels = [ex.label for exs in splits.values() for ex in exs
                  if not 0 <= ex.label < spec.num_labels]
    report.add("label-space", not bad_labels,
               f"{len(bad_labels)} labels outside 0..{spec.num_labels - 1}"
               if bad_labels else "")

    tol = BINARY_BALANCE_TOL if spec.num_labels == 2 else TENWAY_BALANCE_TOL
    targets = allocate_label_counts(spec)
    for split in SPLITS:
        examples = splits.get(split, ())
        counts = [0] * spec.num_labels
        for ex in examples:
            if 0 <= ex.label < spec.num_labels:
                counts[ex.label] += 1
        worst = max(
            (abs(c - t) / t if t else float(c > 0)
             for c, t in zip(counts, targets[split])),
            default=0.0,
        )
        report.add(f"balance:{split}", worst <= tol,
                   f"worst relative deviation {worst:.3f} (tolerance {tol})")
    return report


def validate_tree(task_dir: Path | str) -> ValidationReport:
    """Validate an on-disk task directory, including manifest checksums."""
    task_dir = Path(task_dir)
    manifest = read_manifest(task_dir / "manifest.json")
    task = TaskId(manifest.task)
    spec = task_spec(task)
    if manifest.sizes != spec.sizes:
        spec = spec.with_sizes(**manifest.sizes)

    splits = {}
    report = ValidationReport(task=task.value)
    for split in SPLITS:
        path = task_dir / f"{split}.{manifest.fmt}"
        if not path.exists():
            report.add(f"file:{split}", False, f"{path.name} missing")
            continue
        digest = sha256_file(path)
        report.add(f"checksum:{split}", digest == manifest.checksums.get(split),
                   "" if digest == manifest.checksums.get(split)
                   else f"checksum mismatch for {path.name}")
        splits[split] = read_split(path, task, fmt=manifest.fmt)
    report.checks.extend(validate_dataset(splits, spec).checks)
    return report
