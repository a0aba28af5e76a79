"""Dataset-tree and corpus file access (read side of the file contracts)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Record:
    text: str
    label: int


def read_manifest(task_dir: Path | str) -> dict:
    return json.loads((Path(task_dir) / "manifest.json").read_text(encoding="utf-8"))


def read_records(path: Path | str, fmt: str) -> list[Record]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            if fmt == "jsonl":
                obj = json.loads(line)
                out.append(Record(obj["input"], int(obj["label"])))
            else:
                text, label = line.rsplit("\t", 1)
                out.append(Record(text, int(label)))
    return out


def load_split(task_dir: Path | str, split: str) -> list[Record]:
    manifest = read_manifest(task_dir)
    fmt = manifest.get("format", "jsonl")
    return read_records(Path(task_dir) / f"{split}.{fmt}", fmt)


def label_space_size(task_dir: Path | str) -> int:
    top = 0
    for split in ("train", "dev", "test"):
        for record in load_split(task_dir, split):
            top = max(top, record.label)
    return top + 1


def read_corpus(path: Path | str) -> list[str]:
    lines = Path(path).read_text(encoding="utf-8").split("\n")
    return [line for line in lines if line.strip()]


def write_predictions(labels: list[int], path: Path | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for i, label in enumerate(labels):
            fh.write(f"{i}\t{label}\n")
    return path
