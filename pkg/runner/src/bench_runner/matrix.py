"""Run a JSON-described matrix of fine-tuning cells."""

from __future__ import annotations

import json
from pathlib import Path

from .finetune import finetune_and_predict
from .presets import RunDescriptor


def load_matrix(path: str | Path) -> dict:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    obj["runs"] = [RunDescriptor.from_json(r) for r in obj["runs"]]
    return obj


def run_matrix(matrix: dict, progress=None) -> list[dict]:
    """Execute every descriptor; refuses matrices whose cells collide."""
    runs: list[RunDescriptor] = matrix["runs"]
    out_dir = Path(matrix["out_dir"])
    paths = [d.cell_path() for d in runs]
    if len(set(paths)) != len(paths):
        dupes = sorted({p for p in paths if paths.count(p) > 1})
        raise ValueError(f"matrix cells collide on {dupes[:3]}")

    results = []
    for descriptor, rel in zip(runs, paths):
        info = finetune_and_predict(descriptor, matrix["dataset_root"],
                                    out_path=out_dir / rel)
        info.pop("predictions")
        results.append(info)
        if progress:
            progress(f"{rel}: acc={info['test_accuracy']:.3f} "
                     f"steps={info['steps']}")
    (out_dir / "matrix_results.json").write_text(
        json.dumps(results, indent=2) + "\n", encoding="utf-8")
    return results
