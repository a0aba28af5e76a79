"""Command-line entry point.

Subcommands: gen-task, gen-all, gen-corpus, perturb, sweep-plan, score,
curve, ttest, validate. Exit codes: 0 success, 1 generation/validation/
scoring failure, 2 usage error. The default output root comes from
``SYNTHBENCH_OUT`` (falling back to the working directory).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .corpus import CorpusRecipe, read_recipe, run_recipe
from .datasets import generate_all, generate_task, validate_tree
from .evalstats import (Curve, TTestRow, accuracy, build_curve, emit_report,
                        read_predictions, ttest_curves)
from .model import (TaskId, read_split, read_sweep_plan, sweep_plan,
                    task_spec, write_sweep_plan)

OUT_ENV_VAR = "SYNTHBENCH_OUT"


def _default_out() -> str:
    return os.environ.get(OUT_ENV_VAR, ".")


def _add_out(parser: argparse.ArgumentParser, help_text: str) -> None:
    parser.add_argument("--out", default=None, help=help_text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="synthbench",
        description="Generate benchmark datasets and corpora; score predictions.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-task", help="generate one task's dataset tree")
    p.add_argument("--task", required=True, type=TaskId,
                   choices=list(TaskId), metavar="TASK")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")
    p.add_argument("--train-size", type=int, default=None,
                   help="override the training split size")
    _add_out(p, "output root (default: $SYNTHBENCH_OUT or .)")

    p = sub.add_parser("gen-all", help="generate every task's dataset tree")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")
    p.add_argument("--train-size", type=int, default=None)
    p.add_argument("--workers", type=int, default=None,
                   help="parallel task workers (default: up to 4)")
    _add_out(p, "output root (default: $SYNTHBENCH_OUT or .)")

    p = sub.add_parser("gen-corpus", help="synthesize a corpus from a recipe")
    p.add_argument("--recipe", required=True, help="recipe JSON path")
    p.add_argument("--vocab", default=None,
                   help="override the recipe's vocabulary source text")
    _add_out(p, "output corpus path")

    p = sub.add_parser("perturb", help="sort or shuffle an existing corpus")
    p.add_argument("--recipe", default=None, help="recipe JSON path")
    p.add_argument("--mode", choices=("sort", "shuffle"), default=None,
                   help="shorthand when no recipe file is given")
    p.add_argument("--source", default=None)
    p.add_argument("--seed", type=int, default=0)
    _add_out(p, "output corpus path")

    p = sub.add_parser("sweep-plan", help="write the training-size sweep plan")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--runs", type=int, default=None,
                   help="uniform run-count override (default: 10 below 1000, else 5)")
    _add_out(p, "output JSON path")

    p = sub.add_parser("score", help="score prediction files against a gold split")
    p.add_argument("--task", required=True, type=TaskId,
                   choices=list(TaskId), metavar="TASK")
    p.add_argument("--gold", required=True, help="gold split file (jsonl/tsv)")
    p.add_argument("--preds", required=True,
                   help="prediction TSV, or a directory of size{S}_run{R}.tsv")
    _add_out(p, "cells JSON output (directory input only)")

    p = sub.add_parser("curve", help="aggregate scored cells into a curve report")
    p.add_argument("--cells", required=True, help="cells JSON from `score`")
    p.add_argument("--plan", required=True, help="sweep plan JSON")
    p.add_argument("--model-id", default="model")
    p.add_argument("--task", default="")
    p.add_argument("--format", choices=("csv", "json", "both"), default="both")
    _add_out(p, "report directory")

    p = sub.add_parser("ttest", help="paired t-test between two curve files")
    p.add_argument("--a", required=True, help="curves JSON for the candidate")
    p.add_argument("--b", required=True, help="curves JSON for the baseline")
    p.add_argument("--label", default=None, help="baseline label in the table")
    p.add_argument("--format", choices=("csv", "json", "both"), default="both")
    _add_out(p, "report directory")

    p = sub.add_parser("validate", help="validate generated dataset trees")
    p.add_argument("--data", required=True,
                   help="a task directory, or a root containing task directories")
    p.add_argument("--task", type=TaskId, choices=list(TaskId), default=None,
                   metavar="TASK")
    return parser


def _cmd_gen_task(args) -> int:
    out = args.out or _default_out()
    spec = task_spec(args.task)
    if args.train_size is not None:
        spec = spec.with_sizes(train=args.train_size)
    config = {"command": "gen-task", "task": args.task.value, "seed": args.seed,
              "format": args.format, "train_size": args.train_size, "out": str(out)}
    manifest = generate_task(out, args.task, args.seed, fmt=args.format,
                             spec=spec, config=config)
    print(f"{args.task.value}: wrote {sum(manifest.sizes.values())} examples "
          f"under {Path(out) / args.task.value}")
    return 0


def _cmd_gen_all(args) -> int:
    out = args.out or _default_out()
    config = {"command": "gen-all", "seed": args.seed, "format": args.format,
              "train_size": args.train_size, "out": str(out)}
    manifests = generate_all(out, args.seed, fmt=args.format, workers=args.workers,
                             train_size=args.train_size, config=config)
    total = sum(sum(m.sizes.values()) for m in manifests.values())
    print(f"wrote {len(manifests)} tasks, {total} examples under {out}")
    return 0


def _cmd_gen_corpus(args) -> int:
    recipe = read_recipe(args.recipe)
    if args.vocab is not None:
        recipe = CorpusRecipe.from_json({**recipe.to_json(), "source": args.vocab})
    out = args.out or str(Path(_default_out()) / f"{recipe.kind}.txt")
    stats = run_recipe(recipe, out)
    print(f"{recipe.kind}: {stats['sentences']} sentences, "
          f"{stats['tokens']} tokens, {stats['types']} types -> {out}")
    return 0


def _cmd_perturb(args) -> int:
    if args.recipe:
        recipe = read_recipe(args.recipe)
    elif args.mode and args.source:
        recipe = CorpusRecipe(kind=f"perturb_{args.mode}", source=args.source,
                              seed=args.seed)
    else:
        print("perturb: provide --recipe, or both --mode and --source",
              file=sys.stderr)
        return 2
    if recipe.kind not in ("perturb_sort", "perturb_shuffle", "passthrough"):
        print(f"perturb: recipe kind {recipe.kind!r} is not a perturbation",
              file=sys.stderr)
        return 2
    out = args.out or str(Path(_default_out()) / f"{recipe.kind}.txt")
    stats = run_recipe(recipe, out)
    print(f"{recipe.kind}: {stats['sentences']} sentences -> {out}")
    return 0


def _cmd_sweep_plan(args) -> int:
    out = args.out or str(Path(_default_out()) / "sweep_plan.json")
    plan = sweep_plan(args.seed, runs_override=args.runs)
    write_sweep_plan(plan, out)
    print(f"sweep plan: {len(plan.sizes)} sizes -> {out}")
    return 0


def _cmd_score(args) -> int:
    gold = read_split(args.gold, args.task)
    preds_path = Path(args.preds)
    if preds_path.is_dir():
        cells = []
        for path in sorted(preds_path.glob("size*_run*.tsv")):
            stem = path.stem  # size{S}_run{R}
            size_part, run_part = stem.split("_")
            size, run = int(size_part.removeprefix("size")), int(run_part.removeprefix("run"))
            acc = accuracy(read_predictions(path), gold)
            cells.append({"task": args.task.value, "size": size, "run": run,
                          "accuracy": acc})
        if not cells:
            print(f"score: no size*_run*.tsv files under {preds_path}", file=sys.stderr)
            return 1
        out = args.out or str(preds_path / "cells.json")
        Path(out).write_text(json.dumps(cells, indent=2) + "\n", encoding="utf-8")
        print(f"scored {len(cells)} cells -> {out}")
        return 0
    acc = accuracy(read_predictions(preds_path), gold)
    print(f"accuracy: {acc:.6f}")
    if args.out:
        Path(args.out).write_text(
            json.dumps({"task": args.task.value, "accuracy": acc}) + "\n",
            encoding="utf-8")
    return 0


def _cmd_curve(args) -> int:
    cells_list = json.loads(Path(args.cells).read_text(encoding="utf-8"))
    plan = read_sweep_plan(args.plan)
    cells = {(c["size"], c["run"]): c["accuracy"] for c in cells_list}
    task = args.task or (cells_list[0].get("task", "") if cells_list else "")
    curve = build_curve(cells, plan, model_id=args.model_id, task=task)
    out = args.out or _default_out()
    written = emit_report([curve], [], out, fmt=args.format)
    print(f"curve: {len(curve.points)} points -> {', '.join(map(str, written))}")
    return 0


def _load_curves(path: str) -> list[Curve]:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(obj, dict):
        obj = [obj]
    return [Curve.from_json(c) for c in obj]


def _cmd_ttest(args) -> int:
    curves_a = _load_curves(args.a)
    curves_b = _load_curves(args.b)
    result = ttest_curves(curves_a, curves_b)
    label = args.label or curves_b[0].model_id
    out = args.out or _default_out()
    written = emit_report([], [TTestRow(baseline=label, result=result)], out,
                          fmt=args.format)
    print(f"t={result.t:.4f} df={result.df} p={result.p_two_tailed:.3e} "
          f"-> {', '.join(map(str, written))}")
    return 0


def _cmd_validate(args) -> int:
    root = Path(args.data)
    if (root / "manifest.json").exists():
        dirs = [root]
    elif args.task is not None:
        dirs = [root / args.task.value]
    else:
        dirs = sorted(d for d in root.iterdir()
                      if d.is_dir() and (d / "manifest.json").exists())
    if not dirs:
        print(f"validate: no task directories under {root}", file=sys.stderr)
        return 1
    failures = 0
    for task_dir in dirs:
        report = validate_tree(task_dir)
        print(report.summary())
        failures += not report.ok
    return 1 if failures else 0


_COMMANDS = {
    "gen-task": _cmd_gen_task,
    "gen-all": _cmd_gen_all,
    "gen-corpus": _cmd_gen_corpus,
    "perturb": _cmd_perturb,
    "sweep-plan": _cmd_sweep_plan,
    "score": _cmd_score,
    "curve": _cmd_curve,
    "ttest": _cmd_ttest,
    "validate": _cmd_validate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except Exception as e:  # noqa: BLE001 - single boundary for exit-code 1
        print(f"synthbench {args.command}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
