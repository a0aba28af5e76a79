#!/usr/bin/env python3
"""Generate the full benchmark: 19 task datasets, the sweep plan, and the
three synthetic corpora, under one output root.

    python scripts/generate_benchmark.py --out artifacts --seed 7
    python scripts/generate_benchmark.py --out artifacts --seed 7 --desk-scale
"""

import argparse
import sys
import time
from pathlib import Path

from synthbench.cli import main as cli
from synthbench.corpus import CorpusRecipe, run_recipe


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="artifacts")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--workers", type=int, default=4)
    parser.add_argument("--desk-scale", action="store_true",
                        help="small corpora and vocabularies for laptop runs")
    args = parser.parse_args()

    out = Path(args.out)
    data_dir = out / "data"
    corpora_dir = out / "corpora"
    corpora_dir.mkdir(parents=True, exist_ok=True)

    started = time.time()
    if cli(["gen-all", "--seed", str(args.seed), "--out", str(data_dir),
            "--workers", str(args.workers)]):
        return 1
    if cli(["sweep-plan", "--seed", str(args.seed),
            "--out", str(out / "sweep_plan.json")]):
        return 1
    if cli(["validate", "--data", str(data_dir)]):
        return 1

    sentence_count = 20_000 if args.desk_scale else 100_000
    vocab_size = 2_000 if args.desk_scale else 30_000
    # Synthetic word inventory for zipf/uniform when no natural text is at
    # hand; swap `source` for a real line-segmented corpus to mirror one.
    seed_text = corpora_dir / "_vocab_source.txt"
    base = run_recipe(CorpusRecipe(kind="synthetic_vocab", seed=args.seed,
                                   sentence_count=max(vocab_size, 5_000) // 2,
                                   sentence_length_range=(5, 30)),
                      seed_text)
    print(f"vocab source: {base['types']} types")

    for kind in ("zipf", "uniform", "synthetic_vocab"):
        recipe = CorpusRecipe(kind=kind, seed=args.seed,
                              sentence_count=sentence_count,
                              source=None if kind == "synthetic_vocab" else str(seed_text),
                              vocab_size=vocab_size)
        stats = run_recipe(recipe, corpora_dir / f"{kind}.txt")
        slope = stats["zipf_slope"]
        print(f"{kind}: {stats['tokens']} tokens, {stats['types']} types, "
              f"slope {slope if slope is None else round(slope, 3)}")

    print(f"done in {time.time() - started:.0f}s -> {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
