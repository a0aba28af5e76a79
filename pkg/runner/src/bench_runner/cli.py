"""Command line: pretrain a checkpoint, run one cell, or run a matrix."""

from __future__ import annotations

import argparse
import sys

from .finetune import finetune_and_predict
from .matrix import load_matrix, run_matrix
from .presets import PRESETS, RunDescriptor
from .pretrain import pretrain_mlm


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bench-runner")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pretrain", help="MLM-pretrain a checkpoint on a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--preset", default="tiny", choices=sorted(PRESETS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epochs", type=int, default=2)
    p.add_argument("--batch-size", type=int, default=64)
    p.add_argument("--lr", type=float, default=3e-4)
    p.add_argument("--max-len", type=int, default=32)
    p.add_argument("--vocab-size", type=int, default=8000)

    p = sub.add_parser("finetune", help="train one (task, size, run) cell")
    p.add_argument("--data", required=True, help="dataset root directory")
    p.add_argument("--task", required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--run", type=int, default=0)
    p.add_argument("--preset", default="tiny", choices=sorted(PRESETS))
    p.add_argument("--init", default="random",
                   choices=("random", "pretrained-checkpoint"))
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--base-seed", type=int, default=0)
    p.add_argument("--epochs", type=int, default=None)
    p.add_argument("--out", required=True, help="prediction TSV path")

    p = sub.add_parser("matrix", help="run every cell in a matrix JSON")
    p.add_argument("--file", required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "pretrain":
            history = pretrain_mlm(args.corpus, args.out, preset=args.preset,
                                   seed=args.seed, epochs=args.epochs,
                                   batch_size=args.batch_size, lr=args.lr,
                                   max_len=args.max_len,
                                   vocab_size=args.vocab_size)
            print(f"pretrained: {history['steps']} steps, "
                  f"loss {history['first_loss']:.3f} -> {history['final_loss']:.3f}")
        elif args.command == "finetune":
            descriptor = RunDescriptor(
                task=args.task, size=args.size, run=args.run,
                preset=args.preset, init=args.init, checkpoint=args.checkpoint,
                base_seed=args.base_seed, epochs=args.epochs)
            info = finetune_and_predict(descriptor, args.data, out_path=args.out)
            print(f"{args.task} size={args.size} run={args.run}: "
                  f"acc={info['test_accuracy']:.3f} -> {info['out_path']}")
        else:
            results = run_matrix(load_matrix(args.file), progress=print)
            print(f"matrix: {len(results)} cells done")
        return 0
    except Exception as e:  # noqa: BLE001 - single boundary for exit-code 1
        print(f"bench-runner {args.command}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
